#ifndef MIDEAL_RING_HPP
#define MIDEAL_RING_HPP

#include <string>
#include <vector>

#include "mideal/errors.hpp"

namespace mideal {

/// Ambient polynomial ring: a variable count and distinct variable names.
/// The coefficient field is never materialized; every computation in this
/// library is field-independent (homology is fixed to the rationals).
class Ring {
public:
  explicit Ring(std::vector<std::string> names);

  /// Ring with variables prefix1..prefixN (default x1..xn).
  static Ring with_vars(int n, const std::string& prefix = "x");

  int var_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a declared variable name, or -1.
  int index_of(const std::string& name) const;

  /// Sub-ring on a subset of variable indices, names preserved.
  Ring restricted_to(const std::vector<int>& vars) const;

  bool operator==(const Ring& other) const { return names_ == other.names_; }
  bool operator!=(const Ring& other) const { return !(*this == other); }

private:
  std::vector<std::string> names_;
};

/// Throws RingMismatchError unless both rings are identical.
void require_same_ring(const Ring& a, const Ring& b, const char* op);

} // namespace mideal

#endif
