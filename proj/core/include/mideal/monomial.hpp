#ifndef MIDEAL_MONOMIAL_HPP
#define MIDEAL_MONOMIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mideal/errors.hpp"
#include "mideal/ring.hpp"

namespace mideal {

/// Exponent counts are machine-width integers; products are checked so an
/// overflow fails loudly instead of wrapping.
using Exponent = std::int32_t;

/// A monomial is an exponent vector over a fixed ambient variable set.
/// The all-zeros vector is the unit monomial 1. Immutable after
/// construction; all operations return new values.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  /// Unit monomial in n variables.
  static Monomial one(int n);
  /// x_i^e in n variables.
  static Monomial var_power(int n, int i, Exponent e = 1);

  int arity() const { return static_cast<int>(exps_.size()); }
  Exponent exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::int64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;

  /// Variable indices with positive exponent, ascending.
  std::vector<int> support() const;
  int support_size() const;

  Monomial times(const Monomial& other) const;   // overflow-checked
  Monomial pow(int k) const;                     // k >= 0, overflow-checked
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / gcd(this, w): the colon quotient used everywhere.
  Monomial colon_by(const Monomial& other) const;
  Monomial squarefree_part() const;

  bool divides(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  /// Canonical order: total degree, then lexicographically larger exponent
  /// vector first (so x^2 precedes xy precedes y^2).
  bool canonical_less(const Monomial& other) const;

  /// Render with the ring's names, e.g. "x1*x4^2"; "1" for the unit.
  std::string str(const Ring& ring) const;

private:
  std::vector<Exponent> exps_;
};

/// True when every entry of d is <= the matching entry of m.
bool divides(std::span<const Exponent> d, std::span<const Exponent> m);

struct MonomialCanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.canonical_less(b);
  }
};

} // namespace mideal

#endif
