#include "mideal/ring.hpp"

#include <unordered_set>

namespace mideal {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty())
    throw PreconditionError("ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty())
      throw PreconditionError("empty variable name");
    if (!seen.insert(n).second)
      throw PreconditionError("duplicate variable name: " + n);
  }
}

Ring Ring::with_vars(int n, const std::string& prefix) {
  if (n <= 0)
    throw PreconditionError("ring needs a positive variable count");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    names.push_back(prefix + std::to_string(i));
  return Ring(std::move(names));
}

int Ring::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return static_cast<int>(i);
  return -1;
}

Ring Ring::restricted_to(const std::vector<int>& vars) const {
  std::vector<std::string> names;
  names.reserve(vars.size());
  for (int v : vars)
    names.push_back(name(v));
  return Ring(std::move(names));
}

void require_same_ring(const Ring& a, const Ring& b, const char* op) {
  if (a != b)
    throw RingMismatchError(std::string(op) + ": operands live in different rings");
}

} // namespace mideal
