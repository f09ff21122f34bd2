#include "mideal/monomial.hpp"

#include <algorithm>
#include <limits>

namespace mideal {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw OverflowError("exponent overflow in monomial product");
  return a + b;
}

} // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_)
    if (e < 0)
      throw PreconditionError("negative exponent in monomial");
}

Monomial Monomial::one(int n) {
  return Monomial(std::vector<Exponent>(static_cast<size_t>(n), 0));
}

Monomial Monomial::var_power(int n, int i, Exponent e) {
  if (i < 0 || i >= n)
    throw PreconditionError("variable index out of range");
  std::vector<Exponent> exps(static_cast<size_t>(n), 0);
  exps[static_cast<size_t>(i)] = e;
  return Monomial(std::move(exps));
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (Exponent e : exps_)
    d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> vars;
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0)
      vars.push_back(static_cast<int>(i));
  return vars;
}

int Monomial::support_size() const {
  return static_cast<int>(std::count_if(exps_.begin(), exps_.end(),
                                        [](Exponent e) { return e > 0; }));
}

Monomial Monomial::times(const Monomial& other) const {
  if (arity() != other.arity())
    throw RingMismatchError("monomial product: arity mismatch");
  std::vector<Exponent> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    out[i] = checked_add(exps_[i], other.exps_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::pow(int k) const {
  if (k < 0)
    throw PreconditionError("negative monomial power");
  Monomial out = Monomial::one(arity());
  for (int i = 0; i < k; ++i)
    out = out.times(*this);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  if (arity() != other.arity())
    throw RingMismatchError("monomial gcd: arity mismatch");
  std::vector<Exponent> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    out[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (arity() != other.arity())
    throw RingMismatchError("monomial lcm: arity mismatch");
  std::vector<Exponent> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    out[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::colon_by(const Monomial& other) const {
  if (arity() != other.arity())
    throw RingMismatchError("monomial colon: arity mismatch");
  std::vector<Exponent> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    out[i] = std::max<Exponent>(exps_[i] - other.exps_[i], 0);
  return Monomial(std::move(out));
}

Monomial Monomial::squarefree_part() const {
  std::vector<Exponent> out(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    out[i] = exps_[i] > 0 ? 1 : 0;
  return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& other) const {
  if (arity() != other.arity())
    throw RingMismatchError("monomial divisibility: arity mismatch");
  return mideal::divides(exps_, other.exps_);
}

bool Monomial::canonical_less(const Monomial& other) const {
  std::int64_t da = degree(), db = other.degree();
  if (da != db)
    return da < db;
  // Within a degree, lexicographically larger exponent vector first.
  return exps_ > other.exps_;
}

std::string Monomial::str(const Ring& ring) const {
  if (ring.var_count() != arity())
    throw RingMismatchError("monomial print: arity mismatch");
  std::string out;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += ring.name(static_cast<int>(i));
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

bool divides(std::span<const Exponent> d, std::span<const Exponent> m) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i])
      return false;
  return true;
}

} // namespace mideal
