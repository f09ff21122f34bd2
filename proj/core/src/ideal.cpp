#include "mideal/ideal.hpp"

#include <algorithm>

namespace mideal {

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.arity() != ring_.var_count())
      throw RingMismatchError("ideal construction: generator arity mismatch");
  minimalize_candidates(gens_);
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens, bool)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal canonical_unsafe(Ring ring, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ring), std::move(gens), true);
}

MonomialIdeal MonomialIdeal::zero(Ring ring) {
  return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  int n = ring.var_count();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.arity() != ring_.var_count())
    throw RingMismatchError("membership: arity mismatch");
  return contains(std::span<const Exponent>(m.exponents()));
}

bool MonomialIdeal::contains(std::span<const Exponent> exps) const {
  for (const auto& g : gens_)
    if (divides(g.exponents(), exps))
      return true;
  return false;
}

std::vector<Exponent> MonomialIdeal::max_exponents() const {
  std::vector<Exponent> mx(static_cast<size_t>(ring_.var_count()), 0);
  for (const auto& g : gens_)
    for (size_t i = 0; i < mx.size(); ++i)
      mx[i] = std::max(mx[i], g.exponent(static_cast<int>(i)));
  return mx;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_, "equals");
  return gens_ == other.gens_;
}

std::string MonomialIdeal::str() const {
  if (is_zero())
    return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i)
      out += ", ";
    out += gens_[i].str(ring_);
  }
  out += ")";
  return out;
}

void minimalize_candidates(std::vector<Monomial>& cands) {
  std::sort(cands.begin(), cands.end(), MonomialCanonicalLess{});
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  // Candidates arrive degree-ascending, so a divisor of cands[i] can only
  // sit among the monomials already kept.
  std::vector<Monomial> kept;
  kept.reserve(cands.size());
  for (auto& c : cands) {
    bool divisible = false;
    std::span<const Exponent> ce(c.exponents());
    for (const auto& k : kept) {
      if (divides(k.exponents(), ce)) {
        divisible = true;
        break;
      }
    }
    if (!divisible)
      kept.push_back(std::move(c));
  }
  cands = std::move(kept);
}

MonomialIdeal minimalize(std::vector<Monomial> gens, const Ring& ring) {
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "multiply");
  std::vector<Monomial> products;
  products.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators())
      products.push_back(g.times(h));
  return MonomialIdeal(a.ring(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1)
    throw PreconditionError("power: k must be >= 1");
  MonomialIdeal out = ideal;
  for (int i = 1; i < k; ++i)
    out = multiply(out, ideal);
  return out;
}

MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& w) {
  if (w.arity() != ideal.ring().var_count())
    throw RingMismatchError("colon: arity mismatch");
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators())
    quotients.push_back(g.colon_by(w));
  return MonomialIdeal(ideal.ring(), std::move(quotients));
}

MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
  require_same_ring(ideal.ring(), divisor.ring(), "colon");
  if (divisor.is_zero())
    throw PreconditionError("colon: zero-ideal divisor");
  // Intersect colons smallest-first to keep intermediates lean.
  std::vector<MonomialIdeal> colons;
  colons.reserve(divisor.generators().size());
  for (const auto& g : divisor.generators())
    colons.push_back(colon_monomial(ideal, g));
  std::sort(colons.begin(), colons.end(),
            [](const MonomialIdeal& x, const MonomialIdeal& y) {
              return x.num_generators() < y.num_generators();
            });
  MonomialIdeal out = colons.front();
  for (size_t i = 1; i < colons.size(); ++i)
    out = intersect(out, colons[i]);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  std::vector<Monomial> lcms;
  lcms.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators())
      lcms.push_back(g.lcm(h));
  return MonomialIdeal(a.ring(), std::move(lcms));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  return ideal.contains(m);
}

bool subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "subset");
  for (const auto& g : a.generators())
    if (!b.contains(g))
      return false;
  return true;
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a == b;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> parts;
  parts.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators())
    parts.push_back(g.squarefree_part());
  return MonomialIdeal(ideal.ring(), std::move(parts));
}

std::vector<int> support(const MonomialIdeal& ideal) {
  std::vector<char> seen(static_cast<size_t>(ideal.ring().var_count()), 0);
  for (const auto& g : ideal.generators())
    for (int v : g.support())
      seen[static_cast<size_t>(v)] = 1;
  std::vector<int> vars;
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i])
      vars.push_back(static_cast<int>(i));
  return vars;
}

std::int64_t degree(const MonomialIdeal& ideal) {
  std::int64_t d = 0;
  for (const auto& g : ideal.generators())
    d = std::max(d, g.degree());
  return d;
}

} // namespace mideal
