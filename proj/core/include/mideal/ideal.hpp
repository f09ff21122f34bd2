#ifndef MIDEAL_IDEAL_HPP
#define MIDEAL_IDEAL_HPP

#include <string>
#include <vector>

#include "mideal/monomial.hpp"
#include "mideal/ring.hpp"

namespace mideal {

/// A monomial ideal held in canonical form: the unique minimal generating
/// set, sorted by (degree, then lexicographically descending exponents).
/// Equal ideals have identical representations, so equality is a plain
/// sequence compare. The zero ideal is the empty generator list; the unit
/// ideal is the single generator 1. Values are immutable after
/// construction and safe to share across threads.
class MonomialIdeal {
public:
  /// Minimalize + sort. Generators divisible by another are dropped,
  /// duplicates collapse. Throws RingMismatchError on an arity mismatch.
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(Ring ring);
  static MonomialIdeal unit(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const;
  bool contains(std::span<const Exponent> exps) const;

  /// Componentwise max exponent of each variable over the generators.
  std::vector<Exponent> max_exponents() const;

  bool operator==(const MonomialIdeal& other) const;
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

  std::string str() const;

private:
  MonomialIdeal(Ring ring, std::vector<Monomial> gens, bool already_canonical);

  Ring ring_;
  std::vector<Monomial> gens_;

  friend MonomialIdeal canonical_unsafe(Ring ring, std::vector<Monomial> gens);
};

/// The ideal generated by gens, with every generator divisible by another
/// removed and the rest sorted canonically. Idempotent.
MonomialIdeal minimalize(std::vector<Monomial> gens, const Ring& ring);

/// In-place minimal generating set of a candidate list (dedup + drop
/// monomials divisible by another), sorted canonically.
void minimalize_candidates(std::vector<Monomial>& cands);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^k by iterated products of minimal generating sets, minimalizing after
/// each step. k >= 1; k = 0 is rejected (the unit-ideal convention is the
/// caller's to apply).
MonomialIdeal power(const MonomialIdeal& ideal, int k);

/// (I : w) = ideal of all m with m*w in I; generated by g/gcd(g,w).
MonomialIdeal colon_monomial(const MonomialIdeal& ideal, const Monomial& w);

/// (I : J) = intersection over generators g of J of (I : g).
/// J must not be the zero ideal.
MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& divisor);

/// Pairwise-lcm intersection: m in I∩J iff m in I and m in J.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// Every generator of a lies in b.
bool subset(const MonomialIdeal& a, const MonomialIdeal& b);
/// Canonical representations coincide (equivalently, mutual subset).
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// Square-free parts of the generators, minimalized.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Union of generator supports, ascending variable indices.
std::vector<int> support(const MonomialIdeal& ideal);

/// Max total degree over minimal generators; 0 for the zero ideal.
std::int64_t degree(const MonomialIdeal& ideal);

} // namespace mideal

#endif
