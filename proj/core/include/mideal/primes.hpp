#ifndef MIDEAL_PRIMES_HPP
#define MIDEAL_PRIMES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mideal/ideal.hpp"

namespace mideal {

/// Monomial prime <x_i : i in vars>, vars a non-empty ascending index set.
class MonomialPrime {
public:
  MonomialPrime(Ring ring, std::vector<int> vars);

  const Ring& ring() const { return ring_; }
  const std::vector<int>& vars() const { return vars_; }
  bool is_maximal() const { return static_cast<int>(vars_.size()) == ring_.var_count(); }

  MonomialIdeal to_ideal() const;
  std::string str() const;

  bool operator==(const MonomialPrime& other) const;
  bool operator<(const MonomialPrime& other) const; // by (size, indices)

private:
  Ring ring_;
  std::vector<int> vars_;
};

/// Irreducible monomial ideal <x_i^{a_i} : a_i > 0>. At least one positive
/// entry; its radical is the prime on {i : a_i > 0}.
class IrreducibleComponent {
public:
  IrreducibleComponent(Ring ring, std::vector<Exponent> powers);

  const Ring& ring() const { return ring_; }
  const std::vector<Exponent>& powers() const { return powers_; }

  MonomialPrime radical() const;
  MonomialIdeal to_ideal() const;
  std::string str() const;

  bool operator==(const IrreducibleComponent& other) const;
  bool operator<(const IrreducibleComponent& other) const;

private:
  Ring ring_;
  std::vector<Exponent> powers_;
};

enum class AssMethod { WitnessSearch, Decomposition };

/// Result of an associated-prime computation, with the algorithm recorded.
struct AssReport {
  MonomialIdeal ideal;
  std::vector<MonomialPrime> primes; // sorted by (size, indices)
  AssMethod method;

  bool contains_prime(const MonomialPrime& p) const;
  bool same_primes(const AssReport& other) const;
};

/// Irredundant irreducible decomposition by recursive generator splitting:
/// pick a generator x^a with >= 2 support variables and split
/// I = (I + (x_i^{a_i})) ∩ (I + (x^a / x_i^{a_i})); leaves are pure-power
/// ideals. Redundant components (those containing another component) are
/// discarded, which for irreducible ideals is exactly irredundancy.
/// Requires I proper and nonzero. The result is canonical: sorted, and
/// unique by the uniqueness of irredundant irreducible decompositions.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Ass(R/I) as the radicals of the irredundant irreducible components.
AssReport associated_primes_decomp(const MonomialIdeal& ideal);

/// Sets x_j = 1 for j outside vars and reinterprets in the ring on vars.
MonomialIdeal localize(const MonomialIdeal& ideal, const std::vector<int>& vars);

struct MaximalIdealWitness {
  bool associated = false;
  std::optional<Monomial> witness; // w not in I with (I : w) = <x_1..x_n>
};

/// Is the full maximal ideal associated to R/I? Searches witnesses w over
/// the box 0 <= w_i <= M_i - 1 (M = componentwise max generator exponent);
/// any witness must lie there, since w_i >= M_i and x_i*w in I force w in I.
MaximalIdealWitness maximal_ideal_associated(const MonomialIdeal& ideal);

/// Ass(R/I) by localization: the prime on S is associated iff the maximal
/// ideal of the localized ring is associated to localize(I, S). Iterates
/// the non-empty subsets S of supp(I) only; variables off the support
/// never occur in an associated prime.
AssReport associated_primes_witness(const MonomialIdeal& ideal);

/// Ass with a method switch (witness search is the cheap default).
AssReport associated_primes(const MonomialIdeal& ideal,
                            AssMethod method = AssMethod::WitnessSearch);

/// Alexander dual of a square-free ideal: the intersection of the variable
/// primes on the generator supports; generators of the result are the
/// minimal transversals of the support hypergraph. Involution.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

} // namespace mideal

#endif
