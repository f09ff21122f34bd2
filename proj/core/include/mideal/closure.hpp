#ifndef MIDEAL_CLOSURE_HPP
#define MIDEAL_CLOSURE_HPP

#include <optional>

#include "mideal/ideal.hpp"

namespace mideal {

/// Newton polyhedron of a nonzero monomial ideal: the convex hull of the
/// minimal-generator exponent vectors plus the nonnegative orthant.
/// Membership is monotone: a in NP and b >= a componentwise puts b in NP.
class NewtonPolyhedron {
public:
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& vertices() const { return vertices_; }

  /// Exact rational LP feasibility: true iff some convex combination of
  /// the vertices is componentwise <= a. No floating point anywhere.
  bool contains(const Monomial& a) const;

private:
  Ring ring_;
  std::vector<Monomial> vertices_;
};

/// x^a integral over I, decided by the polyhedral criterion.
bool np_contains(const MonomialIdeal& ideal, const Monomial& a);

/// Integral closure of a nonzero monomial ideal: all monomials of the box
/// 0 <= a <= M (componentwise max of generator exponents) inside the
/// Newton polyhedron, minimalized. Every minimal generator of the closure
/// lies in that box: a_i > M_i lets a - e_i stay inside. Satisfies
/// I ⊆ result ⊆ radical(I).
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

bool is_integrally_closed(const MonomialIdeal& ideal);

/// Least k in 1..kmax whose power is not integrally closed, or nullopt.
std::optional<int> is_normal_up_to(const MonomialIdeal& ideal, int kmax);

/// Audits the colon laws of integral closures: for n >= m >= 1 both
/// (cl(I^n) : cl(I^m)) and (cl(I^n) : I^m) must equal cl(I^{n-m}), with
/// cl(I^0) the unit ideal. A false return signals an implementation bug.
bool closure_colon_identity(const MonomialIdeal& ideal, int n, int m);

} // namespace mideal

#endif
