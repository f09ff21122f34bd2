#ifndef MIDEAL_RESOLUTION_HPP
#define MIDEAL_RESOLUTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mideal/ideal.hpp"

namespace mideal {

/// Closure of the generator exponents of a nonzero proper ideal under
/// componentwise max. Grows one lcm at a time; more than `cap` elements
/// raises CapExceededError.
class LcmLattice {
public:
  LcmLattice(const MonomialIdeal& ideal, std::size_t cap = 200000);

  const MonomialIdeal& ideal() const { return ideal_; }
  /// Sorted by total degree, then by exponent vector.
  const std::vector<std::vector<Exponent>>& elements() const {
    return elements_;
  }
  std::size_t size() const { return elements_.size(); }

private:
  MonomialIdeal ideal_;
  std::vector<std::vector<Exponent>> elements_;
};

/// Finite simplicial complex on a fixed vertex list, faces as bitmasks over
/// positions in that list. The void complex (no faces at all) and the empty
/// complex (single face {}) are distinct: only the latter contains mask 0.
struct SimplicialComplex {
  std::vector<int> vertices;        // ambient labels, strictly increasing
  std::vector<std::uint32_t> faces; // sorted, downward closed

  bool is_void() const { return faces.empty(); }
  bool is_irrelevant() const { return faces.size() == 1 && faces[0] == 0; }
  int dimension() const; // -2 for void, -1 for irrelevant
};

/// Upper Koszul complex of I at exponent a: faces are the subsets S of
/// supp(a) with x^{a-S} in I. Downward closed because membership in I is
/// monotone under multiplication. Void whenever x^a is not in I.
SimplicialComplex koszul_complex(const MonomialIdeal& ideal,
                                 std::span<const Exponent> a);

/// Ranks of the reduced homology groups over Q, indexed from dimension -1:
/// result[p+1] = dim H~_p. The irrelevant complex has H~_{-1} = Q. Matrix
/// ranks come from fraction-free Gaussian elimination over exact integers.
std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& k);

/// Multigraded Betti numbers of R/I. Row 0 is the single entry beta_{0,0};
/// for i >= 1, beta_{i,a} = dim H~_{i-2} of the upper Koszul complex at a,
/// nonzero only at lcm-lattice degrees.
class BettiTable {
public:
  using Row = std::map<std::vector<Exponent>, std::int64_t>;

  void add(int i, std::vector<Exponent> degree, std::int64_t value);
  const std::map<int, Row>& rows() const { return rows_; }
  std::int64_t total(int i) const;
  int max_homological_index() const; // projective dimension of R/I
  /// Sum of (-1)^i beta_i over all rows; zero for any proper ideal.
  std::int64_t euler_characteristic() const;

private:
  std::map<int, Row> rows_;
};

BettiTable betti_numbers(const MonomialIdeal& ideal,
                         std::size_t lattice_cap = 200000);

int projective_dimension(const MonomialIdeal& ideal,
                         std::size_t lattice_cap = 200000);

/// depth R/I = var_count - pd(R/I). Variables outside the support need no
/// special handling: the lattice, and with it pd, ignores them.
int depth_quotient(const MonomialIdeal& ideal,
                   std::size_t lattice_cap = 200000);

struct DepthFunction {
  std::vector<int> depths;     // depths[k-1] = depth R/I^k
  std::vector<int> violations; // k with depth(I^k) < depth(I^{k+1})
  /// First power whose lattice blew past the cap; depths stop before it.
  std::optional<int> truncated_at_power;
};

DepthFunction depth_function(const MonomialIdeal& ideal, int kmax,
                             std::size_t lattice_cap = 200000);

} // namespace mideal

#endif
