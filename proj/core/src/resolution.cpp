#include "mideal/resolution.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "mideal/errors.hpp"
#include "mideal/primes.hpp"
#include "mideal/runtime.hpp"

namespace mideal {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::vector<Exponent> lcm_vec(const std::vector<Exponent>& a,
                              const std::vector<Exponent>& b) {
  std::vector<Exponent> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

// Rank by fraction-free (Bareiss) elimination with full pivoting. Exact
// divisions only: each 2x2 determinant update divides by the previous
// pivot, which stays an exact divisor.
std::int64_t matrix_rank(std::vector<std::vector<BigInt>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t k = 0;
  BigInt prev = 1;
  while (k < rows && k < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(m[k], m[pr]);
    if (pc != k)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pc]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
    ++k;
  }
  return static_cast<std::int64_t>(k);
}

} // namespace

LcmLattice::LcmLattice(const MonomialIdeal& ideal, std::size_t cap)
    : ideal_(ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError("lcm lattice: ideal must be proper and nonzero");

  std::set<std::vector<Exponent>> seen;
  std::vector<std::vector<Exponent>> queue;
  std::vector<std::vector<Exponent>> gens;
  for (const Monomial& g : ideal.generators()) {
    auto e = std::vector<Exponent>(g.exponents().begin(), g.exponents().end());
    gens.push_back(e);
    if (seen.insert(e).second) queue.push_back(std::move(e));
  }

  // Closing against generators only reaches every lcm of a subset, one
  // generator at a time, and keeps the frontier small.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<Exponent> cur = queue[head];
    for (const auto& g : gens) {
      std::vector<Exponent> up = lcm_vec(cur, g);
      if (seen.insert(up).second) {
        if (seen.size() > cap)
          throw CapExceededError("lcm lattice larger than cap");
        queue.push_back(std::move(up));
      }
    }
  }

  elements_.assign(seen.begin(), seen.end());
  std::sort(elements_.begin(), elements_.end(),
            [](const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
              std::int64_t da = 0, db = 0;
              for (Exponent e : a) da += e;
              for (Exponent e : b) db += e;
              if (da != db) return da < db;
              return a < b;
            });
}

int SimplicialComplex::dimension() const {
  if (faces.empty()) return -2;
  int best = -1;
  for (std::uint32_t f : faces) best = std::max(best, std::popcount(f) - 1);
  return best;
}

SimplicialComplex koszul_complex(const MonomialIdeal& ideal,
                                 std::span<const Exponent> a) {
  const int n = ideal.ring().var_count();
  if (static_cast<int>(a.size()) != n)
    throw PreconditionError("koszul complex: arity mismatch");

  SimplicialComplex k;
  for (int i = 0; i < n; ++i)
    if (a[static_cast<std::size_t>(i)] > 0) k.vertices.push_back(i);
  const std::size_t s = k.vertices.size();
  if (s > 25) throw CapExceededError("koszul complex: support too large");

  // x^a outside I voids the whole complex: membership of x^{a-e} for any
  // e would push x^a in too.
  if (!ideal.contains(a)) return k;

  std::vector<Exponent> shifted(a.begin(), a.end());
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    for (std::size_t v = 0; v < s; ++v)
      if (mask & (1u << v))
        --shifted[static_cast<std::size_t>(k.vertices[v])];
    if (ideal.contains(shifted)) k.faces.push_back(mask);
    for (std::size_t v = 0; v < s; ++v)
      if (mask & (1u << v))
        ++shifted[static_cast<std::size_t>(k.vertices[v])];
  }
  return k;
}

std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  const int dim = k.dimension();

  // faces_by_dim[p+1] lists the p-faces, keeping the complex's order.
  std::vector<std::vector<std::uint32_t>> faces_by_dim(
      static_cast<std::size_t>(dim) + 2);
  for (std::uint32_t f : k.faces)
    faces_by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // boundary_rank[p+1] = rank of d_p : C_p -> C_{p-1}; d_{-1} = 0.
  std::vector<std::int64_t> boundary_rank(
      static_cast<std::size_t>(dim) + 3, 0);
  for (int p = 0; p <= dim; ++p) {
    const auto& domain = faces_by_dim[static_cast<std::size_t>(p) + 1];
    const auto& image = faces_by_dim[static_cast<std::size_t>(p)];
    if (domain.empty() || image.empty()) continue;
    std::map<std::uint32_t, std::size_t> row_of;
    for (std::size_t i = 0; i < image.size(); ++i) row_of[image[i]] = i;
    std::vector<std::vector<BigInt>> m(image.size(),
                                       std::vector<BigInt>(domain.size()));
    for (std::size_t c = 0; c < domain.size(); ++c) {
      std::uint32_t face = domain[c];
      int sign = 1;
      for (std::uint32_t bit = face; bit;) {
        std::uint32_t low = bit & (~bit + 1);
        m[row_of.at(face ^ low)][c] = sign;
        sign = -sign;
        bit ^= low;
      }
    }
    boundary_rank[static_cast<std::size_t>(p) + 1] = matrix_rank(std::move(m));
  }

  std::vector<std::int64_t> ranks(static_cast<std::size_t>(dim) + 2, 0);
  for (int p = -1; p <= dim; ++p) {
    auto faces = static_cast<std::int64_t>(
        faces_by_dim[static_cast<std::size_t>(p) + 1].size());
    ranks[static_cast<std::size_t>(p) + 1] =
        faces - boundary_rank[static_cast<std::size_t>(p) + 1] -
        boundary_rank[static_cast<std::size_t>(p) + 2];
  }
  return ranks;
}

void BettiTable::add(int i, std::vector<Exponent> degree, std::int64_t value) {
  if (value != 0) rows_[i][std::move(degree)] += value;
}

std::int64_t BettiTable::total(int i) const {
  auto it = rows_.find(i);
  if (it == rows_.end()) return 0;
  std::int64_t sum = 0;
  for (const auto& [deg, v] : it->second) sum += v;
  return sum;
}

int BettiTable::max_homological_index() const {
  int best = 0;
  for (const auto& [i, row] : rows_)
    if (!row.empty()) best = std::max(best, i);
  return best;
}

std::int64_t BettiTable::euler_characteristic() const {
  std::int64_t sum = 0;
  for (const auto& [i, row] : rows_)
    for (const auto& [deg, v] : row) sum += (i % 2 == 0) ? v : -v;
  return sum;
}

BettiTable betti_numbers(const MonomialIdeal& ideal, std::size_t lattice_cap) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError("betti numbers: ideal must be proper and nonzero");

  const LcmLattice lattice(ideal, lattice_cap);
  const auto& elems = lattice.elements();

  std::vector<std::vector<std::int64_t>> homology(elems.size());
  parallel_for(elems.size(), [&](std::size_t idx) {
    homology[idx] = reduced_homology_ranks(koszul_complex(ideal, elems[idx]));
  });

  BettiTable table;
  table.add(0, std::vector<Exponent>(
                   static_cast<std::size_t>(ideal.ring().var_count()), 0),
            1);
  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    const auto& ranks = homology[idx];
    for (std::size_t r = 0; r < ranks.size(); ++r) {
      // ranks[r] = dim H~_{r-1}, contributing to homological index r+1.
      if (ranks[r] != 0)
        table.add(static_cast<int>(r) + 1, elems[idx], ranks[r]);
    }
  }
  return table;
}

int projective_dimension(const MonomialIdeal& ideal, std::size_t lattice_cap) {
  return betti_numbers(ideal, lattice_cap).max_homological_index();
}

int depth_quotient(const MonomialIdeal& ideal, std::size_t lattice_cap) {
  return ideal.ring().var_count() -
         projective_dimension(ideal, lattice_cap);
}

DepthFunction depth_function(const MonomialIdeal& ideal, int kmax,
                             std::size_t lattice_cap) {
  if (kmax < 1) throw PreconditionError("depth_function: kmax must be >= 1");
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError("depth_function: ideal must be proper, nonzero");

  DepthFunction out;
  MonomialIdeal pw = ideal;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) pw = multiply(pw, ideal);
    try {
      out.depths.push_back(depth_quotient(pw, lattice_cap));
    } catch (const CapExceededError&) {
      out.truncated_at_power = k;
      break;
    }
  }
  for (std::size_t i = 0; i + 1 < out.depths.size(); ++i)
    if (out.depths[i] < out.depths[i + 1])
      out.violations.push_back(static_cast<int>(i) + 1);
  return out;
}

} // namespace mideal
