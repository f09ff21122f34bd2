#include "mideal/closure.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mideal/errors.hpp"
#include "mideal/runtime.hpp"

namespace mideal {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Phase-one simplex deciding feasibility of
//   sum_j lambda_j * g_j <= a,  sum_j lambda_j = 1,  lambda >= 0
// over exact rationals. Slacks turn the inequalities into equations and
// give a ready basis for the first n rows; one artificial variable covers
// the convexity row. Bland's rule (lowest eligible index for both the
// entering and the leaving choice) guarantees termination.
bool convex_point_below(const std::vector<Monomial>& gens,
                        std::span<const Exponent> a) {
  const std::size_t n = a.size();
  const std::size_t t = gens.size();
  const std::size_t cols = t + n + 1; // lambdas, slacks, artificial
  const std::size_t art = t + n;

  std::vector<std::vector<Rational>> tab(n + 1,
                                         std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < t; ++j)
      tab[i][j] = gens[j].exponent(static_cast<int>(i));
    tab[i][t + i] = 1;
    tab[i][cols] = a[i];
  }
  for (std::size_t j = 0; j < t; ++j) tab[n][j] = 1;
  tab[n][art] = 1;
  tab[n][cols] = 1;

  std::vector<std::size_t> basis(n + 1);
  for (std::size_t i = 0; i < n; ++i) basis[i] = t + i;
  basis[n] = art;

  // Objective: minimize the artificial variable. With it basic in the last
  // row, the reduced-cost row is cost minus that row.
  std::vector<Rational> obj(cols + 1);
  obj[art] = 1;
  for (std::size_t j = 0; j <= cols; ++j) obj[j] -= tab[n][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = n + 1;
    Rational best;
    for (std::size_t i = 0; i <= n; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave > n || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave > n) break; // unbounded cannot happen here; bail regardless

    Rational pivot = tab[leave][enter];
    for (std::size_t j = 0; j <= cols; ++j) tab[leave][j] /= pivot;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  // Feasible iff the artificial variable reached zero: its current value
  // is the negated objective constant.
  return -obj[cols] == 0;
}

} // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal)
    : ring_(ideal.ring()), vertices_(ideal.generators()) {
  if (ideal.is_zero())
    throw PreconditionError("newton polyhedron: zero ideal has no vertices");
}

bool NewtonPolyhedron::contains(const Monomial& a) const {
  if (a.arity() != ring_.var_count())
    throw PreconditionError("newton polyhedron: arity mismatch");
  // The unit ideal's polyhedron is the whole orthant.
  for (const Monomial& g : vertices_)
    if (g.is_one()) return true;
  return convex_point_below(vertices_, a.exponents());
}

bool np_contains(const MonomialIdeal& ideal, const Monomial& a) {
  return NewtonPolyhedron(ideal).contains(a);
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal;

  const Ring& ring = ideal.ring();
  const int n = ring.var_count();
  const std::vector<Exponent> box = ideal.max_exponents();
  const NewtonPolyhedron np(ideal);

  std::int64_t min_degree = ideal.generators().front().degree();
  for (const Monomial& g : ideal.generators())
    min_degree = std::min(min_degree, g.degree());

  // Box points bucketed by total degree. Within a degree layer no point
  // divides another, so layers can be LP-tested in parallel against the
  // members found in lower layers; the merge order stays deterministic.
  std::int64_t max_degree = 0;
  for (Exponent e : box) max_degree += e;
  std::vector<std::vector<std::vector<Exponent>>> layers(
      static_cast<std::size_t>(max_degree) + 1);
  std::vector<Exponent> pt(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::int64_t deg = 0;
    for (Exponent e : pt) deg += e;
    if (deg >= min_degree) layers[static_cast<std::size_t>(deg)].push_back(pt);
    int pos = 0;
    while (pos < n && pt[static_cast<std::size_t>(pos)] ==
                          box[static_cast<std::size_t>(pos)]) {
      pt[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++pt[static_cast<std::size_t>(pos)];
  }

  std::vector<Monomial> members;
  for (auto& layer : layers) {
    if (layer.empty()) continue;
    std::vector<const std::vector<Exponent>*> open;
    for (const auto& a : layer) {
      bool covered = false;
      for (const Monomial& m : members)
        if (divides(m.exponents(), a)) {
          covered = true;
          break;
        }
      if (!covered) open.push_back(&a);
    }
    if (open.empty()) continue;
    std::vector<char> inside(open.size(), 0);
    parallel_for(open.size(), [&](std::size_t idx) {
      inside[idx] = np.contains(Monomial(*open[idx])) ? 1 : 0;
    });
    for (std::size_t idx = 0; idx < open.size(); ++idx)
      if (inside[idx]) members.emplace_back(*open[idx]);
  }

  return MonomialIdeal(ring, std::move(members));
}

bool is_integrally_closed(const MonomialIdeal& ideal) {
  return integral_closure(ideal) == ideal;
}

std::optional<int> is_normal_up_to(const MonomialIdeal& ideal, int kmax) {
  if (kmax < 1) throw PreconditionError("is_normal_up_to: kmax must be >= 1");
  for (int k = 1; k <= kmax; ++k)
    if (!is_integrally_closed(power(ideal, k))) return k;
  return std::nullopt;
}

bool closure_colon_identity(const MonomialIdeal& ideal, int n, int m) {
  if (m < 1 || n < m)
    throw PreconditionError("closure_colon_identity: need n >= m >= 1");
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError("closure_colon_identity: ideal must be proper");

  const MonomialIdeal high = integral_closure(power(ideal, n));
  const MonomialIdeal mid = power(ideal, m);
  const MonomialIdeal expected =
      n == m ? MonomialIdeal::unit(ideal.ring())
             : integral_closure(power(ideal, n - m));

  return colon_ideal(high, integral_closure(mid)) == expected &&
         colon_ideal(high, mid) == expected;
}

} // namespace mideal
