#include "mideal/persistence.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "mideal/closure.hpp"
#include "mideal/errors.hpp"
#include "mideal/io.hpp"
#include "mideal/resolution.hpp"

namespace mideal {

namespace {

// I^1..I^{top}, reusing each power for the next.
std::vector<MonomialIdeal> powers_up_to(const MonomialIdeal& ideal, int top) {
  std::vector<MonomialIdeal> p;
  p.reserve(static_cast<std::size_t>(top));
  p.push_back(ideal);
  for (int k = 2; k <= top; ++k) p.push_back(multiply(p.back(), ideal));
  return p;
}

bool primes_subset(const std::vector<MonomialPrime>& small,
                   const std::vector<MonomialPrime>& big) {
  for (const MonomialPrime& p : small)
    if (!std::binary_search(big.begin(), big.end(), p)) return false;
  return true;
}

bool has_maximal(const std::vector<MonomialPrime>& primes, int n) {
  for (const MonomialPrime& p : primes)
    if (static_cast<int>(p.vars().size()) == n) return true;
  return false;
}

} // namespace

std::vector<int> strong_persistence_scan(const MonomialIdeal& ideal,
                                         int kmax) {
  if (kmax < 1)
    throw PreconditionError("strong_persistence_scan: kmax must be >= 1");
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError(
        "strong_persistence_scan: ideal must be proper and nonzero");

  const auto powers = powers_up_to(ideal, kmax + 1);
  std::vector<int> violations;
  for (int k = 1; k <= kmax; ++k) {
    const MonomialIdeal quotient =
        colon_ideal(powers[static_cast<std::size_t>(k)], ideal);
    if (!(quotient == powers[static_cast<std::size_t>(k) - 1]))
      violations.push_back(k);
  }
  return violations;
}

AssScan ass_persistence_scan(const MonomialIdeal& ideal, int kmax,
                             AssMethod method) {
  if (kmax < 1)
    throw PreconditionError("ass_persistence_scan: kmax must be >= 1");
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError(
        "ass_persistence_scan: ideal must be proper and nonzero");

  const auto powers = powers_up_to(ideal, kmax + 1);
  AssScan scan;
  scan.per_power.reserve(powers.size());
  for (const MonomialIdeal& p : powers)
    scan.per_power.push_back(associated_primes(p, method));

  for (int k = 1; k <= kmax; ++k)
    if (!primes_subset(scan.per_power[static_cast<std::size_t>(k) - 1].primes,
                       scan.per_power[static_cast<std::size_t>(k)].primes))
      scan.violations.push_back(k);

  if (kmax >= 2) {
    const auto& ass2 = scan.per_power[1].primes;
    for (int k = 2; k <= kmax; ++k)
      if (!primes_subset(ass2,
                         scan.per_power[static_cast<std::size_t>(k) - 1].primes))
        scan.q2_failures.push_back(k);
  }
  return scan;
}

PersistenceReport persistence_report(const MonomialIdeal& ideal, int kmax,
                                     AssMethod method, bool exact_depth) {
  if (kmax < 1)
    throw PreconditionError("persistence_report: kmax must be >= 1");
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError(
        "persistence_report: ideal must be proper and nonzero");

  const auto powers = powers_up_to(ideal, kmax + 1);
  const int n = ideal.ring().var_count();

  PersistenceReport report{.ideal = ideal,
                           .kmax = kmax,
                           .method = method,
                           .rows = {},
                           .strong_violations = {},
                           .ass_violations = {},
                           .q2_failures = {},
                           .colon_implies_containment = true};

  AssScan scan = ass_persistence_scan(ideal, kmax, method);
  report.ass_violations = scan.violations;
  report.q2_failures = scan.q2_failures;

  for (int k = 1; k <= kmax; ++k) {
    const MonomialIdeal& pk = powers[static_cast<std::size_t>(k) - 1];
    PersistenceRow row;
    row.k = k;
    row.num_generators = static_cast<int>(pk.num_generators());
    row.ass = scan.per_power[static_cast<std::size_t>(k) - 1].primes;

    row.strong_ok =
        colon_ideal(powers[static_cast<std::size_t>(k)], ideal) == pk;
    if (!row.strong_ok) report.strong_violations.push_back(k);

    row.ass_next_ok =
        std::find(scan.violations.begin(), scan.violations.end(), k) ==
        scan.violations.end();
    if (k >= 2)
      row.q2_ok = std::find(scan.q2_failures.begin(), scan.q2_failures.end(),
                            k) == scan.q2_failures.end();

    row.depth_zero = has_maximal(row.ass, n);
    if (exact_depth) {
      try {
        row.exact_depth = depth_quotient(pk);
      } catch (const CapExceededError&) {
        row.exact_depth_capped = true;
      }
    }

    if (row.strong_ok && !row.ass_next_ok)
      report.colon_implies_containment = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

int Rng::next_int(int lo, int hi) {
  if (lo > hi) throw PreconditionError("rng: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

MonomialIdeal random_ideal(Rng& rng, const RandomIdealParams& params) {
  const int n = rng.next_int(params.min_vars, params.max_vars);
  const Ring ring = Ring::with_vars(n);
  const int count = rng.next_int(1, params.max_generators);
  std::vector<Monomial> gens;
  for (int g = 0; g < count; ++g) {
    const int support = rng.next_int(1, std::min(n, params.max_support));
    std::vector<Exponent> exps(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < support; ++s) {
      int v = rng.next_int(0, n - 1);
      while (exps[static_cast<std::size_t>(v)] != 0) v = (v + 1) % n;
      exps[static_cast<std::size_t>(v)] =
          static_cast<Exponent>(rng.next_int(1, params.max_exponent));
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal random_full_support_ideal(Rng& rng,
                                        const RandomIdealParams& params) {
  MonomialIdeal ideal = random_ideal(rng, params);
  const int n = ideal.ring().var_count();
  const std::vector<int> supp = support(ideal);
  if (static_cast<int>(supp.size()) == n) return ideal;

  std::vector<Exponent> exps(static_cast<std::size_t>(n), 0);
  std::set<int> present(supp.begin(), supp.end());
  for (int v = 0; v < n; ++v)
    if (!present.count(v))
      exps[static_cast<std::size_t>(v)] =
          static_cast<Exponent>(rng.next_int(1, params.max_exponent));
  std::vector<Monomial> gens = ideal.generators();
  gens.emplace_back(std::move(exps));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal random_degree2_ideal(Rng& rng, int max_vars,
                                   int max_generators) {
  const int n = rng.next_int(2, max_vars);
  const int count = rng.next_int(1, max_generators);
  std::vector<Monomial> gens;
  for (int g = 0; g < count; ++g) {
    const int kind = rng.next_int(0, 2);
    const int i = rng.next_int(0, n - 1);
    if (kind == 0) {
      gens.push_back(Monomial::var_power(n, i));
    } else if (kind == 1) {
      int j = rng.next_int(0, n - 1);
      if (j == i) j = (j + 1) % n;
      gens.push_back(
          Monomial::var_power(n, i).times(Monomial::var_power(n, j)));
    } else {
      gens.push_back(Monomial::var_power(n, i, 2));
    }
  }
  return MonomialIdeal(Ring::with_vars(n), std::move(gens));
}

SimpleGraph random_graph(Rng& rng, int vertex_count, int edge_percent) {
  if (vertex_count < 2)
    throw PreconditionError("random_graph: need at least two vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertex_count; ++i)
    for (int j = i + 1; j < vertex_count; ++j)
      if (rng.chance(edge_percent)) edges.emplace_back(i, j);
  if (edges.empty()) {
    const int i = rng.next_int(0, vertex_count - 2);
    const int j = rng.next_int(i + 1, vertex_count - 1);
    edges.emplace_back(i, j);
  }
  return SimpleGraph(vertex_count, std::move(edges));
}

Degree2Summary check_degree2_theorem(std::uint64_t seed, int trials,
                                     int n_max, int kmax) {
  if (trials < 1)
    throw PreconditionError("check_degree2_theorem: trials must be >= 1");
  Rng rng(seed);
  Degree2Summary summary{.seed = seed,
                         .trials = trials,
                         .kmax = kmax,
                         .failed_trials = {},
                         .counterexample = std::nullopt};
  for (int t = 0; t < trials; ++t) {
    const MonomialIdeal ideal = random_degree2_ideal(rng, n_max, n_max + 2);
    if (!strong_persistence_scan(ideal, kmax).empty()) {
      summary.failed_trials.push_back(t);
      if (!summary.counterexample) summary.counterexample = ideal;
    }
  }
  return summary;
}

bool check_lemma_l2(int t, const MonomialIdeal& j, int k) {
  if (t < 1) throw PreconditionError("check_lemma_l2: t must be >= 1");
  if (k < 1) throw PreconditionError("check_lemma_l2: k must be >= 1");
  const Ring& ring = j.ring();
  const int n = ring.var_count();
  if (t > n) throw PreconditionError("check_lemma_l2: t exceeds variables");
  for (int v : support(j))
    if (v < t)
      throw PreconditionError(
          "check_lemma_l2: support of J meets x_1..x_t");

  std::vector<Monomial> vars;
  for (int v = 0; v < t; ++v) vars.push_back(Monomial::var_power(n, v));
  const MonomialIdeal x(ring, vars);

  const MonomialIdeal lhs_base = multiply(power(x, k + 1), j);
  const MonomialIdeal rhs = multiply(power(x, k), j);
  for (int v = 0; v < t; ++v)
    if (!(colon_monomial(lhs_base, Monomial::var_power(n, v)) == rhs))
      return false;
  return true;
}

C1Result check_corollary_c1(const MonomialIdeal& ideal, int kmax) {
  if (kmax < 2)
    throw PreconditionError("check_corollary_c1: kmax must be >= 2");
  if (!ideal.is_squarefree())
    throw PreconditionError("check_corollary_c1: ideal must be square-free");

  const MonomialIdeal square = power(ideal, 2);
  C1Result result{.hypothesis_met = is_integrally_closed(square),
                  .containment_ok = true};
  if (!result.hypothesis_met) return result;

  const auto ass2 = associated_primes(square).primes;
  MonomialIdeal pk = square;
  for (int k = 2; k <= kmax; ++k) {
    if (k > 2) pk = multiply(pk, ideal);
    if (!primes_subset(ass2, associated_primes(pk).primes)) {
      result.containment_ok = false;
      break;
    }
  }
  return result;
}

MonomialIdeal example_ideal_7vars() {
  const Ring ring = Ring::with_vars(7);
  const std::vector<std::vector<int>> supports = {
      {1, 4, 5, 7}, {2, 3, 6}, {2, 3, 7}, {2, 4, 5}, {2, 4, 7}, {2, 5, 6},
      {3, 4, 5},    {3, 4, 6}, {3, 5, 7}, {4, 6, 7}, {5, 6, 7}};
  std::vector<Monomial> gens;
  for (const auto& vars : supports) {
    std::vector<Exponent> exps(7, 0);
    for (int v : vars) exps[static_cast<std::size_t>(v) - 1] = 1;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::string fixture_hash(const MonomialIdeal& ideal) {
  const std::string text = serialize_ideal(ideal);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[2 + 16 + 1];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

ExampleReport run_paper_example(int kmax, AssMethod method) {
  if (kmax < 3)
    throw PreconditionError("run_paper_example: kmax must be >= 3");

  const MonomialIdeal ideal = example_ideal_7vars();
  const int n = ideal.ring().var_count();
  const auto powers = powers_up_to(ideal, kmax);

  ExampleReport report{.ideal = ideal,
                       .kmax = kmax,
                       .hash = fixture_hash(ideal),
                       .ass_per_power = {},
                       .m_in_ass2 = false,
                       .m_not_in_ass3 = false,
                       .colon_differs = false,
                       .ass2_not_in_ass3 = false,
                       .depth2_zero = false,
                       .depth3_positive = false,
                       .union_exceeds_final = false};

  for (const MonomialIdeal& p : powers)
    report.ass_per_power.push_back(associated_primes(p, method));

  const auto& ass2 = report.ass_per_power[1].primes;
  const auto& ass3 = report.ass_per_power[2].primes;

  report.m_in_ass2 = has_maximal(ass2, n);
  report.m_not_in_ass3 = !has_maximal(ass3, n);
  report.colon_differs = !(colon_ideal(powers[2], ideal) == powers[1]);
  report.ass2_not_in_ass3 = !primes_subset(ass2, ass3);
  report.depth2_zero = report.m_in_ass2;
  report.depth3_positive = report.m_not_in_ass3;

  std::set<MonomialPrime> all;
  for (const AssReport& r : report.ass_per_power)
    all.insert(r.primes.begin(), r.primes.end());
  const auto& last = report.ass_per_power.back().primes;
  report.union_exceeds_final =
      all.size() != last.size() ||
      !std::equal(all.begin(), all.end(), last.begin());

  return report;
}

} // namespace mideal
