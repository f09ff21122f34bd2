#ifndef MIDEAL_PERSISTENCE_HPP
#define MIDEAL_PERSISTENCE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mideal/graphs.hpp"
#include "mideal/ideal.hpp"
#include "mideal/primes.hpp"

namespace mideal {

/// Every k in 1..kmax with (I^{k+1} : I) != I^k.
std::vector<int> strong_persistence_scan(const MonomialIdeal& ideal, int kmax);

struct AssScan {
  /// Ass(I^k) for k = 1..kmax+1; the extra power closes the last pair.
  std::vector<AssReport> per_power;
  /// k in 1..kmax with Ass(I^k) not contained in Ass(I^{k+1}).
  std::vector<int> violations;
  /// k in 2..kmax with Ass(I^2) not contained in Ass(I^k).
  std::vector<int> q2_failures;
};

AssScan ass_persistence_scan(const MonomialIdeal& ideal, int kmax,
                             AssMethod method = AssMethod::WitnessSearch);

struct PersistenceRow {
  int k;
  int num_generators; // of I^k
  std::vector<MonomialPrime> ass;
  bool strong_ok;      // (I^{k+1} : I) == I^k
  bool ass_next_ok;    // Ass(I^k) subset of Ass(I^{k+1})
  std::optional<bool> q2_ok; // Ass(I^2) subset of Ass(I^k); k >= 2 only
  bool depth_zero;     // the full maximal ideal is associated to I^k
  std::optional<int> exact_depth; // resolution-based, on request
  bool exact_depth_capped = false;
};

struct PersistenceReport {
  MonomialIdeal ideal;
  int kmax;
  AssMethod method;
  std::vector<PersistenceRow> rows; // k = 1..kmax
  std::vector<int> strong_violations;
  std::vector<int> ass_violations;
  std::vector<int> q2_failures;
  /// Strong persistence at k must imply Ass-containment at k. A false
  /// value can only come from an implementation bug, never from the input.
  bool colon_implies_containment;
};

PersistenceReport persistence_report(const MonomialIdeal& ideal, int kmax,
                                     AssMethod method = AssMethod::WitnessSearch,
                                     bool exact_depth = false);

/// Random instances. The engine is mt19937_64 and ranges are mapped by
/// modulo, so streams are identical across platforms for a given seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform-enough integer in [lo, hi]; the modulo bias is irrelevant for
  /// instance generation and buys cross-platform reproducibility.
  int next_int(int lo, int hi);

  bool chance(int percent) { return next_int(1, 100) <= percent; }

private:
  std::mt19937_64 engine_;
};

struct RandomIdealParams {
  int min_vars = 2;
  int max_vars = 4;
  int max_generators = 4;
  Exponent max_exponent = 3;
  int max_support = 3; // per generator; clipped to the variable count
};

/// Minimalized, always proper and nonzero: each generator takes a nonempty
/// support of distinct variables with exponents in 1..max_exponent.
MonomialIdeal random_ideal(Rng& rng, const RandomIdealParams& params);

/// Like random_ideal but every variable ends up in the support: a final
/// generator multiplying the missed variables is appended when needed.
MonomialIdeal random_full_support_ideal(Rng& rng,
                                        const RandomIdealParams& params);

/// deg <= 2 instances: a mix of linear x_i, quadrics x_i x_j, and squares
/// x_i^2, minimalized.
MonomialIdeal random_degree2_ideal(Rng& rng, int max_vars,
                                   int max_generators);

/// Erdos-Renyi with the given edge percentage; one random edge is forced
/// when the draw comes out empty.
SimpleGraph random_graph(Rng& rng, int vertex_count, int edge_percent);

struct Degree2Summary {
  std::uint64_t seed;
  int trials;
  int kmax;
  std::vector<int> failed_trials;
  std::optional<MonomialIdeal> counterexample; // first failure, if any
  bool ok() const { return failed_trials.empty(); }
};

/// Strong-persistence scan over seeded random degree <= 2 ideals; a
/// counterexample would refute the implementation, not the statement.
Degree2Summary check_degree2_theorem(std::uint64_t seed, int trials,
                                     int n_max, int kmax);

/// For X = (x_1..x_t) with those variables outside supp(J): checks
/// (X^{k+1} J : x_i) = X^k J for every i <= t.
bool check_lemma_l2(int t, const MonomialIdeal& j, int k);

struct C1Result {
  bool hypothesis_met; // square of the input is integrally closed
  bool containment_ok; // Ass(I^2) subset of Ass(I^k) for 2 <= k <= kmax
  bool ok() const { return !hypothesis_met || containment_ok; }
};

/// Square-free ideals only: when I^2 is integrally closed, Ass(I^2) must
/// sit inside every Ass(I^k) up to kmax.
C1Result check_corollary_c1(const MonomialIdeal& ideal, int kmax);

/// The 7-variable, 11-generator square-free fixture. The source listing
/// garbles one generator ("{\bold x}_2x_4x_7"); it is transcribed as
/// x2*x4*x7, and fixture_hash() pins the corrected list.
MonomialIdeal example_ideal_7vars();

/// FNV-1a 64 over the canonical serialization, hex-printed.
std::string fixture_hash(const MonomialIdeal& ideal);

struct ExampleReport {
  MonomialIdeal ideal;
  int kmax;
  std::string hash;
  std::vector<AssReport> ass_per_power; // k = 1..kmax
  bool m_in_ass2;           // (a)
  bool m_not_in_ass3;       // (b)
  bool colon_differs;       // (c) (I^3 : I) != I^2
  bool ass2_not_in_ass3;    // (d)
  bool depth2_zero;         // (e) via the associated-maximal-ideal criterion
  bool depth3_positive;     // (e)
  bool union_exceeds_final; // (f) union of scanned Ass sets != last set
  bool all_passed() const {
    return m_in_ass2 && m_not_in_ass3 && colon_differs && ass2_not_in_ass3 &&
           depth2_zero && depth3_positive && union_exceeds_final;
  }
};

/// Runs the full battery of claims on the fixture; kmax >= 3.
ExampleReport run_paper_example(int kmax = 3,
                                AssMethod method = AssMethod::WitnessSearch);

} // namespace mideal

#endif
