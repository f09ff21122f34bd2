#include "doctest.h"

#include <algorithm>

#include "mideal/closure.hpp"
#include "mideal/errors.hpp"
#include "mideal/persistence.hpp"

#include "helpers.hpp"

using namespace mideal;

TEST_CASE("rng streams are seed-deterministic") {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next_int(0, 1000) == b.next_int(0, 1000));

  Rng c(7), d(7);
  const RandomIdealParams params;
  CHECK(random_ideal(c, params) == random_ideal(d, params));
}

TEST_CASE("random generators respect their contracts") {
  Rng rng(3344);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 4,
                                 .max_generators = 5,
                                 .max_exponent = 3,
                                 .max_support = 3};
  for (int t = 0; t < 30; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    CHECK(i.is_proper());
    CHECK(!i.is_zero());
    CHECK(i.ring().var_count() <= 4);

    const MonomialIdeal full = random_full_support_ideal(rng, params);
    CHECK(static_cast<int>(support(full).size()) == full.ring().var_count());

    const MonomialIdeal deg2 = random_degree2_ideal(rng, 5, 6);
    CHECK(degree(deg2) <= 2);
    CHECK(deg2.is_proper());

    const SimpleGraph g = random_graph(rng, 6, 30);
    CHECK(!g.edges().empty());
  }
}

TEST_CASE("strong persistence scan on knowns") {
  CHECK(strong_persistence_scan(idl("x y", "x, y"), 3).empty());
  CHECK(strong_persistence_scan(idl("x y", "x^2, x*y, y^3"), 3).empty());
  CHECK_THROWS_AS(strong_persistence_scan(idl("x y", ""), 2),
                  PreconditionError);
  CHECK_THROWS_AS(strong_persistence_scan(idl("x y", "x"), 0),
                  PreconditionError);
}

TEST_CASE("the 7-variable fixture") {
  const MonomialIdeal i = example_ideal_7vars();
  CHECK(i.num_generators() == 11);
  CHECK(i.ring().var_count() == 7);
  CHECK(i.is_squarefree());
  CHECK(degree(i) == 4);
  CHECK(static_cast<int>(support(i).size()) == 7);
  CHECK(fixture_hash(i) == "fnv1a64:e9812184a50fc443");
}

TEST_CASE("fixture scans reproduce the expected violation pattern") {
  const MonomialIdeal i = example_ideal_7vars();
  CHECK(strong_persistence_scan(i, 3) == std::vector<int>{2});

  const AssScan scan = ass_persistence_scan(i, 3);
  CHECK(scan.violations == std::vector<int>{2});
  CHECK(scan.q2_failures == std::vector<int>{3});
  REQUIRE(scan.per_power.size() == 4);
  CHECK(scan.per_power[0].primes.size() == 10);
  CHECK(scan.per_power[1].primes.size() == 15);
  CHECK(scan.per_power[2].primes.size() == 17);
}

TEST_CASE("persistence report rows are internally consistent") {
  const MonomialIdeal i = example_ideal_7vars();
  const PersistenceReport report = persistence_report(i, 3);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].num_generators == 11);
  CHECK(report.rows[1].num_generators == 63);
  CHECK(report.rows[2].num_generators == 238);
  CHECK(!report.rows[0].depth_zero);
  CHECK(report.rows[1].depth_zero);
  CHECK(!report.rows[2].depth_zero);
  CHECK(!report.rows[1].strong_ok);
  CHECK(report.rows[0].strong_ok);
  CHECK(report.strong_violations == std::vector<int>{2});
  CHECK(report.colon_implies_containment);
}

TEST_CASE("strong persistence implies Ass containment on random ideals") {
  Rng rng(60601);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 4,
                                 .max_generators = 5,
                                 .max_exponent = 3,
                                 .max_support = 3};
  for (int t = 0; t < 25; ++t) {
    const PersistenceReport report =
        persistence_report(random_ideal(rng, params), 3);
    CHECK(report.colon_implies_containment);
  }
}

TEST_CASE("square-free ideals keep Ass(I) inside every scanned power") {
  Rng rng(7447);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 4,
                                 .max_generators = 5,
                                 .max_exponent = 1,
                                 .max_support = 3};
  for (int t = 0; t < 15; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    const AssScan scan = ass_persistence_scan(i, 3);
    const auto& ass1 = scan.per_power[0].primes;
    for (const AssReport& later : scan.per_power)
      for (const MonomialPrime& p : ass1)
        CHECK(later.contains_prime(p));
  }
}

TEST_CASE("degree <= 2 ideals always pass the strong scan") {
  CHECK(strong_persistence_scan(idl("x1 x2 x3", "x1, x2*x3"), 3).empty());
  CHECK(strong_persistence_scan(idl("x1 x2", "x1^2, x1*x2, x2^2"), 3).empty());

  const Degree2Summary summary = check_degree2_theorem(2026, 25, 5, 3);
  CHECK(summary.ok());
  CHECK(summary.trials == 25);
  CHECK(!summary.counterexample.has_value());
}

TEST_CASE("colon of a variable-power prefix peels one factor") {
  // (X^{k+1} J : x_i) = X^k J for X = (x_1..x_t) away from supp(J).
  CHECK(check_lemma_l2(1, idl("x y", "y^2"), 1));
  CHECK(check_lemma_l2(2, idl("x1 x2 y z", "y*z"), 2));
  CHECK(check_lemma_l2(2, idl("x1 x2 y z", "y^2, y*z^3"), 1));
  CHECK_THROWS_AS(check_lemma_l2(1, idl("x y", "x*y"), 1),
                  PreconditionError);
  CHECK_THROWS_AS(check_lemma_l2(3, idl("x y", "y"), 1), PreconditionError);
}

TEST_CASE("closed-square criterion for Ass containment") {
  const SimpleGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const C1Result cover = check_corollary_c1(cover_ideal(c5), 3);
  CHECK(cover.hypothesis_met);
  CHECK(cover.containment_ok);
  CHECK(cover.ok());

  // The fixture must fail the hypothesis; otherwise its own Ass chain
  // would contradict the containment conclusion.
  const C1Result fixture = check_corollary_c1(example_ideal_7vars(), 3);
  CHECK(!fixture.hypothesis_met);
  CHECK(fixture.ok());

  const C1Result maximal = check_corollary_c1(idl("x y", "x, y"), 3);
  CHECK(maximal.hypothesis_met);
  CHECK(maximal.containment_ok);

  CHECK_THROWS_AS(check_corollary_c1(idl("x y", "x^2"), 3),
                  PreconditionError);
}

TEST_CASE("the full example report passes every clause") {
  const ExampleReport report = run_paper_example(3);
  CHECK(report.m_in_ass2);
  CHECK(report.m_not_in_ass3);
  CHECK(report.colon_differs);
  CHECK(report.ass2_not_in_ass3);
  CHECK(report.depth2_zero);
  CHECK(report.depth3_positive);
  CHECK(report.union_exceeds_final);
  CHECK(report.all_passed());
  CHECK(report.hash == fixture_hash(example_ideal_7vars()));
  CHECK_THROWS_AS(run_paper_example(2), PreconditionError);
}

TEST_CASE("witness and decomposition agree on the fixture powers") {
  const MonomialIdeal i = example_ideal_7vars();
  const MonomialIdeal i2 = power(i, 2);
  CHECK(associated_primes(i2, AssMethod::WitnessSearch)
            .same_primes(associated_primes(i2, AssMethod::Decomposition)));
}
