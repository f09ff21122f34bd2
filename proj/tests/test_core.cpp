#include "doctest.h"

#include <algorithm>
#include <limits>

#include "mideal/errors.hpp"
#include "mideal/ideal.hpp"
#include "mideal/persistence.hpp"

#include "helpers.hpp"

using namespace mideal;

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(Ring({}), PreconditionError);
  CHECK_THROWS_AS(Ring({"x", "x"}), PreconditionError);
  CHECK_THROWS_AS(Ring({""}), PreconditionError);
  const Ring r = Ring::with_vars(3);
  CHECK(r.var_count() == 3);
  CHECK(r.name(0) == "x1");
  CHECK(r.index_of("x3") == 2);
  CHECK(r.index_of("y") == -1);
}

TEST_CASE("monomial basics") {
  const Monomial m({1, 0, 2});
  CHECK(m.degree() == 3);
  CHECK(m.support() == std::vector<int>{0, 2});
  CHECK(!m.is_squarefree());
  CHECK(m.squarefree_part() == Monomial({1, 0, 1}));
  CHECK(Monomial::one(3).is_one());
  CHECK_THROWS_AS(Monomial({-1, 0}), PreconditionError);

  const Monomial a({2, 1, 0}), b({1, 3, 0});
  CHECK(a.gcd(b) == Monomial({1, 1, 0}));
  CHECK(a.lcm(b) == Monomial({2, 3, 0}));
  CHECK(a.times(b) == Monomial({3, 4, 0}));
  CHECK(b.colon_by(a) == Monomial({0, 2, 0}));
  CHECK(a.divides(a.times(b)));
  CHECK(!a.divides(b));
}

TEST_CASE("monomial overflow is loud") {
  const Exponent big = std::numeric_limits<Exponent>::max() - 1;
  const Monomial m({big});
  CHECK_THROWS_AS(m.times(m), OverflowError);
  CHECK_THROWS_AS(m.pow(3), OverflowError);
}

TEST_CASE("canonical generator order is graded lexicographic") {
  const MonomialIdeal i = idl("x y", "y^2, x*y, x^2");
  REQUIRE(i.num_generators() == 3);
  CHECK(i.generators()[0] == mono("x y", "x^2"));
  CHECK(i.generators()[1] == mono("x y", "x*y"));
  CHECK(i.generators()[2] == mono("x y", "y^2"));
}

TEST_CASE("minimalize") {
  CHECK(idl("x y", "x^2, x^2*y, x*y") == idl("x y", "x^2, x*y"));
  CHECK(idl("x y", "x, y, x") == idl("x y", "x, y"));
  CHECK(idl("x y", "").is_zero());
  CHECK(idl("x y", "1, x").is_unit());

  const Ring r = Ring::with_vars(2);
  CHECK_THROWS_AS(MonomialIdeal(r, {Monomial({1, 0, 0})}),
                  RingMismatchError);
}

TEST_CASE("construction from permuted generator lists is canonical") {
  Rng rng(20260816);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 4,
                                 .max_generators = 5,
                                 .max_exponent = 3,
                                 .max_support = 3};
  for (int t = 0; t < 50; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    std::vector<Monomial> shuffled = i.generators();
    for (std::size_t s = shuffled.size(); s > 1; --s)
      std::swap(shuffled[s - 1],
                shuffled[static_cast<std::size_t>(
                    rng.next_int(0, static_cast<int>(s) - 1))]);
    CHECK(MonomialIdeal(i.ring(), shuffled) == i);
  }
}

TEST_CASE("generators of every construction are pairwise indivisible") {
  Rng rng(917);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 5,
                                 .max_generators = 6,
                                 .max_exponent = 3,
                                 .max_support = 4};
  for (int t = 0; t < 50; ++t) {
    const MonomialIdeal i = power(random_ideal(rng, params), 2);
    const auto& gens = i.generators();
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b)
        if (a != b) CHECK(!gens[a].divides(gens[b]));
  }
}

TEST_CASE("multiply and power") {
  const MonomialIdeal m = idl("x y", "x, y");
  CHECK(power(m, 2) == idl("x y", "x^2, x*y, y^2"));
  CHECK(power(MonomialIdeal::zero(m.ring()), 3).is_zero());
  CHECK_THROWS_AS(power(m, 0), PreconditionError);
  CHECK_THROWS_AS(multiply(m, idl("x y z", "x")), RingMismatchError);
  CHECK(multiply(m, MonomialIdeal::unit(m.ring())) == m);
  CHECK(multiply(m, MonomialIdeal::zero(m.ring())).is_zero());
}

TEST_CASE("power coherence on random ideals") {
  Rng rng(5150);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 3,
                                 .max_generators = 4,
                                 .max_exponent = 2,
                                 .max_support = 2};
  for (int t = 0; t < 20; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; a + b <= 4; ++b)
        CHECK(power(i, a + b) == multiply(power(i, a), power(i, b)));
  }
}

TEST_CASE("colon by a monomial") {
  CHECK(colon_monomial(idl("x y", "x^2, x*y"), mono("x y", "x")) ==
        idl("x y", "x, y"));
  CHECK(colon_monomial(idl("x", "x^3"), mono("x", "x")) == idl("x", "x^2"));
  const MonomialIdeal i = idl("x y", "x^2, x*y");
  CHECK(colon_monomial(i, Monomial::one(2)) == i);
}

TEST_CASE("colon membership law on sampled boxes") {
  Rng rng(77);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 3,
                                 .max_generators = 4,
                                 .max_exponent = 3,
                                 .max_support = 3};
  for (int t = 0; t < 20; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    const int n = i.ring().var_count();
    std::vector<Exponent> we(static_cast<std::size_t>(n));
    for (auto& e : we) e = static_cast<Exponent>(rng.next_int(0, 3));
    const Monomial w(we);
    const MonomialIdeal quotient = colon_monomial(i, w);
    for (int s = 0; s < 20; ++s) {
      std::vector<Exponent> me(static_cast<std::size_t>(n));
      for (auto& e : me) e = static_cast<Exponent>(rng.next_int(0, 4));
      const Monomial m(me);
      CHECK(quotient.contains(m) == i.contains(m.times(w)));
    }
  }
}

TEST_CASE("colon by an ideal") {
  const MonomialIdeal i = idl("x y", "x^2, x*y");
  CHECK(colon_ideal(i, idl("x y", "x")) == idl("x y", "x, y"));
  CHECK(colon_ideal(i, i).is_unit());
  CHECK_THROWS_AS(colon_ideal(i, MonomialIdeal::zero(i.ring())),
                  PreconditionError);

  const MonomialIdeal j = idl("x y", "x^3*y");
  CHECK(colon_ideal(i, j).is_unit()); // j inside i
  CHECK(!colon_ideal(j, i).is_unit()); // i not inside j
}

TEST_CASE("intersection") {
  CHECK(intersect(idl("x y", "x"), idl("x y", "y")) == idl("x y", "x*y"));
  CHECK(intersect(idl("x y", "x"), idl("x y", "x^2, y")) ==
        idl("x y", "x^2, x*y"));
  const MonomialIdeal i = idl("x y", "x^2, x*y");
  CHECK(intersect(i, MonomialIdeal::unit(i.ring())) == i);
  CHECK(intersect(i, MonomialIdeal::zero(i.ring())).is_zero());
}

TEST_CASE("intersection membership law") {
  Rng rng(4242);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 3,
                                 .max_generators = 4,
                                 .max_exponent = 3,
                                 .max_support = 3};
  for (int t = 0; t < 20; ++t) {
    const MonomialIdeal a = random_ideal(rng, params);
    RandomIdealParams same = params;
    same.min_vars = same.max_vars = a.ring().var_count();
    const MonomialIdeal b = random_ideal(rng, same);
    const MonomialIdeal meet = intersect(a, b);
    const int n = a.ring().var_count();
    for (int s = 0; s < 25; ++s) {
      std::vector<Exponent> me(static_cast<std::size_t>(n));
      for (auto& e : me) e = static_cast<Exponent>(rng.next_int(0, 4));
      const Monomial m(me);
      CHECK(meet.contains(m) == (a.contains(m) && b.contains(m)));
    }
  }
}

TEST_CASE("contains, equals, subset") {
  const MonomialIdeal i = idl("x y", "x^2, x*y");
  CHECK(i.contains(mono("x y", "x^2*y")));
  CHECK(!i.contains(mono("x y", "x")));
  CHECK(equals(power(idl("x y", "x, y"), 2), idl("x y", "x^2, x*y, y^2")));
  CHECK(subset(idl("x y", "x^3"), idl("x y", "x")));
  CHECK(!subset(idl("x y", "x"), idl("x y", "x^3")));
}

TEST_CASE("radical, support, degree") {
  CHECK(radical(idl("x y", "x^2, x*y")) == idl("x y", "x"));
  CHECK(degree(idl("x1 x2 x3", "x1, x2*x3")) == 2);
  CHECK(support(idl("x y z", "x*y")) == std::vector<int>{0, 1});

  const MonomialIdeal zero = MonomialIdeal::zero(Ring::with_vars(2));
  CHECK(radical(zero).is_zero());
  CHECK(support(zero).empty());
  CHECK(degree(zero) == 0);

  const MonomialIdeal unit = MonomialIdeal::unit(Ring::with_vars(2));
  CHECK(radical(unit).is_unit());
  CHECK(degree(unit) == 0);
}

TEST_CASE("one-sided strong persistence inclusion always holds") {
  Rng rng(606);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 4,
                                 .max_generators = 4,
                                 .max_exponent = 2,
                                 .max_support = 3};
  for (int t = 0; t < 15; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    for (int k = 1; k <= 3; ++k)
      CHECK(subset(power(i, k), colon_ideal(power(i, k + 1), i)));
  }
}

TEST_CASE("square-free colon identity (I^k : I^{k-1}) = I") {
  Rng rng(31337);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 4,
                                 .max_generators = 4,
                                 .max_exponent = 1,
                                 .max_support = 3};
  for (int t = 0; t < 15; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    REQUIRE(i.is_squarefree());
    for (int k = 2; k <= 4; ++k)
      CHECK(colon_ideal(power(i, k), power(i, k - 1)) == i);
  }
}
