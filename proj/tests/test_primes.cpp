#include "doctest.h"

#include <algorithm>
#include <set>

#include "mideal/errors.hpp"
#include "mideal/persistence.hpp"
#include "mideal/primes.hpp"

#include "helpers.hpp"

using namespace mideal;

namespace {

MonomialIdeal intersect_components(
    const std::vector<IrreducibleComponent>& components, const Ring& ring) {
  MonomialIdeal result = MonomialIdeal::unit(ring);
  for (const IrreducibleComponent& c : components)
    result = intersect(result, c.to_ideal());
  return result;
}

} // namespace

TEST_CASE("irreducible decomposition of small examples") {
  const auto d = irreducible_decomposition(idl("x y", "x^2, x*y"));
  REQUIRE(d.size() == 2);
  CHECK(d[0].to_ideal() == idl("x y", "x"));
  CHECK(d[1].to_ideal() == idl("x y", "x^2, y"));

  const auto principal = irreducible_decomposition(idl("x y", "x^3"));
  REQUIRE(principal.size() == 1);
  CHECK(principal[0].to_ideal() == idl("x y", "x^3"));

  CHECK_THROWS_AS(irreducible_decomposition(idl("x", "")),
                  PreconditionError);
  CHECK_THROWS_AS(irreducible_decomposition(idl("x", "1")),
                  PreconditionError);
}

TEST_CASE("triangle cover ideal squared decomposes into edge and cycle parts") {
  // Self-dual: the minimal vertex covers of a triangle are its edges.
  const MonomialIdeal j = idl("x y z", "x*y, y*z, x*z");
  const MonomialIdeal j2 = power(j, 2);
  const auto d = irreducible_decomposition(j2);
  CHECK(intersect_components(d, j.ring()) == j2);

  // Components: the two irreducible halves of each squared edge prime,
  // plus the squared cycle component on all three vertices.
  CHECK(d.size() == 7);
  std::set<std::vector<Exponent>> powers;
  for (const auto& c : d) powers.insert(c.powers());
  CHECK(powers.count({2, 2, 2}) == 1);
  CHECK(powers.count({2, 1, 0}) == 1);
  CHECK(powers.count({1, 2, 0}) == 1);
}

TEST_CASE("decomposition intersects back and is irredundant") {
  Rng rng(88001);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 4,
                                 .max_generators = 5,
                                 .max_exponent = 3,
                                 .max_support = 3};
  for (int t = 0; t < 30; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    if (i.is_unit()) continue;
    const auto d = irreducible_decomposition(i);
    CHECK(intersect_components(d, i.ring()) == i);
    for (std::size_t skip = 0; skip < d.size(); ++skip) {
      MonomialIdeal partial = MonomialIdeal::unit(i.ring());
      for (std::size_t c = 0; c < d.size(); ++c)
        if (c != skip) partial = intersect(partial, d[c].to_ideal());
      CHECK(!(partial == i));
    }
  }
}

TEST_CASE("associated primes by decomposition") {
  const AssReport r = associated_primes_decomp(idl("x y", "x^2, x*y"));
  REQUIRE(r.primes.size() == 2);
  CHECK(r.primes[0].vars() == std::vector<int>{0});
  CHECK(r.primes[0].str() == "(x)");
  CHECK(r.primes[1].str() == "(x, y)");

  const AssReport pr = associated_primes_decomp(idl("x y", "x*y"));
  REQUIRE(pr.primes.size() == 2);
  CHECK(pr.primes[0].str() == "(x)");
  CHECK(pr.primes[1].str() == "(y)");
}

TEST_CASE("localization") {
  CHECK(localize(idl("x y", "x^2, x*y"), {0}) == idl("x", "x"));
  const MonomialIdeal tri = idl("x y z", "x*y, y*z, x*z");
  CHECK(localize(tri, {0, 1, 2}) == tri);
  CHECK(localize(tri, {0, 1}) == idl("x y", "x, y"));
  CHECK_THROWS_AS(localize(tri, {}), PreconditionError);
}

TEST_CASE("maximal ideal membership with witness") {
  const MonomialIdeal i = idl("x y", "x^2, x*y, y^2");
  const MaximalIdealWitness w = maximal_ideal_associated(i);
  REQUIRE(w.associated);
  REQUIRE(w.witness.has_value());
  CHECK(!i.contains(*w.witness));
  CHECK(colon_monomial(i, *w.witness) == idl("x y", "x, y"));

  CHECK(!maximal_ideal_associated(idl("x y", "x*y")).associated);
  // Support smaller than the ring: the maximal ideal is never associated.
  CHECK(!maximal_ideal_associated(idl("x y z", "x^2, x*y, y^2")).associated);
}

TEST_CASE("witness box is complete against a wider box") {
  Rng rng(3111);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 3,
                                 .max_generators = 4,
                                 .max_exponent = 3,
                                 .max_support = 3};
  for (int t = 0; t < 25; ++t) {
    const MonomialIdeal i = random_full_support_ideal(rng, params);
    if (i.is_unit()) continue;
    const int n = i.ring().var_count();
    const MonomialIdeal m = MonomialIdeal(
        i.ring(), [&] {
          std::vector<Monomial> vars;
          for (int v = 0; v < n; ++v) vars.push_back(Monomial::var_power(n, v));
          return vars;
        }());

    bool wide = false;
    std::vector<Exponent> box = i.max_exponents();
    for (auto& e : box) e += 1; // one past the proven bound
    std::vector<Exponent> w(static_cast<std::size_t>(n), 0);
    for (;;) {
      const Monomial cand(w);
      if (!i.contains(cand) && colon_monomial(i, cand) == m) {
        wide = true;
        break;
      }
      int pos = 0;
      while (pos < n && w[static_cast<std::size_t>(pos)] ==
                            box[static_cast<std::size_t>(pos)]) {
        w[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == n) break;
      ++w[static_cast<std::size_t>(pos)];
    }
    CHECK(maximal_ideal_associated(i).associated == wide);
  }
}

TEST_CASE("associated primes by witness search") {
  const AssReport r = associated_primes_witness(idl("x y", "x^2, x*y"));
  REQUIRE(r.primes.size() == 2);
  CHECK(r.primes[0].str() == "(x)");
  CHECK(r.primes[1].str() == "(x, y)");

  const AssReport single = associated_primes_witness(idl("x y", "x"));
  REQUIRE(single.primes.size() == 1);
  CHECK(single.primes[0].str() == "(x)");
}

TEST_CASE("witness and decomposition methods agree") {
  Rng rng(140914);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 5,
                                 .max_generators = 6,
                                 .max_exponent = 3,
                                 .max_support = 4};
  for (int t = 0; t < 40; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    if (i.is_unit()) continue;
    const AssReport w = associated_primes_witness(i);
    const AssReport d = associated_primes_decomp(i);
    CHECK(w.same_primes(d));
  }
}

TEST_CASE("radical equals intersection of minimal associated primes") {
  Rng rng(8080);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 4,
                                 .max_generators = 4,
                                 .max_exponent = 3,
                                 .max_support = 3};
  for (int t = 0; t < 20; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    if (i.is_unit()) continue;
    const auto primes = associated_primes(i).primes;
    std::vector<MonomialPrime> minimal;
    for (const MonomialPrime& p : primes) {
      bool is_min = true;
      for (const MonomialPrime& q : primes) {
        if (q == p) continue;
        const auto& qs = q.vars();
        if (std::includes(p.vars().begin(), p.vars().end(), qs.begin(),
                          qs.end()))
          is_min = false;
      }
      if (is_min) minimal.push_back(p);
    }
    MonomialIdeal meet = MonomialIdeal::unit(i.ring());
    for (const MonomialPrime& p : minimal)
      meet = intersect(meet, p.to_ideal());
    CHECK(meet == radical(i));
  }
}

TEST_CASE("alexander dual") {
  CHECK(alexander_dual(idl("x1 x2", "x1*x2")) == idl("x1 x2", "x1, x2"));
  const MonomialIdeal tri = idl("x y z", "x*y, y*z, x*z");
  CHECK(alexander_dual(tri) == tri);
  CHECK_THROWS_AS(alexander_dual(idl("x y", "x^2, y")), PreconditionError);

  Rng rng(2024);
  const RandomIdealParams params{.min_vars = 2,
                                 .max_vars = 5,
                                 .max_generators = 5,
                                 .max_exponent = 1,
                                 .max_support = 3};
  for (int t = 0; t < 25; ++t) {
    const MonomialIdeal i = random_ideal(rng, params);
    if (i.is_unit()) continue;
    const MonomialIdeal dual = alexander_dual(i);
    CHECK(alexander_dual(dual) == i);
    for (const Monomial& d : dual.generators())
      for (const Monomial& g : i.generators())
        CHECK(!d.gcd(g).is_one()); // every dual generator hits every support
  }
}
