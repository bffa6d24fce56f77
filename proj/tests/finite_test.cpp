#include "doctest.h"

#include "cones/core/predicates.hpp"
#include "cones/errors.hpp"
#include "cones/finite/congruence.hpp"
#include "cones/finite/corpus.hpp"
#include "cones/finite/structure.hpp"
#include "oracles.hpp"

using namespace cones;

TEST_CASE("table validation rejects broken tables") {
  CHECK_THROWS_AS(FiniteMonoid({"0", "a"}, {{0, 1}, {0, 1}}), PreconditionError);
  // not associative: a+a=b, a+b=0, b+b=a
  CHECK_THROWS_AS(FiniteMonoid({"0", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}}),
                  PreconditionError);
  // first element not neutral
  CHECK_THROWS_AS(FiniteMonoid({"a", "0"}, {{1, 1}, {1, 1}}), PreconditionError);
  CHECK_THROWS_AS(FiniteMonoid({"0", "0"}, {{0, 1}, {1, 1}}), PreconditionError);
}

TEST_CASE("corpus tables are valid and small") {
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    CHECK(m.size() <= 6);
    CHECK(m.add(0, m.size() - 1) == m.size() - 1);
  }
}

TEST_CASE("threechain and <g|2g=3g> are the same table") {
  CHECK(three_chain().size() == 3);
  const auto g = cyclic_monoid(2, 1);
  for (FiniteMonoid::element_type x = 0; x < 3; ++x)
    for (FiniteMonoid::element_type y = 0; y < 3; ++y)
      CHECK(g.add(x, y) == three_chain().add(x, y));
}

TEST_CASE("congruence_closure") {
  const auto m = three_chain();
  SUBCASE("no pairs gives the identity") {
    CHECK(congruence_closure(m, {}) == Congruence::identity(3));
  }
  SUBCASE("1 ~ 0 collapses everything") {
    CHECK(congruence_closure(m, {{1, 0}}).class_count() == 1);
  }
  SUBCASE("g ~ 2g gives {0}, {g, 2g}") {
    const auto c = congruence_closure(cyclic_monoid(2, 1), {{1, 2}});
    CHECK(c.classes() == std::vector<std::uint32_t>{0, 1, 1});
  }
  SUBCASE("every closure is a congruence containing its pairs") {
    for (const auto& [name, mon] : finite_corpus()) {
      CAPTURE(name);
      for (FiniteMonoid::element_type x = 0; x < mon.size(); ++x) {
        for (FiniteMonoid::element_type y = 0; y < mon.size(); ++y) {
          const auto c = congruence_closure(mon, {{x, y}});
          CHECK(c.related(x, y));
          CHECK(c.is_compatible_with(mon));
          CHECK(oracle::is_congruence(mon, c.classes()));
        }
      }
    }
  }
}

TEST_CASE("canonical quotients on small examples") {
  const auto chain = three_chain();
  SUBCASE("cancellative quotient of {0,1,inf} is trivial") {
    const auto q = cancellative_quotient(chain);
    CHECK(q.monoid.size() == 1);
  }
  SUBCASE("cancellative monoid maps to itself") {
    const auto z3 = cyclic_monoid(0, 3);
    CHECK(cancellative_quotient(z3).congruence == Congruence::identity(3));
  }
  SUBCASE("separative quotient of {0,x,inf} with 2x = inf is {0, inf}") {
    const auto q = separative_quotient(chain);
    CHECK(q.monoid.size() == 2);
    CHECK(q.congruence.related(1, 2));
  }
  SUBCASE("separative monoid gives identity") {
    const auto chain3 = finite_corpus()[11].monoid;
    REQUIRE(oracle::separative(chain3));
    CHECK(separative_quotient(chain3).congruence == Congruence::identity(3));
  }
  SUBCASE("separative quotient of a product is the product of quotients") {
    const auto s = cyclic_monoid(1, 1);
    const auto prod = product(s, chain);
    const auto q = separative_quotient(prod);
    const auto qs = separative_quotient(s);
    const auto qc = separative_quotient(chain);
    CHECK(q.monoid.size() == qs.monoid.size() * qc.monoid.size());
    const auto nb = static_cast<std::uint32_t>(chain.size());
    for (std::uint32_t x = 0; x < prod.size(); ++x)
      for (std::uint32_t y = 0; y < prod.size(); ++y)
        CHECK(q.congruence.related(x, y) ==
              (qs.congruence.related(x / nb, y / nb) &&
               qc.congruence.related(x % nb, y % nb)));
  }
  SUBCASE("2-torsion quotient of <g|2g=3g> identifies g and 2g") {
    const auto q = p_torsion_quotient(cyclic_monoid(2, 1), PSet({2}));
    CHECK(q.monoid.size() == 2);
    CHECK(q.congruence.related(1, 2));
  }
  SUBCASE("torsion-free monoid gives identity") {
    const auto s = cyclic_monoid(1, 1);
    CHECK(p_torsion_quotient(s, PSet({2})).congruence == Congruence::identity(2));
  }
  SUBCASE("{0,1,inf} is already antisymmetric") {
    CHECK(antisymmetric_quotient(chain).congruence == Congruence::identity(3));
  }
  SUBCASE("Z/3 collapses under the antisymmetric quotient") {
    CHECK(antisymmetric_quotient(cyclic_monoid(0, 3)).monoid.size() == 1);
  }
}

TEST_CASE("quotients have their property and are homomorphic images") {
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    const auto can = cancellative_quotient(m);
    const auto sep = separative_quotient(m);
    const auto tor = p_torsion_quotient(m, PSet({2, 3}));
    const auto anti = antisymmetric_quotient(m);
    CHECK(oracle::cancellative(can.monoid));
    CHECK(oracle::separative(sep.monoid));
    CHECK(oracle::torsion_free(tor.monoid, PSet({2, 3}).members_up_to(64)));
    CHECK(oracle::antisymmetric(anti.monoid));
    for (const auto* q : {&can, &sep, &tor, &anti}) {
      CHECK(projection_is_homomorphism(m, *q));
    }
  }
}

TEST_CASE("subcone_at") {
  const auto t3 = cyclic_monoid(3, 1, {"0", "1", "2", "inf"});
  CHECK(subcone_at(t3, 0).size() == 1);
  CHECK(subcone_at(t3, 1).size() == 4);
  SUBCASE("product: M(a) matches the componentwise ≍ oracle") {
    const auto prod = product(cyclic_monoid(1, 1, {"0", "1"}), three_chain());
    const FiniteMonoid::element_type a = 3;  // (1,0)
    REQUIRE(prod.label(a) == "(1,0)");
    const auto members = subcone_elements(prod, a);
    std::vector<FiniteMonoid::element_type> expected{0};
    const FiniteMonoid s = cyclic_monoid(1, 1);
    const FiniteMonoid c = three_chain();
    for (std::uint32_t x = 1; x < prod.size(); ++x) {
      if (oracle::asymp(s, x / 3, a / 3) && oracle::asymp(c, x % 3, a % 3))
        expected.push_back(x);
    }
    CHECK(members == expected);
    CHECK(oracle::simple(subcone_at(prod, a)));
  }
  CHECK_THROWS_AS(subcone_at(t3, 9), DomainError);
}

TEST_CASE("decompose_multiple") {
  const auto t4 = cyclic_monoid(4, 1, {"0", "1", "2", "3", "inf"});
  SUBCASE("n = 1 forces c0 = b, c1 = a") {
    const auto c = decompose_multiple(t4, 2, 1, 1, 3);
    CHECK(c == std::vector<FiniteMonoid::element_type>{1, 2});
  }
  SUBCASE("a=2, b=1, n=3, c=1 puts the weight on c_2") {
    const auto c = decompose_multiple(t4, 2, 1, 3, 1);
    CHECK(c == std::vector<FiniteMonoid::element_type>{0, 0, 1, 0});
  }
  SUBCASE("a = 0 puts everything on c_0") {
    const auto c = decompose_multiple(t4, 0, 3, 3, 1);
    CHECK(c == std::vector<FiniteMonoid::element_type>{1, 0, 0, 0});
  }
  CHECK_THROWS_AS(decompose_multiple(t4, 1, 1, 3, 1), PreconditionError);
}

TEST_CASE("meet_in_class") {
  const auto chain = three_chain();
  CHECK(meet_in_class(chain, 2, 2) == 2);
  CHECK(meet_in_class(chain, 1, 2) == 1);
  CHECK_THROWS_AS(meet_in_class(chain, 0, 1), PreconditionError);
  SUBCASE("product: componentwise meets") {
    const auto prod = product(cyclic_monoid(4, 1), three_chain());
    for (std::uint32_t a = 0; a < prod.size(); ++a)
      for (std::uint32_t b = 0; b < prod.size(); ++b) {
        if (!oracle::asymp(prod, a, b)) continue;
        const auto c = meet_in_class(prod, a, b);
        CHECK(oracle::leq(prod, c, a));
        CHECK(oracle::leq(prod, c, b));
        CHECK(oracle::asymp(prod, c, a));
      }
  }
}
