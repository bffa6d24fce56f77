#include "doctest.h"

#include "cones/core/equations.hpp"
#include "cones/core/order.hpp"
#include "cones/core/predicates.hpp"
#include "cones/core/unitary.hpp"
#include "cones/finite/corpus.hpp"
#include "cones/presentation/constructions.hpp"
#include "cones/presentation/presented_monoid.hpp"
#include "cones/qcones/rational_cone.hpp"
#include "oracles.hpp"

using namespace cones;
using EV = ExponentVector;

namespace {

const FreeMonoid zplus(1);
EV n(std::uint64_t k) { return EV{k}; }

template <class M>
void self_test(const M& m, std::size_t bound) {
  const auto xs = m.enumerate(bound);
  REQUIRE_FALSE(xs.empty());
  CHECK(m.eq(xs.front(), m.zero()));
  for (const auto& x : xs) {
    CHECK(m.eq(m.add(x, m.zero()), x));
    for (const auto& y : xs) {
      CHECK(m.eq(m.add(x, y), m.add(y, x)));
      for (const auto& z : xs) {
        CHECK(m.eq(m.add(m.add(x, y), z), m.add(x, m.add(y, z))));
      }
    }
  }
}

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("order relations on Z+") {
  CHECK(leq_alg(zplus, n(2), n(5), 4).is_true());
  CHECK(leq_alg(zplus, n(5), n(2), 4).is_false());
  CHECK(leq_alg(zplus, n(3), n(3), 0).is_true());
  CHECK(propto(zplus, n(7), n(2), 5).is_true());
  CHECK(propto(zplus, n(1), n(0), 5).is_false());
  CHECK(asymp(zplus, n(1), n(4), 5).is_true());
}

TEST_CASE("order relations on threechain") {
  const auto m = three_chain();
  const auto one = m.at("1"), inf = m.at("inf");
  CHECK(leq_alg(m, inf, one, 0).is_false());
  CHECK(asymp(m, one, inf, 4).is_true());
}

TEST_CASE("predicates on Z+") {
  CHECK(is_conical(zplus, 6).is_true());
  CHECK(is_cancellative(zplus, 6).is_true());
  CHECK(is_separative(zplus, 6).is_true());
  CHECK(is_stably_finite(zplus, 6).is_true());
  CHECK(is_antisymmetric(zplus, 6).is_true());
  CHECK(is_simple(zplus, 6).is_true());
  CHECK(is_p_torsion_free(zplus, PSet({2}), 6).is_true());
  CHECK(is_p_unperforated(zplus, PSet({2}), 6).is_true());
  const auto qd = is_quasi_divisible(zplus, 6);
  CHECK(qd.is_false());
  CHECK(qd.witness() == "x=1 is not 2u+3v");
  CHECK(is_refinement(zplus, 6).is_true());
}

TEST_CASE("Z+ x Z+ is not simple") {
  const auto d = is_simple(FreeMonoid(2), 5);
  CHECK(d.is_false());
}

TEST_CASE("table predicates on small examples") {
  const auto chain = three_chain();
  CHECK(is_conical(chain, 0).is_true());
  CHECK(is_cancellative(chain, 0).is_false());
  CHECK(is_stably_finite(chain, 0).is_false());
  // 1 and inf satisfy 2x = x + y = 2y
  CHECK(is_separative(chain, 0).is_false());
  CHECK(is_simple(chain, 0).is_true());
  // 1 + 1 = 1 + inf: rows summing to 1 cannot give a column summing to inf
  const auto r = is_refinement(chain, 0);
  CHECK(r.is_false());
  CHECK(r.witness() == "1 + 1 = 1 + inf has no refinement matrix");
  CHECK(is_quasi_divisible(chain, 0).is_false());
  CHECK(is_p_torsion_free(chain, PSet({2}), 0).is_false());
  const auto z2 = cyclic_monoid(0, 2);
  CHECK(is_conical(z2, 0).is_false());
}

TEST_CASE("predicates agree with the table oracles on the corpus") {
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    auto exact = [](const Decision& d) {
      CHECK_FALSE(d.is_unknown());
      return d.is_true();
    };
    CHECK(exact(is_conical(m, 0)) == oracle::conical(m));
    CHECK(exact(is_cancellative(m, 0)) == oracle::cancellative(m));
    CHECK(exact(is_separative(m, 0)) == oracle::separative(m));
    CHECK(exact(is_stably_finite(m, 0)) == oracle::stably_finite(m));
    CHECK(exact(is_antisymmetric(m, 0)) == oracle::antisymmetric(m));
    CHECK(exact(is_simple(m, 0)) == oracle::simple(m));
    CHECK(exact(is_quasi_divisible(m, 0)) == oracle::quasi_divisible(m));
    CHECK(exact(is_refinement(m, 0)) == oracle::refinement(m));
    for (const auto& gens : std::vector<std::vector<std::uint32_t>>{
             {2}, {3}, {2, 3}, {5}}) {
      const PSet p(gens);
      // the oracle tries every member of P up to 64, not only generators
      const auto members = p.members_up_to(64);
      CHECK(exact(is_p_torsion_free(m, p, 0)) ==
            oracle::torsion_free(m, members));
      CHECK(exact(is_p_unperforated(m, p, 0)) ==
            oracle::unperforated(m, members));
    }
    const auto xs = m.enumerate();
    for (auto x : xs)
      for (auto y : xs) {
        CHECK(exact(leq_alg(m, x, y, 0)) == oracle::leq(m, x, y));
        CHECK(exact(propto(m, x, y, 0)) == oracle::propto(m, x, y));
        for (auto z : xs) {
          if (oracle::leq(m, x, y) && oracle::leq(m, y, z))
            CHECK(leq_alg(m, x, z, 0).is_true());
        }
      }
  }
}

TEST_CASE("torsion-free implies separative; quasi-divisible gives 2y <= x <= 3y") {
  int torsion_free = 0, quasi = 0;
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (is_p_torsion_free(m, PSet({p}), 0).is_true()) {
        ++torsion_free;
        CHECK(is_separative(m, 0).is_true());
      }
    }
    if (is_quasi_divisible(m, 0).is_true()) {
      ++quasi;
      for (auto x : m.enumerate()) {
        const auto [w, exhaustive] = quasi_division(m, x, 0);
        REQUIRE(w.has_value());
        const auto y = m.add(w->u, w->v);
        CHECK(oracle::leq(m, m.add(y, y), x));
        CHECK(oracle::leq(m, x, m.add(m.add(y, y), y)));
      }
    }
  }
  CHECK(torsion_free > 0);
  CHECK(quasi > 0);
}

TEST_CASE("solve_system") {
  using Eq = Equation<EV>;
  SUBCASE("2x = 4 over Z+") {
    const EquationSystem<EV> s(1, {Eq{{2}, n(0), {0}, n(4)}});
    const auto out = solve_system(zplus, s, 6);
    REQUIRE(out.assignment.has_value());
    CHECK((*out.assignment)[0] == n(2));
    CHECK(satisfies_all(zplus, s, *out.assignment));
  }
  SUBCASE("2x = 3 over Z+") {
    const EquationSystem<EV> s(1, {Eq{{2}, n(0), {0}, n(3)}});
    const auto out = solve_system(zplus, s, 6);
    CHECK_FALSE(out.assignment.has_value());
    CHECK_FALSE(out.exhaustive);
  }
  SUBCASE("refinement system on threechain") {
    const auto m = three_chain();
    const auto one = m.at("1");
    const auto s = refinement_system<FiniteMonoid::element_type>(0, one, one,
                                                                 one, one);
    const auto out = solve_system(m, s, 0);
    REQUIRE(out.assignment.has_value());
    CHECK(out.exhaustive);
    CHECK(satisfies_all(m, s, *out.assignment));
  }
  SUBCASE("ceiling") {
    const EquationSystem<EV> s(
        3, {Eq{{1, 1, 1}, n(0), {0, 0, 0}, n(1000)}});
    CHECK_THROWS_AS(solve_system(zplus, s, 30, SolveOptions{.ceiling = 100}),
                    SearchCeilingExceeded);
  }
  CHECK_THROWS_AS(EquationSystem<EV>(2, {Eq{{1}, n(0), {0, 0}, n(0)}}),
                  PreconditionError);
}

TEST_CASE("find_refinement_matrix") {
  const auto z = find_refinement_matrix(zplus, n(1), n(2), n(2), n(1), 6);
  REQUIRE(z.has_value());
  CHECK(z->c00 == n(1));
  CHECK(z->c01 == n(0));
  CHECK(z->c10 == n(1));
  CHECK(z->c11 == n(1));
  const auto zero_row = find_refinement_matrix(zplus, n(3), n(0), n(3), n(0), 6);
  REQUIRE(zero_row.has_value());
  CHECK(zero_row->c00 == n(3));
  CHECK(zero_row->c01 == n(0));
  CHECK(zero_row->c10 == n(0));
  CHECK(zero_row->c11 == n(0));
  CHECK_THROWS_AS(find_refinement_matrix(zplus, n(1), n(1), n(1), n(2), 6),
                  PreconditionError);

  const auto m = three_chain();
  const auto one = m.at("1"), inf = m.at("inf");
  const auto c = find_refinement_matrix(m, one, one, one, one, 0);
  REQUIRE(c.has_value());
  CHECK(c->c00 == one);
  CHECK(c->c01 == 0);
  CHECK(c->c10 == 0);
  CHECK(c->c11 == one);
  const auto d = find_refinement_matrix(m, inf, one, one, inf, 0);
  REQUIRE(d.has_value());
  CHECK(is_refinement_matrix(m, *d, inf, one, one, inf));
}

TEST_CASE("refinement matrices exist exactly when the oracle finds one") {
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    const auto xs = m.enumerate();
    for (auto a0 : xs)
      for (auto a1 : xs)
        for (auto b0 : xs)
          for (auto b1 : xs) {
            if (m.add(a0, a1) != m.add(b0, b1)) continue;
            const auto r = find_refinement_matrix(m, a0, a1, b0, b1, 0);
            CHECK(r.has_value() == oracle::has_matrix(m, a0, a1, b0, b1));
            if (r) CHECK(is_refinement_matrix(m, *r, a0, a1, b0, b1));
          }
  }
}

TEST_CASE("WSD instances") {
  const auto w = check_wsd_instance(zplus, n(2), n(3), n(5), n(4), 8);
  REQUIRE(w.has_value());
  CHECK(w->first == n(2));
  CHECK(w->second == n(3));
  const auto deg = check_wsd_instance(zplus, n(0), n(4), n(4), n(1), 8);
  REQUIRE(deg.has_value());
  CHECK(deg->first == n(0));
  CHECK(deg->second == n(4));
  CHECK_THROWS_AS(check_wsd_instance(zplus, n(1), n(1), n(3), n(0), 8),
                  PreconditionError);
}

TEST_CASE("unitary extensions") {
  SUBCASE("2Z+ inside Z+") {
    const auto v = is_unitary_extension<FreeMonoid>(
        [](const EV& x) { return x[0] % 2 == 0; }, zplus, 8);
    CHECK(v.cofinal.is_true());
    CHECK(v.unitary.is_true());
    CHECK(v.strongly_unitary.is_false());
  }
  SUBCASE("Z+ inside (1/2)Z+") {
    const RationalCone halves(1, {{q(1, 2)}});
    const auto v = is_unitary_extension<RationalCone>(
        [](const QVector& x) { return x[0].get_den() == 1; }, halves, 8);
    CHECK(v.cofinal.is_true());
    CHECK(v.unitary.is_true());
    // 2 * (1/2) = 1 lies in Z+ while 1/2 does not
    CHECK(v.strongly_unitary.is_false());
  }
  SUBCASE("M inside M") {
    const auto v = is_unitary_extension<FreeMonoid>(
        [](const EV&) { return true; }, FreeMonoid(2), 4);
    CHECK(v.unitary.is_true());
    CHECK(v.strongly_unitary.is_true());
  }
  SUBCASE("not a submonoid") {
    CHECK_THROWS_AS(is_unitary_extension<FreeMonoid>(
                        [](const EV& x) { return x[0] < 3; }, zplus, 4),
                    PreconditionError);
  }
}

TEST_CASE("backend axioms") {
  self_test(FreeMonoid(2), 3);
  self_test(PresentedMonoid(Presentation({"g", "h"}, {{EV{2, 0}, EV{1, 1}}})), 3);
  self_test(RationalCone(1, {{q(2)}, {q(7, 2)}}), 3);
  self_test(RationalCone(2, {{q(1), q(1, 3)}, {q(0), q(2)}}), 3);
  for (const auto& [name, m] : finite_corpus()) self_test(m, 0);
}
