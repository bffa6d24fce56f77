#include <random>
#include <set>

#include "doctest.h"

#include "cones/core/order.hpp"
#include "cones/errors.hpp"
#include "cones/finite/corpus.hpp"
#include "cones/presentation/constructions.hpp"
#include "cones/presentation/presentation.hpp"
#include "cones/presentation/presented_monoid.hpp"

using namespace cones;
using EV = ExponentVector;

TEST_CASE("graded-lex order") {
  CHECK(graded_lex_less(EV{1, 0}, EV{0, 2}));
  CHECK(graded_lex_less(EV{0, 2}, EV{1, 1}));
  CHECK_FALSE(graded_lex_less(EV{1, 1}, EV{1, 1}));
  CHECK(graded_lex_less(EV{0, 0}, EV{0, 1}));
}

TEST_CASE("completion of <g | 2g = 3g>") {
  const Presentation p({"g"}, {{EV{2}, EV{3}}});
  const auto r = complete(p);
  REQUIRE(r.is_complete());
  REQUIRE(r.rules().size() == 1);
  CHECK(r.rules()[0] == Rule{EV{3}, EV{2}});
  CHECK(normal_form(r, EV{5}) == EV{2});
  CHECK(normal_form(r, EV{0}) == EV{0});
  CHECK(normal_form(r, EV{1}) == EV{1});

  const PresentedMonoid m(p);
  const auto ball = m.enumerate(10);
  CHECK(ball == std::vector<EV>{EV{0}, EV{1}, EV{2}});
  CHECK(m.enumeration_complete(2));
  CHECK(m.describe(EV{2}) == "2*g");
}

TEST_CASE("no relations gives an empty system") {
  const Presentation p({"x", "y"}, {});
  const auto r = complete(p);
  CHECK(r.is_complete());
  CHECK(r.rules().empty());
  CHECK(normal_form(r, EV{3, 4}) == EV{3, 4});
}

TEST_CASE("<u, a | 2u = a> orients the longer word down") {
  const Presentation p({"u", "a"}, {{EV{2, 0}, EV{0, 1}}});
  const auto r = complete(p);
  REQUIRE(r.is_complete());
  REQUIRE(r.rules().size() == 1);
  CHECK(r.rules()[0] == Rule{EV{2, 0}, EV{0, 1}});
  CHECK(words_equal(r, EV{4, 0}, EV{0, 2}).is_true());
  CHECK(words_equal(r, EV{1, 0}, EV{0, 1}).is_false());
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation({"x", "x"}, {}), PreconditionError);
  CHECK_THROWS_AS(Presentation({"x"}, {{EV{1, 0}, EV{1}}}), PreconditionError);
  CHECK_THROWS_AS(complete(Presentation({"x"}, {}), 0), PreconditionError);
}

TEST_CASE("capped systems refuse normal forms") {
  const Presentation p({"x", "y", "z"},
                       {{EV{1, 1, 0}, EV{0, 0, 1}}, {EV{0, 1, 1}, EV{1, 0, 0}}});
  const auto r = complete(p, 1);
  REQUIRE(r.status() == CompletionStatus::Capped);
  CHECK_THROWS_AS(normal_form(r, EV{1, 1, 1}), UndecidableError);
  CHECK(words_equal(r, EV{1, 1, 0}, EV{0, 0, 1}).is_true());
  CHECK(words_equal(r, EV{1, 0, 0}, EV{0, 0, 1}).is_unknown());
  CHECK_THROWS_AS(PresentedMonoid(p, 1).enumerate(2), UndecidableError);
}

namespace {

EV random_word(std::mt19937& rng, std::size_t n, int max_degree) {
  EV w(n);
  const int degree = std::uniform_int_distribution<int>(0, max_degree)(rng);
  for (int k = 0; k < degree; ++k) {
    w[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] += 1;
  }
  return w;
}

}  // namespace

TEST_CASE("random presentations: critical pairs join, nf is additive") {
  std::mt19937 rng(20260);
  int completed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const int relations = std::uniform_int_distribution<int>(0, 3)(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    std::vector<Relation> rels;
    for (int k = 0; k < relations; ++k) {
      rels.emplace_back(random_word(rng, n, 3), random_word(rng, n, 3));
    }
    const Presentation p(names, rels);
    const auto r = complete(p, 2000);
    if (!r.is_complete()) continue;
    ++completed;
    CAPTURE(trial);
    CHECK(critical_pairs_join(r));
    for (const auto& [u, v] : rels) CHECK(normal_form(r, u) == normal_form(r, v));
    for (int k = 0; k < 20; ++k) {
      const EV w = random_word(rng, n, 6);
      const EV v = random_word(rng, n, 6);
      const EV nw = normal_form(r, w);
      CHECK(normal_form(r, nw) == nw);
      CHECK(r.is_irreducible(nw));
      CHECK(normal_form(r, nw + normal_form(r, v)) == normal_form(r, w + v));
      CHECK(!graded_lex_less(w, nw));
    }
  }
  CHECK(completed > 250);
}

TEST_CASE("to_presentation round-trips every corpus table") {
  for (const auto& [name, m] : finite_corpus()) {
    CAPTURE(name);
    const Presentation p = to_presentation(m);
    CHECK(p.relations().size() == (m.size() - 1) * m.size() / 2);
    const PresentedMonoid pm(p);
    REQUIRE(pm.decidable_equality());
    CHECK(pm.enumerate(m.size() + 1).size() == m.size());
    CHECK(pm.enumeration_complete(m.size()));
    std::set<std::vector<std::uint64_t>> forms;
    for (FiniteMonoid::element_type x = 0; x < m.size(); ++x) {
      forms.insert(pm.normal_form(element_word(m, x)).entries());
      for (FiniteMonoid::element_type y = 0; y < m.size(); ++y) {
        CHECK(pm.eq(element_word(m, x) + element_word(m, y),
                    element_word(m, m.add(x, y))));
      }
    }
    CHECK(forms.size() == m.size());
  }
}

TEST_CASE("to_presentation of threechain has three relations") {
  CHECK(to_presentation(three_chain()).relations().size() == 3);
  const auto two = FiniteMonoid({"0", "a"}, {{0, 1}, {1, 1}});
  const auto p = to_presentation(two);
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0] == Relation{EV{2}, EV{1}});
}

TEST_CASE("free monoid backend") {
  const FreeMonoid z2(2);
  CHECK(z2.enumerate(2).size() == 6);
  CHECK(z2.enumerate(2).front() == EV{0, 0});
  CHECK(z2.decide_leq(EV{1, 0}, EV{2, 1}) == true);
  CHECK(z2.decide_leq(EV{0, 2}, EV{2, 1}) == false);
  CHECK(z2.summands(EV{1, 2})->size() == 6);
  CHECK(z2.decide_propto(EV{5, 0}, EV{1, 0}) == true);
  CHECK(z2.decide_propto(EV{1, 1}, EV{1, 0}) == false);
  CHECK(FreeMonoid(1).describe(EV{7}) == "7");
  CHECK(z2.describe(EV{1, 3}) == "(1,3)");
  CHECK(propto(z2, EV{1, 1}, EV{1, 2}, 4).is_true());
}

TEST_CASE("R+ membership against generator combinations on [0,6]^4") {
  const auto rp = r_plus();
  // reachable sums of the four generators, coefficients up to 12
  std::set<std::vector<std::uint64_t>> sums;
  for (std::uint64_t p0 = 0; p0 <= 6; ++p0)
    for (std::uint64_t p1 = 0; p1 <= 6; ++p1)
      for (std::uint64_t q0 = 0; q0 <= 6; ++q0)
        for (std::uint64_t q1 = 0; q1 <= 6; ++q1) {
          EV v = p0 * rp.generators[0] + p1 * rp.generators[1] +
                 q0 * rp.generators[2] + q1 * rp.generators[3];
          sums.insert(v.entries());
        }
  int members = 0;
  for (std::uint64_t a = 0; a <= 6; ++a)
    for (std::uint64_t b = 0; b <= 6; ++b)
      for (std::uint64_t c = 0; c <= 6; ++c)
        for (std::uint64_t d = 0; d <= 6; ++d) {
          const EV v{a, b, c, d};
          const bool reachable = sums.count(v.entries()) > 0;
          CHECK(r_plus_member(v) == reachable);
          const auto coeffs = r_plus_coefficients(v);
          CHECK(coeffs.has_value() == reachable);
          if (coeffs) {
            ++members;
            const auto& [p0, p1, q0, q1] = *coeffs;
            CHECK(p0 * rp.generators[0] + p1 * rp.generators[1] +
                      q0 * rp.generators[2] + q1 * rp.generators[3] ==
                  v);
          }
        }
  CHECK(members > 0);
  CHECK(r_plus_member(EV{1, 1, 1, 1}));
  CHECK(r_plus_member(EV{2, 1, 1, 0}));
  CHECK_FALSE(r_plus_member(EV{1, 0, 0, 0}));
  CHECK(rp.presentation.relations().size() == 1);
}

TEST_CASE("pushout") {
  SUBCASE("one generator: p*u = a") {
    const Presentation b({"u"}, {});
    const Presentation c({"a"}, {});
    const auto n = pushout(1, b, c, {EV{3}}, {EV{1}});
    CHECK(n.generator_names() == std::vector<std::string>{"u", "a"});
    REQUIRE(n.relations().size() == 1);
    CHECK(n.relations()[0] == Relation{EV{3, 0}, EV{0, 1}});
  }
  SUBCASE("trivial C kills the images") {
    const Presentation b({"x", "y"}, {});
    const Presentation c({}, {});
    const PresentedMonoid n(pushout(1, b, c, {EV{1, 1}}, {EV{}}));
    CHECK(n.eq(EV{1, 1}, EV{0, 0}));
    CHECK_FALSE(n.eq(EV{1, 0}, EV{0, 0}));
  }
  SUBCASE("clashing names get primes") {
    const Presentation b({"x"}, {});
    const auto n = pushout(0, b, b, {}, {});
    CHECK(n.generator_names() == std::vector<std::string>{"x", "x'"});
  }
  CHECK_THROWS_AS(pushout(1, Presentation({"x"}, {}), Presentation({"y"}, {}),
                          {EV{1}}, {}),
                  PreconditionError);
}

TEST_CASE("refinement step on <t> with all four entries t") {
  const Presentation m({"t"}, {});
  const auto step = refinement_step(m, EV{1}, EV{1}, EV{1}, EV{1}, 5);
  REQUIRE_FALSE(step.degenerate);
  REQUIRE(step.extension.has_value());
  const auto& np = step.extension->presentation();
  CHECK(np.generator_names() ==
        std::vector<std::string>{"e0", "e1", "e2", "e3", "t"});
  CHECK(np.relations().size() == 4);
  CHECK(step.extension->decidable_equality());
  CHECK(critical_pairs_join(step.extension->system()));
  CHECK(step.matrix_valid.is_true());
  CHECK(step.injective_on_ball.is_true());
  CHECK(step.conical_on_ball.is_true());
  CHECK(step.unitary.is_true());
  CHECK(step.strongly_unitary.is_true());
  CHECK(step.all_checks_pass());
}

TEST_CASE("refinement step degenerate cases") {
  const Presentation m({"t"}, {});
  const auto step = refinement_step(m, EV{0}, EV{2}, EV{1}, EV{1});
  CHECK(step.degenerate);
  CHECK_FALSE(step.extension.has_value());
  CHECK(step.matrix.c00 == EV{0});
  CHECK(step.matrix.c01 == EV{0});
  CHECK(step.matrix.c10 == EV{1});
  CHECK(step.matrix.c11 == EV{1});
  CHECK(step.matrix_valid.is_true());
  CHECK_THROWS_AS(refinement_step(m, EV{1}, EV{1}, EV{1}, EV{0}),
                  PreconditionError);
}

TEST_CASE("refinement step on threechain at (1, inf, inf, 1)") {
  const auto m = three_chain();
  const auto one = m.at("1");
  const auto inf = m.at("inf");
  const auto step = refinement_step(m, one, inf, inf, one, 4);
  REQUIRE(step.extension.has_value());
  CHECK(step.matrix_valid.is_true());
  CHECK(step.injective_on_ball.is_true());
  CHECK(step.conical_on_ball.is_true());
  CHECK(step.unitary.is_true());
  CHECK(step.strongly_unitary.is_true());
}
