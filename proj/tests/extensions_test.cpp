#include "doctest.h"

#include "cones/core/predicates.hpp"
#include "cones/extensions/division.hpp"
#include "cones/extensions/wsd.hpp"
#include "cones/finite/corpus.hpp"
#include "cones/presentation/presented_monoid.hpp"
#include "cones/qcones/rational_cone.hpp"

using namespace cones;
using EV = ExponentVector;

namespace {

const FiniteMonoid& corpus(const std::string& name) {
  for (const auto& nm : finite_corpus()) {
    if (nm.name == name) return nm.monoid;
  }
  throw std::runtime_error("no corpus monoid " + name);
}

}  // namespace

TEST_CASE("division extension of Z+ by 2 at a = 1") {
  const auto n = division_extend(FreeMonoid(1), EV{1}, 2);
  CHECK(n.eq(n.add(n.u(), n.u()), n.j(EV{1})));
  CHECK(n.eq({EV{0}, 2}, {EV{1}, 0}));
  CHECK(n.eq({EV{3}, 0}, {EV{3}, 0}));
  CHECK_FALSE(n.eq({EV{3}, 0}, {EV{2}, 0}));
  CHECK_FALSE(n.eq({EV{1}, 1}, {EV{1}, 0}));
  // x + m·u behaves like x + m/2
  for (std::uint64_t x = 0; x < 5; ++x)
    for (std::uint64_t m = 0; m < 6; ++m)
      for (std::uint64_t y = 0; y < 5; ++y)
        for (std::uint64_t k = 0; k < 6; ++k)
          CHECK(n.eq({EV{x}, m}, {EV{y}, k}) == (2 * x + m == 2 * y + k));
  const auto r = check_division_extension(n, 4);
  CHECK(r.j_injective.is_true());
  CHECK(r.p_u_is_a.is_true());
  CHECK(r.shifted_equality.is_true());
  CHECK(r.conical.is_true());
  // cofinality witnesses can fall outside the ball of an infinite base
  CHECK_FALSE(r.unitary.is_false());
}

TEST_CASE("division extension of threechain at a = inf, p = 3") {
  const auto m = three_chain();
  const auto one = m.at("1"), inf = m.at("inf");
  const auto n = division_extend(m, inf, 3);
  CHECK(n.eq({0, 3}, {inf, 0}));
  CHECK(n.eq({one, 1}, {0, 1}));
  CHECK(n.enumeration_complete(0));
  CHECK_THROWS_AS(division_extend(m, 0u, 2), PreconditionError);
  CHECK_THROWS_AS(division_extend(m, one, 0), PreconditionError);
}

TEST_CASE("division extension rejects capped bases") {
  const Presentation p({"x", "y", "z"},
                       {{EV{1, 1, 0}, EV{0, 0, 1}}, {EV{0, 1, 1}, EV{1, 0, 0}}});
  CHECK_THROWS_AS(division_extend(PresentedMonoid(p, 1), EV{1, 0, 0}, 2),
                  PreconditionError);
}

TEST_CASE("division extensions of truncations and threechain") {
  for (const char* name : {"truncated3", "truncated4", "threechain"}) {
    const auto& m = corpus(name);
    for (FiniteMonoid::element_type a = 1; a < m.size(); ++a) {
      for (std::uint64_t p : {2u, 3u}) {
        CAPTURE(name);
        CAPTURE(a);
        CAPTURE(p);
        const auto n = division_extend(m, a, p);
        const auto r = check_division_extension(n, 0);
        CHECK(r.j_injective.is_true());
        CHECK(r.p_u_is_a.is_true());
        CHECK(r.shifted_equality.is_true());
        CHECK(r.conical.is_true());
        CHECK(r.unitary.is_true());
      }
    }
  }
}

TEST_CASE("division extension: ~ is a congruence, conical over conical bases") {
  for (const auto& [name, m] : finite_corpus()) {
    if (m.size() < 2) continue;
    const auto n = division_extend(m, m.size() - 1, 2);
    CAPTURE(name);
    std::vector<DivisionElement<FiniteMonoid::element_type>> xs;
    for (FiniteMonoid::element_type x = 0; x < m.size(); ++x)
      for (std::uint64_t k = 0; k < 5; ++k) xs.push_back({x, k});
    for (const auto& s : xs) {
      CHECK(n.eq(s, s));
      for (const auto& t : xs) {
        CHECK(n.eq(s, t) == n.eq(t, s));
        if (!n.eq(s, t)) continue;
        for (const auto& w : xs) {
          if (n.eq(t, w)) CHECK(n.eq(s, w));
          CHECK(n.eq(n.add(s, w), n.add(t, w)));
        }
      }
    }
    if (is_conical(m, 0).is_true()) CHECK(is_conical(n, 0).is_true());
  }
}

TEST_CASE("WSD extension of Z+ at a0 = a1 = 1, b = 2, c = 0") {
  const auto n = wsd_extend(FreeMonoid(1), EV{1}, EV{1}, EV{2}, EV{0});
  CHECK(n.eq(n.x0(), n.j(EV{1})));
  CHECK(n.eq(n.x1(), n.j(EV{1})));
  CHECK(n.eq(n.add(n.x0(), n.x1()), n.j(EV{2})));
  const auto r = check_wsd_extension(n, 4);
  CHECK(r.all_hold());
}

TEST_CASE("WSD extension case 2 peak") {
  // truncated4: 1 + 1 + 2 = inf = 3 + 2 although 1 + 1 != 3
  const auto& m = corpus("truncated4");
  const auto n = wsd_extend(m, m.at("1"), m.at("1"), m.at("3"), m.at("2"));
  const WsdElement<FiniteMonoid::element_type> peak{m.at("2"), 1, 1};
  const auto next = n.successors(peak);
  CHECK(next.size() == 3);
  CHECK(peak_joins(n, peak));
  CHECK(n.eq(peak, n.j(m.at("inf"))));
  const auto r = check_wsd_extension(n, 0);
  CHECK(r.solves_instance.is_true());
  CHECK(r.j_injective.is_true());
  CHECK(r.j_order_embedding.is_true());
  CHECK(r.conical.is_true());
}

TEST_CASE("WSD extension preconditions") {
  const FreeMonoid z(1);
  CHECK_THROWS_AS(wsd_extend(z, EV{0}, EV{1}, EV{1}, EV{0}), PreconditionError);
  CHECK_THROWS_AS(wsd_extend(z, EV{1}, EV{1}, EV{3}, EV{0}), PreconditionError);
}

TEST_CASE("WSD extensions: sampled local confluence on several bases") {
  std::size_t peaks = 0, failures = 0;
  auto run = [&](const auto& n, std::size_t ball) {
    const auto s = sample_local_confluence(n, ball, 3, 2000, 17 + peaks);
    CHECK(s.failures == 0);
    CHECK(s.peaks == 2000);
    peaks += s.peaks;
    failures += s.failures;
    CHECK(check_wsd_extension(n, std::min<std::size_t>(ball, 3))
              .solves_instance.is_true());
  };
  const auto chain = three_chain();
  run(wsd_extend(chain, chain.at("1"), chain.at("1"), chain.at("1"),
                 chain.at("1")),
      0);
  const auto& t4 = corpus("truncated4");
  run(wsd_extend(t4, t4.at("1"), t4.at("1"), t4.at("3"), t4.at("2")), 0);
  run(wsd_extend(FreeMonoid(1), EV{1}, EV{2}, EV{3}, EV{2}), 6);
  run(wsd_extend(FreeMonoid(2), EV{1, 0}, EV{0, 1}, EV{1, 1}, EV{1, 1}), 4);
  Rational two(2), seven(7), nine(9);
  run(wsd_extend(RationalCone(1, {{two}, {seven}}), QVector{two},
                 QVector{seven}, QVector{nine}, QVector{two}),
      4);
  CHECK(peaks >= 10000);
  CHECK(failures == 0);
}
