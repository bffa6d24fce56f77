#include "cones/finite/corpus.hpp"

namespace cones {

FiniteMonoid three_chain() { return cyclic_monoid(2, 1, {"0", "1", "inf"}); }

FiniteMonoid four_element_collapse() {
  // 0 x y s
  return FiniteMonoid({"0", "x", "y", "s"}, {{0, 1, 2, 3},
                                             {1, 3, 3, 3},
                                             {2, 3, 3, 3},
                                             {3, 3, 3, 3}});
}

namespace {

std::vector<std::vector<bool>> order_from_covers(
    std::size_t n, const std::vector<std::pair<int, int>>& below) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : below) leq[lo][hi] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return leq;
}

std::vector<NamedMonoid> build_corpus() {
  std::vector<NamedMonoid> out;
  auto add = [&](std::string name, FiniteMonoid m) {
    out.push_back(NamedMonoid{std::move(name), std::move(m)});
  };
  const FiniteMonoid semilattice2 = cyclic_monoid(1, 1, {"0", "a"});
  add("trivial", FiniteMonoid({"0"}, {{0}}));
  add("semilattice2", semilattice2);
  add("z2", cyclic_monoid(0, 2, {"0", "g"}));
  add("z3", cyclic_monoid(0, 3));
  add("threechain", three_chain());
  add("cyclic_1_2", cyclic_monoid(1, 2));
  add("truncated3", cyclic_monoid(3, 1, {"0", "1", "2", "inf"}));
  add("truncated4", cyclic_monoid(4, 1, {"0", "1", "2", "3", "inf"}));
  add("cyclic_2_2", cyclic_monoid(2, 2));
  add("cyclic_1_3", cyclic_monoid(1, 3));
  add("cyclic_3_2", cyclic_monoid(3, 2));
  add("chain3", join_semilattice({"0", "a", "b"},
                                 order_from_covers(3, {{0, 1}, {1, 2}})));
  add("boolean4", product(semilattice2, semilattice2));
  add("collapse4", four_element_collapse());
  add("diamond5",
      join_semilattice({"0", "a", "b", "c", "1"},
                       order_from_covers(5, {{0, 1}, {0, 2}, {0, 3},
                                             {1, 4}, {2, 4}, {3, 4}})));
  add("pentagon5",
      join_semilattice({"0", "a", "b", "c", "1"},
                       order_from_covers(5, {{0, 1}, {1, 2}, {0, 3},
                                             {2, 4}, {3, 4}})));
  // {0, a, b, inf}: every sum of two nonzero elements is inf.
  add("twoatoms_inf",
      FiniteMonoid::from_rule({"0", "a", "b", "inf"},
                              [](std::uint32_t x, std::uint32_t y) {
                                if (x == 0) return y;
                                if (y == 0) return x;
                                return 3U;
                              }));
  // {0, a, b, a+b, inf}: a and b are free up to a+b, anything larger is inf.
  add("square_inf",
      FiniteMonoid::from_rule({"0", "a", "b", "a+b", "inf"},
                              [](std::uint32_t x, std::uint32_t y) {
                                if (x == 0) return y;
                                if (y == 0) return x;
                                if ((x == 1 && y == 2) || (x == 2 && y == 1)) {
                                  return 3U;
                                }
                                return 4U;
                              }));
  add("semilattice2_x_threechain", product(semilattice2, three_chain()));
  add("z2_x_semilattice2", product(cyclic_monoid(0, 2, {"0", "g"}),
                                   semilattice2));
  return out;
}

}  // namespace

const std::vector<NamedMonoid>& finite_corpus() {
  static const std::vector<NamedMonoid> corpus = build_corpus();
  return corpus;
}

}  // namespace cones
