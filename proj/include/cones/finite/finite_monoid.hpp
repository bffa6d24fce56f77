#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cones {

// A commutative monoid given by its full Cayley table.  Element 0 is the
// neutral element.  Commutativity, associativity and neutrality are checked
// over every pair and triple at construction.
class FiniteMonoid {
 public:
  using element_type = std::uint32_t;

  FiniteMonoid(std::vector<std::string> labels,
               std::vector<std::vector<element_type>> table);

  // Builds the table from an addition rule on indices 0..size-1.
  template <class F>
  static FiniteMonoid from_rule(std::vector<std::string> labels, F&& rule) {
    const auto n = static_cast<element_type>(labels.size());
    std::vector<std::vector<element_type>> table(
        n, std::vector<element_type>(n));
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) table[x][y] = rule(x, y);
    }
    return FiniteMonoid(std::move(labels), std::move(table));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(element_type x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<element_type> find(const std::string& label) const;
  element_type at(const std::string& label) const;

  // MonoidBackend
  element_type zero() const noexcept { return 0; }
  element_type add(element_type x, element_type y) const {
    return table_[static_cast<std::size_t>(x) * size() + y];
  }
  bool eq(element_type x, element_type y) const noexcept { return x == y; }
  bool contains(element_type x) const noexcept { return x < size(); }
  std::vector<element_type> enumerate(std::size_t bound = 0) const;
  bool enumeration_complete(std::size_t = 0) const noexcept { return true; }
  std::string describe(element_type x) const { return label(x); }

  std::optional<bool> decide_leq(element_type x, element_type y) const {
    return leq_[static_cast<std::size_t>(x) * size() + y] != 0;
  }
  std::optional<std::vector<element_type>> summands(element_type y) const;

  // The submonoid on the given elements (which must contain 0 and be
  // closed under addition), relabelled in the given order after 0.
  FiniteMonoid submonoid(std::span<const element_type> elements) const;

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<element_type> table_;  // row-major size × size
  std::vector<std::uint8_t> leq_;    // algebraic preorder, row-major
};

FiniteMonoid product(const FiniteMonoid& a, const FiniteMonoid& b);

// The cyclic monoid <g | index·g = (index+period)·g> with elements
// 0, g, ..., (index+period-1)·g.  index = 0 gives the group Z/period.
FiniteMonoid cyclic_monoid(std::uint32_t index, std::uint32_t period,
                           std::vector<std::string> labels = {});

// The join-semilattice of a finite lattice given by its order relation
// (leq[i][j] means i <= j; element 0 must be the bottom).
FiniteMonoid join_semilattice(std::vector<std::string> labels,
                              const std::vector<std::vector<bool>>& leq);

}  // namespace cones
