#include "cones/finite/finite_monoid.hpp"

#include <algorithm>
#include <set>

#include "cones/errors.hpp"

namespace cones {

FiniteMonoid::FiniteMonoid(std::vector<std::string> labels,
                           std::vector<std::vector<element_type>> table)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw PreconditionError("a monoid needs at least one element");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw PreconditionError("element labels must be distinct");
  }
  if (table.size() != n) throw PreconditionError("table must have one row per element");
  table_.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      throw PreconditionError("row '" + labels_[x] + "' has the wrong length");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] >= n) {
        throw PreconditionError("entry " + labels_[x] + "+" + labels_[y] +
                                " is out of range");
      }
      table_.push_back(table[x][y]);
    }
  }
  for (element_type x = 0; x < n; ++x) {
    if (add(0, x) != x) {
      throw PreconditionError("first element '" + labels_[0] +
                              "' is not neutral for '" + labels_[x] + "'");
    }
    for (element_type y = 0; y < x; ++y) {
      if (add(x, y) != add(y, x)) {
        throw PreconditionError("table is not commutative at " + labels_[x] +
                                "+" + labels_[y]);
      }
    }
  }
  for (element_type x = 0; x < n; ++x) {
    for (element_type y = 0; y < n; ++y) {
      const element_type xy = add(x, y);
      for (element_type z = 0; z < n; ++z) {
        if (add(xy, z) != add(x, add(y, z))) {
          throw PreconditionError("table is not associative at (" +
                                  labels_[x] + "," + labels_[y] + "," +
                                  labels_[z] + ")");
        }
      }
    }
  }
  leq_.assign(n * n, 0);
  for (element_type x = 0; x < n; ++x) {
    for (element_type z = 0; z < n; ++z) leq_[x * n + add(x, z)] = 1;
  }
}

std::optional<FiniteMonoid::element_type> FiniteMonoid::find(
    const std::string& label) const {
  for (element_type x = 0; x < size(); ++x) {
    if (labels_[x] == label) return x;
  }
  return std::nullopt;
}

FiniteMonoid::element_type FiniteMonoid::at(const std::string& label) const {
  if (auto x = find(label)) return *x;
  throw DomainError("no element labelled '" + label + "'");
}

std::vector<FiniteMonoid::element_type> FiniteMonoid::enumerate(
    std::size_t) const {
  std::vector<element_type> out(size());
  for (element_type x = 0; x < size(); ++x) out[x] = x;
  return out;
}

std::optional<std::vector<FiniteMonoid::element_type>> FiniteMonoid::summands(
    element_type y) const {
  if (!contains(y)) throw DomainError("element index out of range");
  std::vector<element_type> out;
  for (element_type x = 0; x < size(); ++x) {
    if (leq_[x * size() + y]) out.push_back(x);
  }
  return out;
}

FiniteMonoid FiniteMonoid::submonoid(
    std::span<const element_type> elements) const {
  std::vector<element_type> order{0};
  for (auto x : elements) {
    if (!contains(x)) throw DomainError("element index out of range");
    if (x != 0 && std::find(order.begin(), order.end(), x) == order.end()) {
      order.push_back(x);
    }
  }
  std::vector<std::int64_t> position(size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<std::int64_t>(i);
  std::vector<std::string> labels;
  std::vector<std::vector<element_type>> table(order.size());
  for (auto x : order) labels.push_back(labels_[x]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      const auto sum = add(order[i], order[j]);
      if (position[sum] < 0) {
        throw PreconditionError("subset is not closed under addition: " +
                                labels_[order[i]] + "+" + labels_[order[j]]);
      }
      table[i].push_back(static_cast<element_type>(position[sum]));
    }
  }
  return FiniteMonoid(std::move(labels), std::move(table));
}

FiniteMonoid product(const FiniteMonoid& a, const FiniteMonoid& b) {
  std::vector<std::string> labels;
  const auto nb = static_cast<FiniteMonoid::element_type>(b.size());
  for (FiniteMonoid::element_type x = 0; x < a.size(); ++x) {
    for (FiniteMonoid::element_type y = 0; y < nb; ++y) {
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    }
  }
  return FiniteMonoid::from_rule(
      std::move(labels),
      [&](FiniteMonoid::element_type p, FiniteMonoid::element_type q) {
        return a.add(p / nb, q / nb) * nb + b.add(p % nb, q % nb);
      });
}

FiniteMonoid cyclic_monoid(std::uint32_t index, std::uint32_t period,
                           std::vector<std::string> labels) {
  if (period == 0) throw PreconditionError("period must be positive");
  const std::uint32_t n = index + period;
  if (labels.empty()) {
    labels.push_back("0");
    for (std::uint32_t k = 1; k < n; ++k) {
      labels.push_back(k == 1 ? "g" : std::to_string(k) + "g");
    }
  }
  if (labels.size() != n) throw PreconditionError("need index+period labels");
  return FiniteMonoid::from_rule(
      std::move(labels), [=](std::uint32_t x, std::uint32_t y) {
        std::uint32_t k = x + y;
        if (k >= n) k = index + (k - index) % period;
        return k;
      });
}

FiniteMonoid join_semilattice(std::vector<std::string> labels,
                              const std::vector<std::vector<bool>>& leq) {
  const auto n = static_cast<std::uint32_t>(labels.size());
  return FiniteMonoid::from_rule(
      std::move(labels), [&](std::uint32_t x, std::uint32_t y) {
        // least upper bound
        std::optional<std::uint32_t> best;
        for (std::uint32_t z = 0; z < n; ++z) {
          if (!leq[x][z] || !leq[y][z]) continue;
          if (!best || leq[z][*best]) best = z;
        }
        if (!best) throw PreconditionError("order has no joins");
        return *best;
      });
}

}  // namespace cones
