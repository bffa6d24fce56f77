#include "cones/finite/congruence.hpp"

#include <algorithm>
#include <map>

#include "cones/backend.hpp"
#include "cones/errors.hpp"
#include "cones/finite/union_find.hpp"

namespace cones {

namespace {

std::vector<std::uint32_t> normalise(const std::vector<std::uint32_t>& raw) {
  std::map<std::uint32_t, std::uint32_t> renumber;
  std::vector<std::uint32_t> out;
  out.reserve(raw.size());
  for (auto c : raw) {
    auto [it, inserted] =
        renumber.emplace(c, static_cast<std::uint32_t>(renumber.size()));
    out.push_back(it->second);
  }
  return out;
}

Congruence from_union_find(UnionFind& uf) {
  std::vector<std::uint32_t> raw(uf.size());
  for (std::size_t x = 0; x < uf.size(); ++x) {
    raw[x] = static_cast<std::uint32_t>(uf.find(x));
  }
  return Congruence(std::move(raw));
}

using Pairs = std::vector<std::pair<Congruence::Element, Congruence::Element>>;

}  // namespace

Congruence::Congruence(std::vector<std::uint32_t> class_of)
    : class_of_(normalise(class_of)) {
  for (auto c : class_of_) {
    class_count_ = std::max<std::size_t>(class_count_, c + 1);
  }
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::uint32_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<std::uint32_t>(i);
  return Congruence(std::move(ids));
}

bool Congruence::is_compatible_with(const FiniteMonoid& m) const {
  if (m.size() != size()) return false;
  const auto n = static_cast<Element>(size());
  const auto reps = representatives();
  // x ~ rep(x) implies x + z ~ rep(x) + z for every z suffices.
  for (Element x = 0; x < n; ++x) {
    const Element r = reps[class_of(x)];
    for (Element z = 0; z < n; ++z) {
      if (!related(m.add(x, z), m.add(r, z))) return false;
    }
  }
  return true;
}

bool Congruence::is_contained_in(const Congruence& other) const {
  if (other.size() != size()) return false;
  const auto reps = representatives();
  for (Element x = 0; x < size(); ++x) {
    if (!other.related(x, reps[class_of(x)])) return false;
  }
  return true;
}

std::vector<Congruence::Element> Congruence::representatives() const {
  std::vector<Element> reps(class_count_, 0);
  std::vector<bool> seen(class_count_, false);
  for (Element x = 0; x < size(); ++x) {
    if (!seen[class_of_[x]]) {
      seen[class_of_[x]] = true;
      reps[class_of_[x]] = x;
    }
  }
  return reps;
}

Congruence congruence_closure(const FiniteMonoid& m, const Pairs& pairs) {
  const std::size_t n = m.size();
  UnionFind uf(n);
  for (auto [x, y] : pairs) {
    if (!m.contains(x) || !m.contains(y)) {
      throw DomainError("congruence pair outside the monoid");
    }
    uf.unite(x, y);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Congruence::Element x = 0; x < n; ++x) {
      const auto r = static_cast<Congruence::Element>(uf.find(x));
      if (r == x) continue;
      for (Congruence::Element z = 0; z < n; ++z) {
        changed |= uf.unite(m.add(x, z), m.add(r, z));
      }
    }
  }
  return from_union_find(uf);
}

FiniteMonoid quotient_monoid(const FiniteMonoid& m, const Congruence& c) {
  if (!c.is_compatible_with(m)) {
    throw PreconditionError("partition is not a congruence");
  }
  const auto reps = c.representatives();
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back(m.label(r));
  return FiniteMonoid::from_rule(
      std::move(labels), [&](std::uint32_t i, std::uint32_t j) {
        return c.class_of(m.add(reps[i], reps[j]));
      });
}

namespace {

template <class Related>
Quotient quotient_by(const FiniteMonoid& m, Related&& related) {
  Pairs pairs;
  const auto n = static_cast<Congruence::Element>(m.size());
  for (Congruence::Element x = 0; x < n; ++x) {
    for (Congruence::Element y = x + 1; y < n; ++y) {
      if (related(x, y)) pairs.emplace_back(x, y);
    }
  }
  Congruence c = congruence_closure(m, pairs);
  FiniteMonoid q = quotient_monoid(m, c);
  return Quotient{std::move(q), std::move(c)};
}

}  // namespace

Quotient cancellative_quotient(const FiniteMonoid& m) {
  return quotient_by(m, [&](auto x, auto y) {
    for (Congruence::Element z = 0; z < m.size(); ++z) {
      if (m.add(x, z) == m.add(y, z)) return true;
    }
    return false;
  });
}

Quotient separative_quotient(const FiniteMonoid& m) {
  const std::size_t limit = m.size() + 1;
  return quotient_by(m, [&](auto x, auto y) {
    // nx and ny for n = 1, 2, ...
    auto nx = x;
    auto ny = y;
    for (std::size_t n = 1; n <= limit; ++n) {
      const auto next_x = m.add(nx, x);
      const auto next_y = m.add(ny, y);
      if (m.add(nx, y) == next_x && m.add(x, ny) == next_y) return true;
      nx = next_x;
      ny = next_y;
    }
    return false;
  });
}

Quotient p_torsion_quotient(const FiniteMonoid& m, const PSet& pset) {
  // q = product of the generators; every p in P divides q^K inside P for K
  // large, and two orbits of x -> q·x that ever meet have met after |M|
  // steps.
  std::uint64_t q = 1;
  for (auto p : pset.generators()) q *= p;
  const auto n = static_cast<Congruence::Element>(m.size());
  std::vector<Congruence::Element> image(n);
  for (Congruence::Element x = 0; x < n; ++x) image[x] = x;
  for (std::size_t step = 0; step < m.size(); ++step) {
    for (auto& v : image) v = multiple(m, q, v);
  }
  return quotient_by(m, [&](auto x, auto y) { return image[x] == image[y]; });
}

Quotient antisymmetric_quotient(const FiniteMonoid& m) {
  return quotient_by(m, [&](auto x, auto y) {
    return *m.decide_leq(x, y) && *m.decide_leq(y, x);
  });
}

bool projection_is_homomorphism(const FiniteMonoid& m, const Quotient& q) {
  const auto& c = q.congruence;
  if (c.class_of(m.zero()) != q.monoid.zero()) return false;
  for (Congruence::Element x = 0; x < m.size(); ++x) {
    for (Congruence::Element y = 0; y < m.size(); ++y) {
      if (c.class_of(m.add(x, y)) !=
          q.monoid.add(c.class_of(x), c.class_of(y))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Congruence> all_congruences(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  if (n > 10) throw PreconditionError("too many elements to list congruences");
  std::vector<Congruence> out;
  std::vector<std::uint32_t> rgs(n, 0);
  // Odometer over restricted growth strings: rgs[i] <= 1 + max(rgs[0..i)).
  while (true) {
    Congruence c(rgs);
    if (c.is_compatible_with(m)) out.push_back(std::move(c));
    std::size_t i = n;
    while (i > 1) {
      --i;
      std::uint32_t top = 0;
      for (std::size_t k = 0; k < i; ++k) top = std::max(top, rgs[k]);
      if (rgs[i] <= top) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
        break;
      }
      if (i == 1) return out;
    }
    if (n <= 1) return out;
  }
}

}  // namespace cones
