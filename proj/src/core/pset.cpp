#include "cones/core/pset.hpp"

#include <algorithm>
#include <set>

#include "cones/errors.hpp"

namespace cones {

PSet::PSet(std::vector<std::uint32_t> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw PreconditionError("P-set needs at least one generator");
  }
  for (auto p : generators_) {
    if (p < 2) throw PreconditionError("P-set generators must be >= 2");
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
}

std::vector<std::uint64_t> PSet::members_up_to(std::uint64_t limit) const {
  std::set<std::uint64_t> found;
  std::vector<std::uint64_t> frontier;
  for (auto p : generators_) {
    if (p <= limit && found.insert(p).second) frontier.push_back(p);
  }
  while (!frontier.empty()) {
    const std::uint64_t q = frontier.back();
    frontier.pop_back();
    for (auto p : generators_) {
      if (q > limit / p) continue;
      if (found.insert(q * p).second) frontier.push_back(q * p);
    }
  }
  return {found.begin(), found.end()};
}

bool PSet::contains(std::uint64_t p) const {
  if (p < 2) return false;
  if (std::binary_search(generators_.begin(), generators_.end(), p)) {
    return true;
  }
  for (auto g : generators_) {
    if (p % g == 0 && contains(p / g)) return true;
  }
  return false;
}

std::string PSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(generators_[i]);
  }
  return out + "}";
}

}  // namespace cones
