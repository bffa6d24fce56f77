#include "cones/presentation/presented_monoid.hpp"

#include <algorithm>

#include "cones/errors.hpp"

namespace cones {

PresentedMonoid::PresentedMonoid(Presentation p, std::size_t max_iterations)
    : presentation_(std::move(p)),
      system_(complete(presentation_, max_iterations)) {}

PresentedMonoid::PresentedMonoid(Presentation p, RewriteSystem system)
    : presentation_(std::move(p)), system_(std::move(system)) {
  if (system_.generator_count() != presentation_.generator_count()) {
    throw PreconditionError("rewriting system does not match presentation");
  }
}

ExponentVector PresentedMonoid::normal_form(const ExponentVector& w) const {
  if (!contains(w)) throw DomainError("word has the wrong length");
  return cones::normal_form(system_, w);
}

ExponentVector PresentedMonoid::add(const ExponentVector& x,
                                    const ExponentVector& y) const {
  return system_.reduce(x + y);
}

bool PresentedMonoid::eq(const ExponentVector& x,
                         const ExponentVector& y) const {
  return normal_form(x) == normal_form(y);
}

std::vector<ExponentVector> PresentedMonoid::irreducible_of_degree(
    std::size_t degree) const {
  const std::size_t n = presentation_.generator_count();
  std::vector<ExponentVector> level{zero()};
  for (std::size_t d = 0; d < degree; ++d) {
    std::vector<ExponentVector> next;
    for (const auto& w : level) {
      // extend by generators at or after the last one used, so each word
      // is produced once
      std::size_t start = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != 0) start = i;
      }
      for (std::size_t i = start; i < n; ++i) {
        ExponentVector v = w;
        v[i] += 1;
        if (system_.is_irreducible(v)) next.push_back(std::move(v));
      }
    }
    level = std::move(next);
    if (level.empty()) break;
  }
  std::sort(level.begin(), level.end(), GradedLexLess{});
  return level;
}

std::vector<ExponentVector> PresentedMonoid::enumerate(
    std::size_t bound) const {
  if (!system_.is_complete()) {
    throw UndecidableError("cannot enumerate a capped presentation");
  }
  std::vector<ExponentVector> out;
  for (std::size_t d = 0; d <= bound; ++d) {
    auto level = irreducible_of_degree(d);
    if (level.empty()) break;
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool PresentedMonoid::enumeration_complete(std::size_t bound) const {
  // Irreducible words are closed under taking subwords, so an empty level
  // means every later level is empty too.
  return system_.is_complete() && irreducible_of_degree(bound + 1).empty();
}

ExponentVector FreeMonoid::element(
    std::vector<ExponentVector::value_type> v) const {
  if (v.size() != rank_) throw DomainError("vector has the wrong rank");
  return ExponentVector(std::move(v));
}

std::vector<ExponentVector> FreeMonoid::enumerate(std::size_t bound) const {
  std::vector<ExponentVector> out;
  std::vector<ExponentVector> level{zero()};
  out.push_back(zero());
  for (std::size_t d = 0; d < bound && rank_ > 0; ++d) {
    std::vector<ExponentVector> next;
    for (const auto& w : level) {
      std::size_t start = 0;
      for (std::size_t i = 0; i < rank_; ++i) {
        if (w[i] != 0) start = i;
      }
      for (std::size_t i = start; i < rank_; ++i) {
        ExponentVector v = w;
        v[i] += 1;
        next.push_back(std::move(v));
      }
    }
    std::sort(next.begin(), next.end(), GradedLexLess{});
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::string FreeMonoid::describe(const ExponentVector& x) const {
  if (rank_ == 1) return std::to_string(x[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

std::optional<std::vector<ExponentVector>> FreeMonoid::summands(
    const ExponentVector& y) const {
  if (!contains(y)) throw DomainError("vector has the wrong rank");
  std::vector<ExponentVector> out{zero()};
  // odometer over the box [0, y]
  ExponentVector v = zero();
  while (true) {
    std::size_t i = 0;
    while (i < rank_ && v[i] == y[i]) {
      v[i] = 0;
      ++i;
    }
    if (i == rank_) break;
    v[i] += 1;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::optional<bool> FreeMonoid::decide_propto(const ExponentVector& x,
                                              const ExponentVector& y) const {
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] != 0 && y[i] == 0) return false;
  }
  return true;
}

}  // namespace cones
