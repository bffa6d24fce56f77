#include "cones/presentation/exponent_vector.hpp"

#include <algorithm>
#include <numeric>

#include "cones/errors.hpp"

namespace cones {

ExponentVector::value_type ExponentVector::degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), value_type{0});
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](value_type e) { return e == 0; });
}

bool ExponentVector::dominates(const ExponentVector& other) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] < other.entries_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::join(const ExponentVector& other) const {
  ExponentVector out(*this);
  for (std::size_t i = 0; i < size(); ++i) {
    out.entries_[i] = std::max(out.entries_[i], other.entries_[i]);
  }
  return out;
}

bool ExponentVector::overlaps(const ExponentVector& other) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] != 0 && other.entries_[i] != 0) return true;
  }
  return false;
}

ExponentVector ExponentVector::embedded(std::size_t n,
                                        std::size_t offset) const {
  if (offset + size() > n) throw DomainError("word does not fit");
  ExponentVector out(n);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin() + offset);
  return out;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.size() != size()) throw DomainError("word length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  if (other.size() != size() || !dominates(other)) {
    throw DomainError("word subtraction would go negative");
  }
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a.entries() < b.entries();
}

std::size_t ExponentVectorHash::operator()(
    const ExponentVector& v) const noexcept {
  std::size_t h = v.size();
  for (auto e : v.entries()) {
    h ^= std::hash<ExponentVector::value_type>{}(e) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::string format_word(const ExponentVector& w,
                        const std::vector<std::string>& names) {
  if (w.size() != names.size()) throw DomainError("word length mismatch");
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(w[i]) + "*" + names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace cones
