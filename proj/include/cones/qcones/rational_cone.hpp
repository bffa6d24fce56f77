#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cones/decision.hpp"
#include "cones/qcones/rational.hpp"

namespace cones {

struct AperyTable;

// The submonoid of Q^d generated by finitely many nonnegative vectors.
// The ball of radius b holds every combination whose coefficients sum to
// at most b, ordered by common denominator and then by value.
class RationalCone {
 public:
  using element_type = QVector;

  RationalCone(std::size_t dim, std::vector<QVector> generators,
               std::size_t coeff_bound = 64);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<QVector>& generators() const noexcept {
    return generators_;
  }
  std::size_t coeff_bound() const noexcept { return coeff_bound_; }
  QVector element(const std::vector<std::string>& entries) const;

  QVector zero() const { return QVector(dim_, Rational(0)); }
  QVector add(const QVector& x, const QVector& y) const;
  bool eq(const QVector& x, const QVector& y) const { return x == y; }
  // Right dimension, nonnegative and (as far as the search can tell) a
  // combination of the generators.
  bool contains(const QVector& x) const;
  std::vector<QVector> enumerate(std::size_t bound) const;
  bool enumeration_complete(std::size_t bound) const;
  std::string describe(const QVector& x) const { return format_qvector(x); }

  std::optional<bool> decide_leq(const QVector& x, const QVector& y) const;
  // Exact in dimension one while the scaled target stays small.
  std::optional<std::vector<QVector>> summands(const QVector& y) const;
  std::optional<bool> decide_propto(const QVector& x, const QVector& y) const;

  // Lazily built residue table for dimension one (null otherwise or when
  // the smallest scaled generator is too large).
  const AperyTable* apery() const;

 private:
  std::size_t dim_;
  std::vector<QVector> generators_;
  std::size_t coeff_bound_;
  std::shared_ptr<const AperyTable> apery_;
};

struct Membership {
  Decision decision;
  // One coefficient per generator when decision is True.
  std::optional<std::vector<mpz_class>> certificate;
};

// Exact in dimension one (shortest paths over residues modulo the
// smallest scaled generator).  Otherwise a pruned depth-first search with
// every coefficient at most coeff_bound: False only when pruning alone
// exhausted the space, Unknown(coeff_bound) when the cap cut it short.
Membership cone_membership(const RationalCone& c, const QVector& v,
                           std::size_t coeff_bound);
inline Membership cone_membership(const RationalCone& c, const QVector& v) {
  return cone_membership(c, v, c.coeff_bound());
}

QVector combination(const RationalCone& c,
                    const std::vector<mpz_class>& coefficients);
std::string format_certificate(const RationalCone& c,
                               const std::vector<mpz_class>& coefficients);

}  // namespace cones
