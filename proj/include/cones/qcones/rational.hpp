#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cones {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

// "7/2", "5", "-1/3".  Throws DomainError on anything else.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);
// "7/2" in dimension one, "(1,7/2)" otherwise.
std::string format_qvector(const QVector& v);

// Denominator first, then the entries in order.
bool qvector_less(const QVector& a, const QVector& b);

}  // namespace cones
