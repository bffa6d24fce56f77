#include "cones/qcones/rational.hpp"

#include <cctype>

#include "cones/errors.hpp"

namespace cones {

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' ||
      den[0] == '+') {
    throw DomainError("malformed rational '" + text + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_qvector(const QVector& v) {
  if (v.size() == 1) return format_rational(v[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_rational(v[i]);
  }
  return out + ")";
}

bool qvector_less(const QVector& a, const QVector& b) {
  mpz_class da = 1, db = 1;
  for (const auto& q : a) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& q : b) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), q.get_den_mpz_t());
  if (da != db) return da < db;
  return a < b;
}

}  // namespace cones
