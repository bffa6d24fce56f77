#include "cones/qcones/rational_cone.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "cones/errors.hpp"

namespace cones {

// Shortest representable value in each residue class modulo the smallest
// scaled generator.  v is a member iff v is at least the entry of its class.
struct AperyTable {
  mpz_class scale;                 // common denominator of the generators
  std::vector<mpz_class> scaled;   // generators times scale (0 for unused)
  std::size_t smallest = 0;        // index of the smallest positive one
  unsigned long modulus = 0;
  std::vector<std::optional<mpz_class>> dist;
  std::vector<std::size_t> via;          // generator used on the last step
  std::vector<unsigned long> previous;   // residue before that step
};

namespace {

constexpr unsigned long kMaxResidues = 4'000'000;
constexpr std::size_t kNodeCeiling = 10'000'000;

mpz_class common_denominator(const std::vector<QVector>& gens) {
  mpz_class l = 1;
  for (const auto& g : gens) {
    for (const auto& q : g) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  return l;
}

std::shared_ptr<const AperyTable> build_apery(
    const std::vector<QVector>& gens) {
  auto t = std::make_shared<AperyTable>();
  t->scale = common_denominator(gens);
  bool any = false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Rational s = gens[i][0] * t->scale;
    t->scaled.push_back(s.get_num());
    if (s > 0 && (!any || t->scaled[i] < t->scaled[t->smallest])) {
      t->smallest = i;
      any = true;
    }
  }
  if (!any) {
    t->modulus = 0;
    return t;
  }
  const mpz_class& g = t->scaled[t->smallest];
  if (g > kMaxResidues) return nullptr;
  t->modulus = g.get_ui();
  t->dist.assign(t->modulus, std::nullopt);
  t->via.assign(t->modulus, 0);
  t->previous.assign(t->modulus, 0);

  using Item = std::pair<mpz_class, unsigned long>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  t->dist[0] = mpz_class(0);
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (*t->dist[r] != d) continue;
    for (std::size_t i = 0; i < t->scaled.size(); ++i) {
      if (t->scaled[i] <= 0 || i == t->smallest) continue;
      const mpz_class nd = d + t->scaled[i];
      const mpz_class nr_z = nd % g;
      const unsigned long nr = nr_z.get_ui();
      if (!t->dist[nr] || nd < *t->dist[nr]) {
        t->dist[nr] = nd;
        t->via[nr] = i;
        t->previous[nr] = r;
        queue.emplace(nd, nr);
      }
    }
  }
  return t;
}

Membership apery_membership(const RationalCone& c, const AperyTable& t,
                            const Rational& v) {
  const Rational scaled = v * t.scale;
  if (scaled.get_den() != 1) {
    return {Decision::no("denominator of " + format_rational(v) +
                         " does not divide " + t.scale.get_str()),
            std::nullopt};
  }
  const mpz_class target = scaled.get_num();
  if (t.modulus == 0) {
    if (target == 0) {
      return {Decision::yes("0"),
              std::vector<mpz_class>(c.generators().size(), 0)};
    }
    return {Decision::no("only 0 is generated"), std::nullopt};
  }
  const mpz_class residue_z = target % t.scaled[t.smallest];
  const unsigned long r = residue_z.get_ui();
  if (!t.dist[r] || *t.dist[r] > target) {
    std::string why = "least member congruent to " + target.get_str() +
                      " mod " + std::to_string(t.modulus) + " is ";
    why += t.dist[r] ? t.dist[r]->get_str() : std::string("none");
    return {Decision::no(why), std::nullopt};
  }
  std::vector<mpz_class> coeffs(c.generators().size(), 0);
  for (unsigned long at = r; at != 0; at = t.previous[at]) {
    coeffs[t.via[at]] += 1;
  }
  coeffs[t.smallest] += (target - *t.dist[r]) / t.scaled[t.smallest];
  return {Decision::yes(format_certificate(c, coeffs)), coeffs};
}

struct Dfs {
  const std::vector<QVector>& gens;
  std::size_t cap;
  std::vector<std::vector<bool>> later_support;  // [i][j]: some gen >= i hits j
  std::vector<mpz_class> coeffs;
  bool capped = false;
  std::size_t nodes = 0;

  bool run(std::size_t i, const QVector& rem) {
    if (++nodes > kNodeCeiling) throw SearchCeilingExceeded(kNodeCeiling);
    const std::size_t d = rem.size();
    for (std::size_t j = 0; j < d; ++j) {
      if (rem[j] > 0 && (i == gens.size() || !later_support[i][j])) return false;
    }
    if (i == gens.size()) return true;
    const QVector& g = gens[i];
    std::optional<mpz_class> most;
    for (std::size_t j = 0; j < d; ++j) {
      if (g[j] > 0) {
        const Rational ratio = rem[j] / g[j];
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
        if (!most || fl < *most) most = fl;
      }
    }
    if (!most) return run(i + 1, rem);  // the zero vector contributes nothing
    if (*most > cap) {
      capped = true;
      most = cap;
    }
    for (mpz_class k = *most; k >= 0; --k) {
      QVector next = rem;
      for (std::size_t j = 0; j < d; ++j) next[j] -= Rational(k) * g[j];
      coeffs[i] = k;
      if (run(i + 1, next)) return true;
    }
    coeffs[i] = 0;
    return false;
  }
};

Membership dfs_membership(const RationalCone& c, const QVector& v,
                          std::size_t cap) {
  const auto& gens = c.generators();
  Dfs dfs{gens, cap, {}, std::vector<mpz_class>(gens.size(), 0)};
  dfs.later_support.assign(gens.size() + 1, std::vector<bool>(c.dim(), false));
  for (std::size_t i = gens.size(); i-- > 0;) {
    for (std::size_t j = 0; j < c.dim(); ++j) {
      dfs.later_support[i][j] = dfs.later_support[i + 1][j] || gens[i][j] > 0;
    }
  }
  if (dfs.run(0, v)) {
    return {Decision::yes(format_certificate(c, dfs.coeffs)), dfs.coeffs};
  }
  if (dfs.capped) {
    return {Decision::unknown(cap, "coefficients capped at " +
                                       std::to_string(cap)),
            std::nullopt};
  }
  return {Decision::no("no combination fits under " + format_qvector(v)),
          std::nullopt};
}

}  // namespace

RationalCone::RationalCone(std::size_t dim, std::vector<QVector> generators,
                           std::size_t coeff_bound)
    : dim_(dim), generators_(std::move(generators)), coeff_bound_(coeff_bound) {
  if (dim_ == 0) throw PreconditionError("cone dimension must be positive");
  for (auto& g : generators_) {
    if (g.size() != dim_) throw PreconditionError("generator has wrong dimension");
    for (auto& q : g) {
      q.canonicalize();
      if (q < 0) throw PreconditionError("generators must be nonnegative");
    }
  }
  if (dim_ == 1) apery_ = build_apery(generators_);
}

QVector RationalCone::element(const std::vector<std::string>& entries) const {
  if (entries.size() != dim_) throw DomainError("vector has wrong dimension");
  QVector v;
  for (const auto& e : entries) v.push_back(parse_rational(e));
  return v;
}

const AperyTable* RationalCone::apery() const { return apery_.get(); }

QVector RationalCone::add(const QVector& x, const QVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw DomainError("vector has wrong dimension");
  }
  QVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = x[i] + y[i];
  return out;
}

bool RationalCone::contains(const QVector& x) const {
  if (x.size() != dim_) return false;
  for (const auto& q : x) {
    if (q < 0) return false;
  }
  return cone_membership(*this, x).decision.is_true();
}

std::vector<QVector> RationalCone::enumerate(std::size_t bound) const {
  std::set<QVector> seen{zero()};
  std::vector<QVector> frontier{zero()};
  for (std::size_t step = 0; step < bound; ++step) {
    std::vector<QVector> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators_) {
        QVector y = add(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  std::vector<QVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), qvector_less);
  return out;
}

bool RationalCone::enumeration_complete(std::size_t) const {
  for (const auto& g : generators_) {
    for (const auto& q : g) {
      if (q != 0) return false;
    }
  }
  return true;
}

std::optional<bool> RationalCone::decide_leq(const QVector& x,
                                             const QVector& y) const {
  QVector diff(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    diff[i] = y.at(i) - x.at(i);
    if (diff[i] < 0) return false;
  }
  const auto m = cone_membership(*this, diff);
  if (m.decision.is_unknown()) return std::nullopt;
  return m.decision.is_true();
}

std::optional<std::vector<QVector>> RationalCone::summands(
    const QVector& y) const {
  const AperyTable* t = apery();
  if (dim_ != 1 || t == nullptr) return std::nullopt;
  const Rational scaled = y.at(0) * t->scale;
  if (scaled.get_den() != 1 || scaled > 2'000'000) return std::nullopt;
  const unsigned long top = scaled.get_num().get_ui();
  std::vector<QVector> out;
  for (unsigned long k = 0; k <= top; ++k) {
    const QVector z{Rational(mpz_class(k), t->scale)};
    if (apery_membership(*this, *t, z[0]).decision.is_true() &&
        apery_membership(*this, *t, y[0] - z[0]).decision.is_true()) {
      out.push_back(z);
    }
  }
  for (auto& z : out) z[0].canonicalize();
  return out;
}

std::optional<bool> RationalCone::decide_propto(const QVector& x,
                                                const QVector& y) const {
  // In dimension one every large enough multiple of a positive member
  // dominates any member: the cone contains all large points of its group.
  if (dim_ != 1) return std::nullopt;
  return x.at(0) == 0 || y.at(0) > 0;
}

Membership cone_membership(const RationalCone& c, const QVector& v,
                           std::size_t coeff_bound) {
  if (v.size() != c.dim()) throw DomainError("vector has wrong dimension");
  for (const auto& q : v) {
    if (q < 0) return {Decision::no("negative entry"), std::nullopt};
  }
  if (const AperyTable* t = c.apery()) return apery_membership(c, *t, v[0]);
  return dfs_membership(c, v, coeff_bound);
}

QVector combination(const RationalCone& c,
                    const std::vector<mpz_class>& coefficients) {
  if (coefficients.size() != c.generators().size()) {
    throw PreconditionError("one coefficient per generator");
  }
  QVector out = c.zero();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    for (std::size_t j = 0; j < c.dim(); ++j) {
      out[j] += Rational(coefficients[i]) * c.generators()[i][j];
    }
  }
  return out;
}

std::string format_certificate(const RationalCone& c,
                               const std::vector<mpz_class>& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coefficients[i].get_str() + "*" + format_qvector(c.generators()[i]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cones
