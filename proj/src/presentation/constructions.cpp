#include "cones/presentation/constructions.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "cones/core/unitary.hpp"
#include "cones/errors.hpp"

namespace cones {

namespace {

constexpr std::size_t kMatrixGenerators = 4;

std::vector<ExponentVector> r_plus_vectors() {
  return {ExponentVector{1, 1, 0, 0}, ExponentVector{0, 0, 1, 1},
          ExponentVector{1, 0, 1, 0}, ExponentVector{0, 1, 0, 1}};
}

}  // namespace

RPlus r_plus() {
  Presentation p({"a0", "a1", "b0", "b1"},
                 {{ExponentVector{1, 1, 0, 0}, ExponentVector{0, 0, 1, 1}}});
  const auto v = r_plus_vectors();
  return RPlus{std::move(p), {v[0], v[1], v[2], v[3]}};
}

bool r_plus_member(const ExponentVector& v) {
  if (v.size() != 4) throw DomainError("R+ lives in (Z+)^4");
  return v[0] + v[3] == v[1] + v[2];
}

std::optional<std::array<ExponentVector::value_type, 4>> r_plus_coefficients(
    const ExponentVector& v) {
  if (!r_plus_member(v)) return std::nullopt;
  // v = p0 a0 + p1 a1 + q0 b0 + q1 b1 means
  // v0 = p0+q0, v1 = p0+q1, v2 = p1+q0, v3 = p1+q1.
  const auto p0 = std::min(v[0], v[1]);
  const auto q0 = v[0] - p0;
  const auto q1 = v[1] - p0;
  const auto p1 = v[2] - q0;
  return std::array<ExponentVector::value_type, 4>{p0, p1, q0, q1};
}

Presentation pushout(std::size_t a_generators, const Presentation& b,
                     const Presentation& c,
                     const std::vector<ExponentVector>& e_images,
                     const std::vector<ExponentVector>& f_images) {
  if (e_images.size() != a_generators || f_images.size() != a_generators) {
    throw PreconditionError("need one image per generator of A");
  }
  for (const auto& w : e_images) {
    if (w.size() != b.generator_count())
      throw PreconditionError("e image is not a word of B");
  }
  for (const auto& w : f_images) {
    if (w.size() != c.generator_count())
      throw PreconditionError("f image is not a word of C");
  }
  const std::size_t nb = b.generator_count();
  const std::size_t n = nb + c.generator_count();

  std::vector<std::string> names = b.generator_names();
  for (auto name : c.generator_names()) {
    while (std::find(names.begin(), names.end(), name) != names.end()) {
      name += "'";
    }
    names.push_back(std::move(name));
  }
  std::vector<Relation> relations;
  for (const auto& [l, r] : b.relations()) {
    relations.emplace_back(l.embedded(n, 0), r.embedded(n, 0));
  }
  for (const auto& [l, r] : c.relations()) {
    relations.emplace_back(l.embedded(n, nb), r.embedded(n, nb));
  }
  for (std::size_t i = 0; i < a_generators; ++i) {
    relations.emplace_back(e_images[i].embedded(n, 0),
                           f_images[i].embedded(n, nb));
  }
  return Presentation(std::move(names), std::move(relations));
}

ExponentVector element_word(const FiniteMonoid& m,
                            FiniteMonoid::element_type x) {
  if (!m.contains(x)) throw DomainError("element out of range");
  ExponentVector w(m.size() - 1);
  if (x != 0) w[x - 1] = 1;
  return w;
}

Presentation to_presentation(const FiniteMonoid& m) {
  std::vector<std::string> names(m.labels().begin() + 1, m.labels().end());
  std::vector<Relation> relations;
  for (FiniteMonoid::element_type x = 1; x < m.size(); ++x) {
    for (FiniteMonoid::element_type y = x; y < m.size(); ++y) {
      relations.emplace_back(element_word(m, x) + element_word(m, y),
                             element_word(m, m.add(x, y)));
    }
  }
  return Presentation(std::move(names), std::move(relations));
}

ExponentVector RefinementStep::embed(const ExponentVector& m_word) const {
  if (!extension) return m_word;
  return m_word.embedded(extension->presentation().generator_count(),
                         kMatrixGenerators);
}

bool RefinementStep::all_checks_pass() const {
  return matrix_valid.is_true() && injective_on_ball.is_true() &&
         conical_on_ball.is_true() && unitary.is_true() &&
         strongly_unitary.is_true();
}

RefinementStep refinement_step(const Presentation& m, const ExponentVector& a0,
                               const ExponentVector& a1,
                               const ExponentVector& b0,
                               const ExponentVector& b1, std::size_t bound,
                               std::size_t max_iterations) {
  const PresentedMonoid mm(m, max_iterations);
  if (!mm.decidable_equality()) {
    throw UndecidableError("completion of M did not finish");
  }
  for (const auto* w : {&a0, &a1, &b0, &b1}) {
    if (!mm.contains(*w)) throw PreconditionError("not a word of M");
  }
  if (!mm.eq(mm.add(a0, a1), mm.add(b0, b1))) {
    throw PreconditionError("a0 + a1 != b0 + b1 in M");
  }

  RefinementStep out;
  out.bound = bound;
  const auto z = mm.zero();
  const auto nf = [&](const ExponentVector& w) { return mm.normal_form(w); };
  if (nf(a0).is_zero()) {
    out.degenerate = true;
    out.matrix = {z, z, nf(b0), nf(b1)};
  } else if (nf(a1).is_zero()) {
    out.degenerate = true;
    out.matrix = {nf(b0), nf(b1), z, z};
  } else if (nf(b0).is_zero()) {
    out.degenerate = true;
    out.matrix = {z, nf(a0), z, nf(a1)};
  } else if (nf(b1).is_zero()) {
    out.degenerate = true;
    out.matrix = {nf(a0), z, nf(a1), z};
  }
  if (out.degenerate) {
    out.matrix_valid = Decision::from_bool(
        is_refinement_matrix(mm, out.matrix, a0, a1, b0, b1))
        .with_witness("entries taken from M");
    return out;
  }

  const Presentation free4({"e0", "e1", "e2", "e3"}, {});
  const Presentation np =
      pushout(kMatrixGenerators, free4, m, r_plus_vectors(), {a0, a1, b0, b1});
  out.extension.emplace(np, max_iterations);
  const PresentedMonoid& n = *out.extension;
  if (!n.decidable_equality()) {
    throw UndecidableError("completion of the extension did not finish");
  }
  const std::size_t size = np.generator_count();
  out.matrix = {ExponentVector::unit(size, 0), ExponentVector::unit(size, 1),
                ExponentVector::unit(size, 2), ExponentVector::unit(size, 3)};
  out.matrix_valid = Decision::from_bool(
      is_refinement_matrix(n, out.matrix, out.embed(a0), out.embed(a1),
                           out.embed(b0), out.embed(b1)))
      .with_witness("e0 + e1 = a0, e2 + e3 = a1, e0 + e2 = b0, e1 + e3 = b1");

  // M -> N is injective on the ball
  {
    std::unordered_map<ExponentVector, ExponentVector, ExponentVectorHash>
        seen;
    Conjunction c;
    for (const auto& w : mm.enumerate(bound)) {
      auto image = n.normal_form(out.embed(w));
      auto [it, fresh] = seen.emplace(image, w);
      if (!fresh) {
        c.fail(m.format(it->second) + " and " + m.format(w) +
               " both map to " + np.format(image));
        break;
      }
    }
    out.injective_on_ball = c.result();
  }

  const auto ball = n.enumerate(bound);
  {
    Conjunction c;
    for (const auto& x : ball) {
      for (const auto& y : ball) {
        if (n.add(x, y).is_zero() && !(x.is_zero() && y.is_zero())) {
          c.fail(np.format(x) + " + " + np.format(y) + " = 0");
          break;
        }
      }
      if (c.failed()) break;
    }
    out.conical_on_ball = c.result();
  }

  // A normal form free of e-letters is visibly in the image; otherwise
  // compare against images of M-words long enough to cover the sums and
  // multiples the unitary check forms.
  std::unordered_set<ExponentVector, ExponentVectorHash> image;
  for (const auto& w : mm.enumerate(std::max(2 * bound, bound * bound))) {
    image.insert(n.normal_form(out.embed(w)));
  }
  const std::function<bool(const ExponentVector&)> in_m =
      [&](const ExponentVector& x) {
        const auto f = n.normal_form(x);
        bool letters = false;
        for (std::size_t i = 0; i < kMatrixGenerators; ++i) {
          letters = letters || f[i] != 0;
        }
        return !letters || image.count(f) > 0;
      };
  const auto verdict = is_unitary_extension(in_m, n, bound);
  out.unitary = verdict.unitary;
  out.strongly_unitary = verdict.strongly_unitary;
  return out;
}

RefinementStep refinement_step(const FiniteMonoid& m,
                               FiniteMonoid::element_type a0,
                               FiniteMonoid::element_type a1,
                               FiniteMonoid::element_type b0,
                               FiniteMonoid::element_type b1,
                               std::size_t bound,
                               std::size_t max_iterations) {
  return refinement_step(to_presentation(m), element_word(m, a0),
                         element_word(m, a1), element_word(m, b0),
                         element_word(m, b1), bound, max_iterations);
}

}  // namespace cones
