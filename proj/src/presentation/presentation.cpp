#include "cones/presentation/presentation.hpp"

#include <algorithm>
#include <deque>

#include "cones/errors.hpp"

namespace cones {

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Relation> relations)
    : names_(std::move(generator_names)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw PreconditionError("duplicate generator name '" + names_[i] +
                                "'");
      }
    }
  }
  for (const auto& [u, v] : relations_) {
    if (u.size() != names_.size() || v.size() != names_.size()) {
      throw PreconditionError("relation word has the wrong length");
    }
  }
}

std::optional<std::size_t> Presentation::generator_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RewriteSystem::RewriteSystem(std::size_t generator_count,
                             std::vector<Rule> rules, CompletionStatus status,
                             std::size_t iterations)
    : generator_count_(generator_count),
      rules_(std::move(rules)),
      status_(status),
      iterations_(iterations) {
  for (const auto& rule : rules_) {
    if (rule.lhs.size() != generator_count_ ||
        rule.rhs.size() != generator_count_) {
      throw PreconditionError("rule word has the wrong length");
    }
    if (!graded_lex_less(rule.rhs, rule.lhs)) {
      throw PreconditionError("rule does not decrease in graded-lex order");
    }
  }
}

namespace {

// Applies `rule` as many times as it fits in one go.
bool apply_all(const Rule& rule, ExponentVector& w) {
  if (!w.dominates(rule.lhs)) return false;
  ExponentVector::value_type times = ~ExponentVector::value_type{0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (rule.lhs[i] != 0) times = std::min(times, w[i] / rule.lhs[i]);
  }
  w -= times * rule.lhs;
  w += times * rule.rhs;
  return true;
}

ExponentVector reduce_with(const std::vector<Rule>& rules, ExponentVector w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules) {
      if (apply_all(rule, w)) changed = true;
    }
  }
  return w;
}

bool reducible_by(const std::vector<Rule>& rules, const ExponentVector& w) {
  return std::any_of(rules.begin(), rules.end(),
                     [&](const Rule& r) { return w.dominates(r.lhs); });
}

}  // namespace

ExponentVector RewriteSystem::reduce(ExponentVector w) const {
  if (w.size() != generator_count_) throw DomainError("word length mismatch");
  return reduce_with(rules_, std::move(w));
}

bool RewriteSystem::is_irreducible(const ExponentVector& w) const {
  return !reducible_by(rules_, w);
}

RewriteSystem complete(const Presentation& p, std::size_t max_iterations) {
  if (max_iterations < 1) {
    throw PreconditionError("completion needs at least one iteration");
  }
  std::vector<Rule> rules;
  std::deque<Relation> pending(p.relations().begin(), p.relations().end());
  std::size_t iterations = 0;
  CompletionStatus status = CompletionStatus::Complete;

  while (!pending.empty()) {
    if (iterations >= max_iterations) {
      status = CompletionStatus::Capped;
      break;
    }
    ++iterations;
    auto [u, v] = std::move(pending.front());
    pending.pop_front();
    u = reduce_with(rules, std::move(u));
    v = reduce_with(rules, std::move(v));
    if (u == v) continue;
    Rule fresh = graded_lex_less(v, u) ? Rule{u, v} : Rule{v, u};

    // Interreduce: older rules whose left side the new rule rewrites go
    // back on the queue; right sides are renormalised below.
    std::vector<Rule> kept;
    for (auto& old : rules) {
      if (old.lhs.dominates(fresh.lhs)) {
        pending.emplace_back(std::move(old.lhs), std::move(old.rhs));
      } else {
        kept.push_back(std::move(old));
      }
    }
    rules = std::move(kept);

    for (const auto& old : rules) {
      if (!old.lhs.overlaps(fresh.lhs)) continue;
      const ExponentVector top = old.lhs.join(fresh.lhs);
      pending.emplace_back(top - old.lhs + old.rhs,
                           top - fresh.lhs + fresh.rhs);
    }
    rules.push_back(std::move(fresh));
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<Rule> others;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (j != i) others.push_back(rules[j]);
      }
      rules[i].rhs = reduce_with(others, rules[i].rhs);
    }
  }
  std::sort(rules.begin(), rules.end(), [](const Rule& a, const Rule& b) {
    return graded_lex_less(a.lhs, b.lhs);
  });
  return RewriteSystem(p.generator_count(), std::move(rules), status,
                       iterations);
}

ExponentVector normal_form(const RewriteSystem& r, const ExponentVector& w) {
  if (!r.is_complete()) {
    throw UndecidableError("normal forms need a complete rewriting system");
  }
  return r.reduce(w);
}

Decision words_equal(const RewriteSystem& r, const ExponentVector& u,
                     const ExponentVector& v) {
  const auto ru = r.reduce(u);
  const auto rv = r.reduce(v);
  if (ru == rv) return Decision::yes();
  if (r.is_complete()) return Decision::no();
  return Decision::unknown(r.rules().size());
}

bool critical_pairs_join(const RewriteSystem& r) {
  const auto& rules = r.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i; j < rules.size(); ++j) {
      if (!rules[i].lhs.overlaps(rules[j].lhs)) continue;
      const ExponentVector top = rules[i].lhs.join(rules[j].lhs);
      if (r.reduce(top - rules[i].lhs + rules[i].rhs) !=
          r.reduce(top - rules[j].lhs + rules[j].rhs)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace cones
