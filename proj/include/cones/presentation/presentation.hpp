#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cones/decision.hpp"
#include "cones/presentation/exponent_vector.hpp"

namespace cones {

using Relation = std::pair<ExponentVector, ExponentVector>;

// <generators | relations> in the category of commutative monoids.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names,
               std::vector<Relation> relations);

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept {
    return names_;
  }
  const std::vector<Relation>& relations() const noexcept {
    return relations_;
  }
  std::optional<std::size_t> generator_index(const std::string& name) const;

  ExponentVector word() const { return ExponentVector(generator_count()); }
  ExponentVector generator(std::size_t i) const {
    return ExponentVector::unit(generator_count(), i);
  }
  std::string format(const ExponentVector& w) const {
    return format_word(w, names_);
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
};

struct Rule {
  ExponentVector lhs;
  ExponentVector rhs;  // graded_lex_less(rhs, lhs)
  friend bool operator==(const Rule&, const Rule&) = default;
};

enum class CompletionStatus { Complete, Capped };

// A commutative rewriting system: w -> w - lhs + rhs whenever w dominates
// lhs.  Complete systems are confluent and terminating, so normal forms
// are unique and decide the word problem.
class RewriteSystem {
 public:
  RewriteSystem(std::size_t generator_count, std::vector<Rule> rules,
                CompletionStatus status, std::size_t iterations);

  std::size_t generator_count() const noexcept { return generator_count_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  CompletionStatus status() const noexcept { return status_; }
  bool is_complete() const noexcept {
    return status_ == CompletionStatus::Complete;
  }
  std::size_t iterations() const noexcept { return iterations_; }

  // Rewrites until no rule applies.  Works for capped systems too, but
  // then the result is only one irreducible descendant.
  ExponentVector reduce(ExponentVector w) const;
  bool is_irreducible(const ExponentVector& w) const;

 private:
  std::size_t generator_count_;
  std::vector<Rule> rules_;
  CompletionStatus status_;
  std::size_t iterations_;
};

// Orients the relations by graded-lex order and closes them under critical
// pairs (overlaps of left-hand sides), interreducing as it goes.  Stops
// with status Capped after max_iterations processed pairs.
RewriteSystem complete(const Presentation& p, std::size_t max_iterations = 10000);

// The unique irreducible form of w.  Throws UndecidableError on a capped
// system.
ExponentVector normal_form(const RewriteSystem& r, const ExponentVector& w);

// Word equality.  Exact on complete systems; on capped ones a common
// reduct proves equality and anything else is Unknown(depth) where depth
// is the number of rules tried.
Decision words_equal(const RewriteSystem& r, const ExponentVector& u,
                     const ExponentVector& v);

// All critical pairs of a system join (rechecked from scratch).
bool critical_pairs_join(const RewriteSystem& r);

}  // namespace cones
