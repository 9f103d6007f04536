#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gsb/presentation.hpp"
#include "gsb/rewrite.hpp"

namespace gsb {

/// One ambiguity between two rules: w = f̄b = aḡ (intersection, proper
/// overlap) or w = f̄ = aḡb (inclusion), with the raw composition polynomial
/// fb - ag resp. f - agb. The remainder is filled in by verification.
struct CompositionRecord {
  enum class Kind { Intersection, Inclusion };
  Kind kind = Kind::Intersection;
  Word ambiguity;
  RuleRef left, right;
  Polynomial raw;
  std::optional<Polynomial> remainder;
  bool inconclusive = false;  // remainder reduction hit the step budget
};

/// All intersection and inclusion ambiguities of the ordered pair (f, g).
/// Remainders are left unevaluated.
std::vector<CompositionRecord> compositions(const Rule& f, const Rule& g,
                                            RuleRef fid = {}, RuleRef gid = {});

struct VerifyReport {
  unsigned schema_bound = 0;
  std::vector<CompositionRecord> records;
  std::vector<std::size_t> nonzero;       // indices of nonzero remainders
  std::vector<std::size_t> inconclusive;  // indices that hit the budget

  bool certified() const { return nonzero.empty() && inconclusive.empty(); }
};

/// Enumerates all compositions among finite rules and schema instances with
/// exponent <= schema_bound and reduces every remainder. An empty nonzero
/// list certifies the system up to the bound.
VerifyReport verify_gsb(const RewriteSystem& sys, unsigned schema_bound,
                        std::size_t step_budget = kDefaultStepBudget);

struct CompletionCaps {
  std::size_t max_deg = 12;
  std::size_t max_rules = 500;
  std::size_t max_rounds = 50;
  std::size_t step_budget = kDefaultStepBudget;
};

struct CompletionReport {
  enum class Status { Stabilized, CapReached };
  Status status = Status::Stabilized;
  std::vector<Rule> added;  // rules beyond the seeded relations
  std::size_t pending = 0;  // withheld or unprocessed compositions
  std::size_t max_deg = 0;
  std::vector<std::size_t> rule_count_history;  // per round
};

/// Bounded Shirshov completion: seeds monic oriented relations, repeatedly
/// adds reduced nonzero composition remainders, inter-reducing as it goes.
/// Rules whose lhs degree exceeds max_deg are withheld and counted pending.
std::pair<RewriteSystem, CompletionReport> complete(const Presentation& pres,
                                                    const CompletionCaps& caps);

/// Removes rules whose lhs contains another rule's lhs as a factor (their
/// reduced bindings are re-oriented or dropped) and reduces every rhs to
/// normal form with respect to the others.
std::vector<Rule> inter_reduce(const AlphabetPtr& alpha,
                               const MonomialOrder& ord,
                               std::vector<Rule> rules,
                               std::size_t step_budget = kDefaultStepBudget);

/// Folds arithmetic families of >= 3 consecutive binomial rules matching
/// P B^m S -> P' B'^m S' into schemas; returns (schemas, unfolded rules).
/// Folding is a proposal; verify_gsb must re-certify the folded system.
std::pair<std::vector<RuleSchema>, std::vector<Rule>> infer_schemas(
    const std::vector<Rule>& rules);

}  // namespace gsb
