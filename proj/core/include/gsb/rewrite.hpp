#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "gsb/polynomial.hpp"

namespace gsb {

/// Where a rule came from.
struct RuleOrigin {
  enum class Kind { Input, Composition, SchemaInstance };
  Kind kind = Kind::Input;
  int parent_left = -1;   // Composition: parent rule ids
  int parent_right = -1;  //
  int schema = -1;        // SchemaInstance: schema index
  unsigned exponent = 0;  // SchemaInstance: m
};

/// An oriented monic rule lhs -> rhs: the binding polynomial is lhs - rhs and
/// every word in the support of rhs is ord-smaller than lhs.
struct Rule {
  Word lhs;
  Polynomial rhs;
  RuleOrigin origin;

  /// lhs - rhs, the polynomial the rule orients.
  Polynomial binding() const;
};

/// A parametric rule family P B^m S -> P' B'^m S' for m >= m_min, with one
/// pumped block per side and a single-word right-hand side.
struct RuleSchema {
  Word lhs_prefix, lhs_block, lhs_suffix;
  Word rhs_prefix, rhs_block, rhs_suffix;
  unsigned m_min = 1;

  Word lhs_instance(unsigned m) const;
  Word rhs_instance(unsigned m) const;
  Rule instance(unsigned m, int schema_index) const;
};

/// A reference to the rule matched by an occurrence: a finite rule index or a
/// schema index with its instantiated exponent.
struct RuleRef {
  int rule = -1;        // >= 0 for a finite rule
  int schema = -1;      // >= 0 for a schema instance
  unsigned exponent = 0;

  bool is_schema() const { return schema >= 0; }
};

struct Occurrence {
  RuleRef ref;
  std::size_t position = 0;
};

struct ReductionStats {
  std::size_t steps = 0;
};

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Finite oriented rules plus parametric schemas under one monomial order: a
/// candidate Groebner-Shirshov basis. Immutable once built; construction
/// validates orientation, monicity and lhs distinctness (schema instances are
/// checked up to a working exponent bound).
class RewriteSystem {
 public:
  RewriteSystem(AlphabetPtr alpha, MonomialOrder ord, std::vector<Rule> rules,
                std::vector<RuleSchema> schemas = {},
                unsigned schema_check_bound = 8);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<RuleSchema>& schemas() const { return schemas_; }

  /// Resolves a reference to a concrete rule (materializing schema instances).
  Rule resolve(const RuleRef& ref) const;

  /// True iff every relation is a binomial word pair (semigroup kind).
  bool is_binomial() const;

 private:
  AlphabetPtr alpha_;
  MonomialOrder ord_;
  std::vector<Rule> rules_;
  std::vector<RuleSchema> schemas_;
};

/// Builds a validated rule from a polynomial: monicizes and orients by the
/// leading monomial. Throws OrientationError if some rhs word is not smaller.
Rule orient(const Polynomial& f, const MonomialOrder& ord,
            RuleOrigin origin = {});

/// Leftmost occurrence of any rule lhs (or schema instance lhs) in u; at equal
/// positions finite rules by index first, then schemas with the largest
/// matching exponent. Empty iff u is irreducible.
std::optional<Occurrence> find_occurrence(const Word& u,
                                          const RewriteSystem& sys);

bool is_irreducible(const Word& u, const RewriteSystem& sys);

/// Reduces p to normal form: repeatedly replaces the canonical occurrence in
/// the ord-largest reducible term. Terminates for monomial orders; guarded by
/// a step budget against misconfiguration.
Polynomial normal_form(const Polynomial& p, const RewriteSystem& sys,
                       std::size_t step_budget = kDefaultStepBudget,
                       ReductionStats* stats = nullptr);

Polynomial normal_form(const Word& u, const RewriteSystem& sys,
                       std::size_t step_budget = kDefaultStepBudget);

}  // namespace gsb
