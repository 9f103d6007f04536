#include "gsb/rewrite.hpp"

#include <algorithm>
#include <set>

namespace gsb {

Polynomial Rule::binding() const {
  return Polynomial::from_word(rhs.alphabet(), lhs) - rhs;
}

Word RuleSchema::lhs_instance(unsigned m) const {
  return lhs_prefix * lhs_block.pow(m) * lhs_suffix;
}

Word RuleSchema::rhs_instance(unsigned m) const {
  return rhs_prefix * rhs_block.pow(m) * rhs_suffix;
}

Rule RuleSchema::instance(unsigned m, int schema_index) const {
  Rule r;
  r.lhs = lhs_instance(m);
  r.origin.kind = RuleOrigin::Kind::SchemaInstance;
  r.origin.schema = schema_index;
  r.origin.exponent = m;
  return r;  // rhs filled by RewriteSystem::resolve (needs the alphabet)
}

Rule orient(const Polynomial& f, const MonomialOrder& ord, RuleOrigin origin) {
  Polynomial g = f.monic(ord);
  auto [lhs, one] = g.leading(ord);
  if (lhs.empty())
    throw OrientationError("rule left-hand side must be non-empty");
  Polynomial rhs = Polynomial::from_word(g.alphabet(), lhs) - g;
  for (const auto& [w, c] : rhs.terms())
    if (!ord.less(w, lhs))
      throw OrientationError("right-hand side word is not smaller than lhs");
  return Rule{std::move(lhs), std::move(rhs), origin};
}

RewriteSystem::RewriteSystem(AlphabetPtr alpha, MonomialOrder ord,
                             std::vector<Rule> rules,
                             std::vector<RuleSchema> schemas,
                             unsigned schema_check_bound)
    : alpha_(std::move(alpha)),
      ord_(std::move(ord)),
      rules_(std::move(rules)),
      schemas_(std::move(schemas)) {
  require_same_alphabet(alpha_, ord_.alphabet());
  std::set<Word> seen;
  for (const Rule& r : rules_) {
    if (r.lhs.empty())
      throw OrientationError("rule left-hand side must be non-empty");
    r.lhs.check_over(*alpha_);
    require_same_alphabet(alpha_, r.rhs.alphabet());
    for (const auto& [w, c] : r.rhs.terms())
      if (!ord_.less(w, r.lhs))
        throw OrientationError("rule is not oriented under the system order");
    if (!seen.insert(r.lhs).second)
      throw DomainError("two rules share the same left-hand side");
  }
  for (const RuleSchema& s : schemas_) {
    if (s.lhs_block.empty())
      throw DomainError("schema pumped block must be non-empty");
    if (s.m_min < 1) throw DomainError("schema m_min must be positive");
    unsigned hi = std::max(s.m_min + 2, schema_check_bound);
    for (unsigned m = s.m_min; m <= hi; ++m) {
      Word l = s.lhs_instance(m);
      Word r = s.rhs_instance(m);
      l.check_over(*alpha_);
      r.check_over(*alpha_);
      if (!ord_.less(r, l))
        throw OrientationError("schema instance is not oriented");
      if (!seen.insert(l).second)
        throw DomainError("schema instance collides with another lhs");
    }
  }
}

Rule RewriteSystem::resolve(const RuleRef& ref) const {
  if (ref.is_schema()) {
    const RuleSchema& s = schemas_.at(ref.schema);
    Rule r = s.instance(ref.exponent, ref.schema);
    r.rhs = Polynomial::from_word(alpha_, s.rhs_instance(ref.exponent));
    return r;
  }
  return rules_.at(ref.rule);
}

bool RewriteSystem::is_binomial() const {
  for (const Rule& r : rules_) {
    if (r.rhs.support_size() > 1) return false;
    if (r.rhs.support_size() == 1 && !r.rhs.terms().begin()->second.is_one())
      return false;
  }
  return true;  // schemas are binomial by construction
}

namespace {

/// Largest m >= m_min such that the schema's lhs instance matches u at pos.
std::optional<unsigned> match_schema_at(const Word& u, std::size_t pos,
                                        const RuleSchema& s) {
  const std::size_t base = s.lhs_prefix.size() + s.lhs_suffix.size();
  if (pos + base > u.size()) return std::nullopt;
  if (!u.matches_at(s.lhs_prefix, pos)) return std::nullopt;
  std::size_t bstart = pos + s.lhs_prefix.size();
  // greedy pump, then require the suffix at each candidate exponent
  unsigned pumped = 0;
  while (u.matches_at(s.lhs_block, bstart + pumped * s.lhs_block.size()))
    ++pumped;
  for (unsigned m = pumped; m >= s.m_min; --m) {
    if (u.matches_at(s.lhs_suffix, bstart + m * s.lhs_block.size()))
      return m;
    if (m == s.m_min) break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Occurrence> find_occurrence(const Word& u,
                                          const RewriteSystem& sys) {
  const auto& rules = sys.rules();
  const auto& schemas = sys.schemas();
  for (std::size_t pos = 0; pos < u.size(); ++pos) {
    for (int i = 0; i < static_cast<int>(rules.size()); ++i)
      if (u.matches_at(rules[i].lhs, pos))
        return Occurrence{RuleRef{i, -1, 0}, pos};
    for (int s = 0; s < static_cast<int>(schemas.size()); ++s)
      if (auto m = match_schema_at(u, pos, schemas[s]))
        return Occurrence{RuleRef{-1, s, *m}, pos};
  }
  return std::nullopt;
}

bool is_irreducible(const Word& u, const RewriteSystem& sys) {
  return !find_occurrence(u, sys).has_value();
}

Polynomial normal_form(const Polynomial& p, const RewriteSystem& sys,
                       std::size_t step_budget, ReductionStats* stats) {
  require_same_alphabet(p.alphabet(), sys.alphabet());
  const MonomialOrder& ord = sys.order();
  Polynomial cur = p;
  std::size_t steps = 0;
  for (;;) {
    // ord-largest reducible term
    const Word* target = nullptr;
    Occurrence occ;
    for (const auto& [w, c] : cur.terms()) {
      if (target && !ord.less(*target, w)) continue;
      if (auto o = find_occurrence(w, sys)) {
        target = &w;
        occ = *o;
      }
    }
    if (!target) break;
    if (++steps > step_budget)
      throw StepBudgetError("reduction step budget exceeded");
    Rule rule = sys.resolve(occ.ref);
    Word a = target->prefix(occ.position);
    Word b = target->sub(occ.position + rule.lhs.size(),
                         target->size() - occ.position - rule.lhs.size());
    Coefficient c = cur.coefficient(*target);
    // replace c * a lhs b by c * a rhs b
    Polynomial step = rule.binding().conjugated(a, b).scaled(c);
    cur = cur - step;
  }
  if (stats) stats->steps = steps;
  return cur;
}

Polynomial normal_form(const Word& u, const RewriteSystem& sys,
                       std::size_t step_budget) {
  return normal_form(Polynomial::from_word(sys.alphabet(), u), sys,
                     step_budget);
}

}  // namespace gsb
