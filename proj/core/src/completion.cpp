#include "gsb/completion.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gsb {

std::vector<CompositionRecord> compositions(const Rule& f, const Rule& g,
                                            RuleRef fid, RuleRef gid) {
  std::vector<CompositionRecord> out;
  const Word& fw = f.lhs;
  const Word& gw = g.lhs;
  const Polynomial fp = f.binding();
  const Polynomial gp = g.binding();

  // intersection: a proper suffix of f̄ equals a proper prefix of ḡ
  std::size_t tmax = std::min(fw.size(), gw.size()) - 1;
  for (std::size_t t = 1; t <= tmax; ++t) {
    if (fw.suffix(t) != gw.prefix(t)) continue;
    Word a = fw.prefix(fw.size() - t);
    Word b = gw.suffix(gw.size() - t);
    CompositionRecord rec;
    rec.kind = CompositionRecord::Kind::Intersection;
    rec.ambiguity = fw * b;
    rec.left = fid;
    rec.right = gid;
    rec.raw = fp.conjugated(Word{}, b) - gp.conjugated(a, Word{});
    out.push_back(std::move(rec));
  }

  // inclusion: ḡ a proper factor of f̄
  if (gw.size() < fw.size()) {
    for (std::size_t p = 0; p + gw.size() <= fw.size(); ++p) {
      if (!fw.matches_at(gw, p)) continue;
      Word a = fw.prefix(p);
      Word b = fw.suffix(fw.size() - p - gw.size());
      CompositionRecord rec;
      rec.kind = CompositionRecord::Kind::Inclusion;
      rec.ambiguity = fw;
      rec.left = fid;
      rec.right = gid;
      rec.raw = fp - gp.conjugated(a, b);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

VerifyReport verify_gsb(const RewriteSystem& sys, unsigned schema_bound,
                        std::size_t step_budget) {
  VerifyReport report;
  report.schema_bound = schema_bound;

  std::vector<RuleRef> refs;
  for (int i = 0; i < static_cast<int>(sys.rules().size()); ++i)
    refs.push_back(RuleRef{i, -1, 0});
  for (int s = 0; s < static_cast<int>(sys.schemas().size()); ++s) {
    const RuleSchema& sch = sys.schemas()[s];
    if (schema_bound < sch.m_min)
      throw DomainError("schema_bound below a schema's minimal exponent");
    for (unsigned m = sch.m_min; m <= schema_bound; ++m)
      refs.push_back(RuleRef{-1, s, m});
  }

  for (const RuleRef& a : refs) {
    Rule fa = sys.resolve(a);
    for (const RuleRef& b : refs) {
      Rule fb = sys.resolve(b);
      for (CompositionRecord& rec : compositions(fa, fb, a, b)) {
        try {
          rec.remainder = normal_form(rec.raw, sys, step_budget);
        } catch (const StepBudgetError&) {
          rec.inconclusive = true;
        }
        std::size_t idx = report.records.size();
        if (rec.inconclusive)
          report.inconclusive.push_back(idx);
        else if (!rec.remainder->is_zero())
          report.nonzero.push_back(idx);
        report.records.push_back(std::move(rec));
      }
    }
  }
  return report;
}

namespace {

/// Places a queue of binding polynomials into a mutually reduced rule set.
/// Displaced rules go back on the queue; rules whose leading degree exceeds
/// max_deg (when set) are recorded as withheld instead of being kept.
struct Reducer {
  AlphabetPtr alpha;
  const MonomialOrder& ord;
  std::size_t step_budget;
  std::optional<std::size_t> max_deg;

  std::vector<Rule> kept;
  std::deque<std::pair<Polynomial, RuleOrigin>> todo;
  std::set<Word> withheld;

  RewriteSystem system() const {
    return RewriteSystem(alpha, ord, kept, {}, 2);
  }

  void push(Polynomial p, RuleOrigin origin) {
    todo.emplace_back(std::move(p), origin);
  }

  /// Returns rules added while draining (for reporting).
  std::vector<Rule> drain() {
    std::vector<Rule> added;
    while (!todo.empty()) {
      auto [p, origin] = std::move(todo.front());
      todo.pop_front();
      Polynomial r = normal_form(p, system(), step_budget);
      if (r.is_zero()) continue;
      auto [lead, lc] = r.leading(ord);
      if (lead.empty())
        throw InconsistentPresentationError(
            "presentation is inconsistent: 1 lies in the ideal");
      if (max_deg && lead.size() > *max_deg) {
        withheld.insert(lead);
        continue;
      }
      Rule rule = orient(r, ord, origin);
      // recycle kept rules whose lhs is now reducible
      std::vector<Rule> still;
      for (Rule& k : kept) {
        if (k.lhs.find(rule.lhs)) {
          todo.emplace_front(k.binding(), k.origin);
        } else {
          still.push_back(std::move(k));
        }
      }
      kept = std::move(still);
      kept.push_back(rule);
      added.push_back(std::move(rule));
    }
    reduce_rhs();
    return added;
  }

  void reduce_rhs() {
    for (int pass = 0; pass < 100; ++pass) {
      bool changed = false;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Rule> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
          if (j != i) others.push_back(kept[j]);
        RewriteSystem sys(alpha, ord, others, {}, 2);
        Polynomial r = normal_form(kept[i].rhs, sys, step_budget);
        if (!(r == kept[i].rhs)) {
          kept[i].rhs = std::move(r);
          changed = true;
        }
      }
      if (!changed) return;
    }
    throw ResourceError("inter-reduction did not settle");
  }
};

}  // namespace

std::vector<Rule> inter_reduce(const AlphabetPtr& alpha,
                               const MonomialOrder& ord,
                               std::vector<Rule> rules,
                               std::size_t step_budget) {
  Reducer red{alpha, ord, step_budget, std::nullopt};
  for (Rule& r : rules) red.push(r.binding(), r.origin);
  red.drain();
  return red.kept;
}

std::pair<RewriteSystem, CompletionReport> complete(
    const Presentation& pres, const CompletionCaps& caps) {
  const AlphabetPtr& alpha = pres.alphabet;
  const MonomialOrder& ord = pres.order;

  Reducer red{alpha, ord, caps.step_budget, caps.max_deg};
  for (const Polynomial& f : pres.relation_polynomials()) {
    if (f.is_zero()) throw DomainError("trivial relation (lhs equals rhs)");
    red.push(f, RuleOrigin{});
  }
  red.drain();

  CompletionReport report;
  report.max_deg = caps.max_deg;
  report.rule_count_history.push_back(red.kept.size());

  // key: ambiguity + the two lhs words, so reprocessing is skipped across
  // rounds even when rule rhs change by inter-reduction
  std::set<std::tuple<int, Word, Word, Word>> done;
  bool capped = false;

  for (std::size_t round = 0; round < caps.max_rounds; ++round) {
    std::vector<CompositionRecord> fresh;
    for (const Rule& f : red.kept) {
      for (const Rule& g : red.kept) {
        for (CompositionRecord& rec : compositions(f, g)) {
          auto key = std::make_tuple(static_cast<int>(rec.kind),
                                     rec.ambiguity, f.lhs, g.lhs);
          if (done.insert(key).second) fresh.push_back(std::move(rec));
        }
      }
    }
    if (fresh.empty()) break;
    std::stable_sort(fresh.begin(), fresh.end(),
                     [&](const CompositionRecord& a,
                         const CompositionRecord& b) {
                       return ord.less(a.ambiguity, b.ambiguity);
                     });

    std::size_t before = red.kept.size();
    std::vector<Rule> added_round;
    for (CompositionRecord& rec : fresh) {
      RuleOrigin origin;
      origin.kind = RuleOrigin::Kind::Composition;
      red.push(rec.raw, origin);
      auto added = red.drain();
      added_round.insert(added_round.end(), added.begin(), added.end());
      if (red.kept.size() > caps.max_rules) {
        capped = true;
        break;
      }
    }
    for (Rule& r : added_round) report.added.push_back(std::move(r));
    report.rule_count_history.push_back(red.kept.size());
    if (capped) break;
    if (red.kept.size() == before && added_round.empty()) {
      // nothing new this round; the next pair scan will come up empty
      continue;
    }
  }

  report.pending = red.withheld.size();
  if (capped || !red.withheld.empty())
    report.status = CompletionReport::Status::CapReached;
  else
    report.status = CompletionReport::Status::Stabilized;

  RewriteSystem sys(alpha, ord, red.kept, {}, 2);
  return {std::move(sys), std::move(report)};
}

namespace {

bool single_word_rhs(const Rule& r, Word* out) {
  if (r.rhs.is_zero()) {
    return false;
  }
  if (r.rhs.support_size() != 1) return false;
  const auto& [w, c] = *r.rhs.terms().begin();
  if (!c.is_one()) return false;
  *out = w;
  return true;
}

Word insert_at(const Word& w, std::size_t p, const Word& block) {
  return w.prefix(p) * block * w.suffix(w.size() - p);
}

/// Copies of `block` immediately before/after position p in w.
unsigned copies_around(const Word& w, std::size_t p, const Word& block,
                       std::size_t* start, std::size_t* end) {
  unsigned before = 0, after = 0;
  if (!block.empty()) {
    while (p >= (before + 1) * block.size() &&
           w.matches_at(block, p - (before + 1) * block.size()))
      ++before;
    while (w.matches_at(block, p + after * block.size())) ++after;
  }
  *start = p - before * block.size();
  *end = p + after * block.size();
  return before + after;
}

}  // namespace

std::pair<std::vector<RuleSchema>, std::vector<Rule>> infer_schemas(
    const std::vector<Rule>& rules) {
  std::vector<RuleSchema> schemas;
  std::vector<bool> used(rules.size(), false);

  std::vector<std::size_t> order_idx(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a,
                                                    std::size_t b) {
    if (rules[a].lhs.size() != rules[b].lhs.size())
      return rules[a].lhs.size() < rules[b].lhs.size();
    return rules[a].lhs < rules[b].lhs;
  });

  auto find_rule = [&](const Word& l, const Word& r) -> int {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      Word rw;
      if (!used[i] && rules[i].lhs == l && single_word_rhs(rules[i], &rw) &&
          rw == r)
        return static_cast<int>(i);
    }
    return -1;
  };

  for (std::size_t ii : order_idx) {
    if (used[ii]) continue;
    Word rhs0;
    if (!single_word_rhs(rules[ii], &rhs0)) continue;
    const Word& lhs0 = rules[ii].lhs;

    bool folded = false;
    for (std::size_t jj : order_idx) {
      if (folded) break;
      if (jj == ii || used[jj]) continue;
      Word rhs1;
      if (!single_word_rhs(rules[jj], &rhs1)) continue;
      const Word& lhs1 = rules[jj].lhs;
      if (lhs1.size() <= lhs0.size() || rhs1.size() < rhs0.size()) continue;
      std::size_t dB = lhs1.size() - lhs0.size();
      std::size_t dB2 = rhs1.size() - rhs0.size();

      for (std::size_t p = 0; p <= lhs0.size() && !folded; ++p) {
        Word block = lhs1.sub(p, dB);
        if (insert_at(lhs0, p, block) != lhs1) continue;
        for (std::size_t q = 0; q <= rhs0.size() && !folded; ++q) {
          Word block2 = rhs1.sub(q, dB2);
          if (insert_at(rhs0, q, block2) != rhs1) continue;

          // grow the family by repeated insertion
          std::vector<std::size_t> family{ii, jj};
          Word curL = lhs1, curR = rhs1;
          for (;;) {
            Word nextL = insert_at(curL, p, block);
            Word nextR = insert_at(curR, q, block2);
            int k = find_rule(nextL, nextR);
            if (k < 0) break;
            family.push_back(static_cast<std::size_t>(k));
            curL = nextL;
            curR = nextR;
          }
          if (family.size() < 3) continue;

          std::size_t ls, le, rs, re;
          unsigned m0 = copies_around(lhs0, p, block, &ls, &le);
          unsigned m0r = block2.empty()
                             ? m0
                             : copies_around(rhs0, q, block2, &rs, &re);
          if (!block2.empty() && m0r != m0) continue;
          std::size_t first = 0;
          if (m0 == 0) {
            // the family is consistent only from the second member on
            if (family.size() - 1 < 3) continue;
            first = 1;
            m0 = copies_around(rules[family[1]].lhs, p, block, &ls, &le);
            Word r1;
            single_word_rhs(rules[family[1]], &r1);
            if (block2.empty())
              m0r = m0;
            else
              m0r = copies_around(r1, q, block2, &rs, &re);
            if (m0r != m0 || m0 == 0) continue;
          }
          const Word& baseL = rules[family[first]].lhs;
          Word baseR;
          single_word_rhs(rules[family[first]], &baseR);
          if (block2.empty()) {
            rs = q;
            re = q;
          }
          RuleSchema sch;
          sch.lhs_prefix = baseL.prefix(ls);
          sch.lhs_block = block;
          sch.lhs_suffix = baseL.suffix(baseL.size() - le);
          sch.rhs_prefix = baseR.prefix(rs);
          sch.rhs_block = block2;
          sch.rhs_suffix = baseR.suffix(baseR.size() - re);
          sch.m_min = m0;
          schemas.push_back(std::move(sch));
          for (std::size_t f = first; f < family.size(); ++f)
            used[family[f]] = true;
          folded = true;
        }
      }
    }
  }

  std::vector<Rule> rest;
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (!used[i]) rest.push_back(rules[i]);
  return {std::move(schemas), std::move(rest)};
}

}  // namespace gsb
