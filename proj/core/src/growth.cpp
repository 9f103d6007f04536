#include "gsb/growth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gsb {

ForbiddenSet ForbiddenSet::of(const RewriteSystem& sys) {
  ForbiddenSet fs;
  for (const Rule& r : sys.rules()) fs.finite_words.push_back(r.lhs);
  for (const RuleSchema& s : sys.schemas())
    fs.pumped_patterns.push_back(
        PumpedPattern{s.lhs_prefix, s.lhs_block, s.lhs_suffix, s.m_min});
  return fs;
}

bool IrrAutomaton::accepts(const Word& w) const {
  int q = start();
  for (Letter x : w.letters) {
    q = next(q, x);
    if (q < 0) return false;
  }
  return true;
}

namespace {

/// Nondeterministic matcher for Sigma* F Sigma* over the forbidden set; state
/// 0 is the hub with a self-loop on every letter.
struct FactorNfa {
  int nletters;
  std::vector<std::map<Letter, std::vector<int>>> trans;
  std::vector<bool> match;

  explicit FactorNfa(int nl) : nletters(nl) {
    add_state();  // hub
  }

  int add_state() {
    trans.emplace_back();
    match.push_back(false);
    return static_cast<int>(trans.size()) - 1;
  }

  void edge(int from, Letter x, int to) { trans[from][x].push_back(to); }

  /// Chain consuming `w` from `from`; returns the final state.
  int chain(int from, const Word& w) {
    int cur = from;
    for (Letter x : w.letters) {
      int nxt = add_state();
      edge(cur, x, nxt);
      cur = nxt;
    }
    return cur;
  }

  void add_finite(const Word& w) {
    int end = chain(0, w);
    match[end] = true;
  }

  void add_pumped(const PumpedPattern& p) {
    int cur = chain(0, p.prefix);
    for (unsigned i = 0; i < p.m_min; ++i) cur = chain(cur, p.block);
    // extra block copies loop back to `cur`
    int loop = cur;
    for (std::size_t i = 0; i + 1 < p.block.size(); ++i) {
      int nxt = add_state();
      edge(loop, p.block[i], nxt);
      loop = nxt;
    }
    edge(loop, p.block[p.block.size() - 1], cur);
    int end = chain(cur, p.suffix);
    match[end] = true;
  }
};

}  // namespace

IrrAutomaton build_irr_automaton(const ForbiddenSet& fs,
                                 const AlphabetPtr& alpha,
                                 std::size_t state_cap) {
  FactorNfa nfa(alpha->size());
  for (const Word& w : fs.finite_words) {
    if (w.empty()) throw DomainError("forbidden factor must be non-empty");
    w.check_over(*alpha);
    nfa.add_finite(w);
  }
  for (const PumpedPattern& p : fs.pumped_patterns) {
    if (p.block.empty()) throw DomainError("pumped block must be non-empty");
    if (p.m_min < 1) throw DomainError("pumped m_min must be positive");
    nfa.add_pumped(p);
  }

  // subset construction over live (match-free) subsets; any subset containing
  // a match state is the rejecting sink and is dropped, which also trims
  using Subset = std::vector<int>;
  std::map<Subset, int> ids;
  std::vector<Subset> subsets;
  IrrAutomaton dfa;
  dfa.nletters_ = alpha->size();

  Subset start{0};
  ids[start] = 0;
  subsets.push_back(start);
  dfa.delta_.emplace_back(alpha->size(), -1);

  std::deque<int> work{0};
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    Subset cur = subsets[q];
    for (Letter x = 0; x < alpha->size(); ++x) {
      std::set<int> nxt;
      bool matched = false;
      for (int s : cur) {
        if (s == 0) nxt.insert(0);  // hub self-loop
        auto it = nfa.trans[s].find(x);
        if (it == nfa.trans[s].end()) continue;
        for (int t : it->second) {
          if (nfa.match[t]) matched = true;
          nxt.insert(t);
        }
      }
      if (matched) continue;  // dead
      Subset key(nxt.begin(), nxt.end());
      auto [it, inserted] = ids.emplace(key, static_cast<int>(subsets.size()));
      if (inserted) {
        if (subsets.size() >= state_cap)
          throw ResourceError("automaton state cap exceeded");
        subsets.push_back(key);
        dfa.delta_.emplace_back(alpha->size(), -1);
        work.push_back(it->second);
      }
      dfa.delta_[q][x] = it->second;
    }
  }
  return dfa;
}

std::vector<Integer> count_normal_words(const IrrAutomaton& aut,
                                        std::size_t n) {
  std::vector<Integer> per_length;
  std::vector<Integer> cur(aut.state_count(), 0);
  cur[aut.start()] = 1;
  for (std::size_t len = 0; len <= n; ++len) {
    Integer total = 0;
    for (const Integer& c : cur) total += c;
    per_length.push_back(total);
    if (len == n) break;
    std::vector<Integer> nxt(aut.state_count(), 0);
    for (int q = 0; q < aut.state_count(); ++q) {
      if (cur[q] == 0) continue;
      for (Letter x = 0; x < aut.alphabet_size(); ++x) {
        int t = aut.next(q, x);
        if (t >= 0) nxt[t] += cur[q];
      }
    }
    cur = std::move(nxt);
  }
  return per_length;
}

std::vector<Integer> cumulative(const std::vector<Integer>& per_length) {
  std::vector<Integer> out;
  Integer acc = 0;
  for (const Integer& c : per_length) {
    acc += c;
    out.push_back(acc);
  }
  return out;
}

namespace {

struct SccResult {
  std::vector<int> comp;  // state -> component id
  int count = 0;          // ids are in reverse topological order
};

/// Iterative Tarjan on the transition digraph.
SccResult strongly_connected_components(const IrrAutomaton& aut) {
  const int n = aut.state_count();
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;

  struct Frame {
    int v;
    Letter x;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.x < aut.alphabet_size()) {
        int w = aut.next(f.v, f.x++);
        if (w < 0) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          int c = res.count++;
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.comp[w] = c;
            if (w == f.v) break;
          }
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return res;
}

}  // namespace

Classification classify_growth(const IrrAutomaton& aut) {
  const int n = aut.state_count();
  SccResult scc = strongly_connected_components(aut);

  // per component: size, internal edge count, internal out-degree per vertex
  std::vector<int> size(scc.count, 0), internal_edges(scc.count, 0);
  std::vector<int> internal_out(n, 0);
  for (int v = 0; v < n; ++v) ++size[scc.comp[v]];
  for (int v = 0; v < n; ++v)
    for (Letter x = 0; x < aut.alphabet_size(); ++x) {
      int w = aut.next(v, x);
      if (w >= 0 && scc.comp[w] == scc.comp[v]) {
        ++internal_edges[scc.comp[v]];
        ++internal_out[v];
      }
    }

  std::vector<bool> is_cycle(scc.count, false);
  for (int c = 0; c < scc.count; ++c) {
    if (internal_edges[c] == 0) continue;  // acyclic singleton
    bool simple = internal_edges[c] == size[c];
    if (simple)
      for (int v = 0; v < n && simple; ++v)
        if (scc.comp[v] == c && internal_out[v] != 1) simple = false;
    if (!simple) return Classification{Classification::Exponential{}};
    is_cycle[c] = true;
  }

  // longest cycle-count along a condensation path; Tarjan ids are reverse
  // topological, so successors have smaller ids and are finished first
  std::vector<int> best(scc.count, 0);
  for (int c = 0; c < scc.count; ++c) best[c] = is_cycle[c] ? 1 : 0;
  for (int c = 0; c < scc.count; ++c) {
    // relax over edges leaving component c
    for (int v = 0; v < n; ++v) {
      if (scc.comp[v] != c) continue;
      for (Letter x = 0; x < aut.alphabet_size(); ++x) {
        int w = aut.next(v, x);
        if (w >= 0 && scc.comp[w] != c)
          best[c] = std::max(best[c],
                             (is_cycle[c] ? 1 : 0) + best[scc.comp[w]]);
      }
    }
  }
  int gk = best[scc.comp[aut.start()]];
  if (gk == 0) {
    Integer dim = 0;
    auto counts = count_normal_words(aut, static_cast<std::size_t>(n));
    for (const Integer& c : counts) dim += c;
    return Classification{Classification::FiniteDimensional{dim}};
  }
  return Classification{Classification::Polynomial{gk}};
}

GrowthReport gkdim_report(const Presentation& pres, const RewriteSystem& sys,
                          std::optional<unsigned> certified_bound,
                          std::size_t count_to, std::size_t state_cap) {
  GrowthReport report;
  ForbiddenSet fs = ForbiddenSet::of(sys);
  IrrAutomaton aut = build_irr_automaton(fs, sys.alphabet(), state_cap);
  report.per_length = count_normal_words(aut, count_to);
  report.counts = cumulative(report.per_length);
  report.classification = classify_growth(aut);
  report.certified_bound = certified_bound;
  report.certified = certified_bound.has_value();

  LengthBoundMeta meta = pres.order.length_bound();
  if (meta.is_linear()) {
    report.validity = GrowthValidity::ExactForA;
  } else if (meta.is_none()) {
    report.validity = GrowthValidity::LowerBoundForA;
  } else {
    report.validity = GrowthValidity::SandwichForA;
    report.sandwich_factor =
        std::get<LengthBoundMeta::PolynomialBound>(meta.bound).d;
  }
  return report;
}

namespace {

/// Rank accumulator over the word basis with exact elimination.
class RankTracker {
 public:
  /// Returns true when the polynomial enlarges the span.
  bool insert(Polynomial p) {
    for (;;) {
      if (p.is_zero()) return false;
      // pivot on the storage-maximal word
      Word pivot = p.terms().rbegin()->first;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        Coefficient lc = p.terms().rbegin()->second;
        rows_.emplace(pivot, p.scaled(lc.inverse()));
        return true;
      }
      Coefficient c = p.terms().rbegin()->second;
      p = p - it->second.scaled(c);
    }
  }

 private:
  std::map<Word, Polynomial> rows_;
};

}  // namespace

FiltrationTable dim_filtration(const Presentation& pres,
                               const RewriteSystem& sys, std::size_t n_max,
                               std::size_t step_budget) {
  if (n_max > 10)
    throw ResourceError("dim_filtration n_max is capped at 10");
  const AlphabetPtr& alpha = pres.alphabet;
  FiltrationTable table;

  const bool binomial = sys.is_binomial();
  std::set<Word> distinct_nf;
  RankTracker rank;
  Integer rank_count = 0;
  Integer irr_count = 0;

  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= n_max; ++len) {
    if (len > 0) {
      std::vector<Word> nxt;
      for (const Word& w : layer)
        for (Letter x = 0; x < alpha->size(); ++x)
          nxt.push_back(w * Word({x}));
      layer = std::move(nxt);
    }
    for (const Word& w : layer) {
      if (is_irreducible(w, sys)) irr_count += 1;
      Polynomial nf = normal_form(w, sys, step_budget);
      if (binomial) {
        if (nf.support_size() == 1) distinct_nf.insert(nf.terms().begin()->first);
        else if (rank.insert(nf)) rank_count += 1;
      } else {
        if (rank.insert(nf)) rank_count += 1;
      }
    }
    table.d_A.push_back(binomial ? Integer(distinct_nf.size()) + rank_count
                                 : rank_count);
    table.d_tilde.push_back(irr_count);
  }
  return table;
}

std::optional<Word> sardinas_patterson_witness(const std::vector<Word>& gens) {
  struct Node {
    Word residual;
    std::vector<int> a, b;  // cat(a) = cat(b) * residual
  };
  auto cat = [&](const std::vector<int>& seq) {
    Word w;
    for (int i : seq) w = w * gens[i];
    return w;
  };

  std::deque<Node> queue;
  std::set<Word> visited;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      if (gens[i].size() <= gens[j].size()) continue;
      if (!gens[i].matches_at(gens[j], 0)) continue;
      Word s = gens[i].suffix(gens[i].size() - gens[j].size());
      if (visited.insert(s).second)
        queue.push_back(Node{s,
                             {static_cast<int>(i)},
                             {static_cast<int>(j)}});
    }

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Word& c = gens[g];
      // residual = c * s'  (consume c from the dangling side)
      if (node.residual.size() >= c.size() &&
          node.residual.matches_at(c, 0)) {
        Word s = node.residual.suffix(node.residual.size() - c.size());
        std::vector<int> b = node.b;
        b.push_back(static_cast<int>(g));
        if (s.empty()) return cat(node.a);  // two factorizations meet
        if (visited.insert(s).second)
          queue.push_back(Node{std::move(s), node.a, std::move(b)});
      }
      // c = residual * s'' with s'' non-empty: roles swap
      if (c.size() > node.residual.size() &&
          c.matches_at(node.residual, 0)) {
        Word s = c.suffix(c.size() - node.residual.size());
        std::vector<int> b = node.b;
        b.push_back(static_cast<int>(g));
        if (visited.insert(s).second)
          queue.push_back(Node{std::move(s), std::move(b), node.a});
      }
    }
  }
  return std::nullopt;
}

FreeCheckResult free_submonoid_check(const IrrAutomaton& aut,
                                     const std::vector<Word>& gens) {
  if (gens.empty()) throw DomainError("free check needs at least one word");
  std::set<Word> uniq;
  for (const Word& g : gens) {
    if (g.empty()) throw DomainError("generators must be non-empty words");
    if (!uniq.insert(g).second)
      throw DomainError("generators must be pairwise distinct");
  }

  // containment: closure of gens inside the automaton's language. Decoder
  // states: 0 = hub, otherwise (gen, position) pairs; track the automaton
  // state alongside (-1 = dead, absorbing).
  struct DecPos {
    int gen, pos;
    auto operator<=>(const DecPos&) const = default;
  };
  using Config = std::pair<std::vector<DecPos>, int>;
  const DecPos hub{-1, 0};

  std::map<Config, std::pair<Config, Letter>> parent;
  std::deque<Config> queue;
  Config start{{hub}, aut.start()};
  parent.emplace(start, std::make_pair(start, Letter(-1)));
  queue.push_back(start);

  while (!queue.empty()) {
    Config cur = std::move(queue.front());
    queue.pop_front();
    for (Letter x = 0; x < aut.alphabet_size(); ++x) {
      std::set<DecPos> nxt;
      for (const DecPos& d : cur.first) {
        if (d == hub) {
          for (int g = 0; g < static_cast<int>(gens.size()); ++g)
            if (gens[g][0] == x)
              nxt.insert(gens[g].size() == 1 ? hub : DecPos{g, 1});
        } else if (gens[d.gen][d.pos] == x) {
          nxt.insert(d.pos + 1 == static_cast<int>(gens[d.gen].size())
                         ? hub
                         : DecPos{d.gen, d.pos + 1});
        }
      }
      if (nxt.empty()) continue;  // not a prefix of the closure
      int q = cur.second < 0 ? -1 : aut.next(cur.second, x);
      Config conf{{nxt.begin(), nxt.end()}, q};
      bool complete = nxt.count(hub) > 0;
      if (complete && q < 0) {
        // rebuild the witness word
        std::vector<Letter> letters{x};
        Config at = cur;
        while (!(at == start)) {
          auto& [prev, lx] = parent.at(at);
          letters.push_back(lx);
          at = prev;
        }
        std::reverse(letters.begin(), letters.end());
        return FreeCheckResult{FreeCheckResult::Verdict::LeavesIrr,
                               Word(std::move(letters))};
      }
      if (parent.emplace(conf, std::make_pair(cur, x)).second)
        queue.push_back(std::move(conf));
    }
  }

  if (auto w = sardinas_patterson_witness(gens))
    return FreeCheckResult{FreeCheckResult::Verdict::NotCode, std::move(w)};
  return FreeCheckResult{FreeCheckResult::Verdict::Free, std::nullopt};
}

}  // namespace gsb
