#include "gsb/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gsb {

std::vector<Polynomial> Presentation::relation_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(relations.size());
  for (const auto& [l, r] : relations) out.push_back(l - r);
  return out;
}

bool Presentation::is_binomial() const {
  for (const auto& [l, r] : relations) {
    auto word_like = [](const Polynomial& p) {
      return p.support_size() == 1 && p.terms().begin()->second.is_one();
    };
    if (!word_like(l) || !word_like(r)) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // indices are 1-based, lexicographic
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::string subset_name(const std::vector<int>& m, int n) {
  std::ostringstream os;
  os << 'a';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (n > 9 && i) os << '_';
    os << m[i];
  }
  return os.str();
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

ManturovCounts manturov_counts(const ManturovSpec& spec) {
  const int n = spec.n, k = spec.k;
  if (n <= k || k < 1) throw DomainError("manturov requires n > k >= 1");
  ManturovCounts c;
  c.involutions = binom(n, k);
  auto subsets = subsets_of_size(n, k);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(subsets[i].begin(), subsets[i].end(),
                            subsets[j].begin(), subsets[j].end(),
                            std::back_inserter(inter));
      if (static_cast<int>(inter.size()) < k - 1) ++c.far_commutativity;
    }
  c.tetrahedron = binom(n, k + 1) * factorial(k + 1) / 2;
  return c;
}

Presentation manturov(const ManturovSpec& spec) {
  const int n = spec.n, k = spec.k;
  if (n <= k || k < 1) throw DomainError("manturov requires n > k >= 1");

  auto subsets = subsets_of_size(n, k);
  const int g = static_cast<int>(subsets.size());

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> aliases;
  if (g <= 26) {
    for (int i = 0; i < g; ++i) {
      std::string alias(1, static_cast<char>('a' + i));
      names.push_back(alias);
      aliases.emplace_back(alias, subset_name(subsets[i], n));
    }
  } else {
    for (int i = 0; i < g; ++i) names.push_back(subset_name(subsets[i], n));
  }
  AlphabetPtr alpha = Alphabet::make(names);

  auto gen_index = [&](const std::vector<int>& m) -> Letter {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), m);
    return static_cast<Letter>(it - subsets.begin());
  };
  auto word_of = [&](const std::vector<Letter>& ls) { return Word(ls); };
  auto poly_of = [&](const Word& w) {
    return Polynomial::from_word(alpha, w);
  };

  std::vector<std::pair<Polynomial, Polynomial>> relations;
  std::set<std::pair<Word, Word>> seen;
  auto add_relation = [&](const Word& l, const Word& r) {
    if (l == r) return;
    if (!seen.emplace(l, r).second) return;
    relations.emplace_back(poly_of(l), poly_of(r));
  };

  // involutions
  for (Letter i = 0; i < g; ++i)
    add_relation(word_of({i, i}), Word{});

  // far commutativity
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      std::vector<int> inter;
      std::set_intersection(subsets[i].begin(), subsets[i].end(),
                            subsets[j].begin(), subsets[j].end(),
                            std::back_inserter(inter));
      if (static_cast<int>(inter.size()) < k - 1)
        add_relation(word_of({static_cast<Letter>(j), static_cast<Letter>(i)}),
                     word_of({static_cast<Letter>(i), static_cast<Letter>(j)}));
    }

  // tetrahedron relations, one per ordering of each (k+1)-subset up to
  // reversal (keep the lexicographically smaller of perm and its reverse)
  for (const auto& u : subsets_of_size(n, k + 1)) {
    std::vector<int> perm = u;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> rev(perm.rbegin(), perm.rend());
      if (rev < perm) continue;
      std::vector<Letter> lhs, rhs;
      for (int uj : perm) {
        std::vector<int> m;
        for (int x : u)
          if (x != uj) m.push_back(x);
        lhs.push_back(gen_index(m));
      }
      rhs.assign(lhs.rbegin(), lhs.rend());
      add_relation(word_of(lhs), word_of(rhs));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<int> ascending(g);
  for (int i = 0; i < g; ++i) ascending[i] = i;
  Presentation pres{alpha, std::move(relations),
                    MonomialOrder::deg_lex(alpha, std::move(ascending)),
                    PresentationKind::Semigroup, std::move(aliases)};
  return pres;
}

namespace {

/// Degree of a polynomial in the single letter y (index yi); checks that no
/// other letter appears.
long poly_degree_in(const Polynomial& p, Letter yi) {
  long deg = 0;
  for (const auto& [w, c] : p.terms()) {
    for (Letter x : w.letters)
      if (x != yi)
        throw DomainError("ore spec polynomial mentions a letter other than y");
    deg = std::max<long>(deg, static_cast<long>(w.size()));
  }
  return deg;
}

/// Re-expresses a polynomial in y over a new alphabet.
Polynomial remap_univariate(const Polynomial& p, const AlphabetPtr& target,
                            Letter target_y) {
  Polynomial out(target);
  for (const auto& [w, c] : p.terms()) {
    Word nw(std::vector<Letter>(w.size(), target_y));
    out.add_term(nw, c);
  }
  return out;
}

}  // namespace

Presentation ore_extension(const OreSpec& spec) {
  if (spec.sigma_of_y.is_zero() && spec.delta_of_y.is_zero())
    throw DomainError("ore spec needs sigma(y) != 0 or delta(y) != 0");

  AlphabetPtr alpha = Alphabet::make({"x", "y"});
  const Letter xi = 0, yi = 1;

  auto check = [&](const Polynomial& p) -> long {
    if (p.is_zero()) return 0;
    int src_y = p.alphabet()->index("y");
    if (src_y < 0)
      throw DomainError("ore spec polynomial must be over a 'y' alphabet");
    return poly_degree_in(p, static_cast<Letter>(src_y));
  };
  long delta_deg = check(spec.delta_of_y);
  check(spec.sigma_of_y);

  Polynomial sigma = remap_univariate(spec.sigma_of_y, alpha, yi);
  Polynomial delta = remap_univariate(spec.delta_of_y, alpha, yi);

  Polynomial xy = Polynomial::from_word(alpha, Word({xi, yi}));
  Polynomial rhs =
      sigma * Polynomial::from_word(alpha, Word({xi})) + delta;

  // weighted deg-lex: deg_w(y) = 1, deg_w(x) = max(deg delta, 1), y below x
  std::vector<long> weights(2, 1);
  weights[xi] = std::max<long>(delta_deg, 1);
  MonomialOrder ord =
      MonomialOrder::weighted_deg_lex(alpha, std::move(weights), {yi, xi});

  Presentation pres{alpha,
                    {{std::move(xy), std::move(rhs)}},
                    std::move(ord),
                    PresentationKind::Algebra,
                    {}};
  return pres;
}

WordProblemVerdict word_problem(const RewriteSystem& sys, const Word& u,
                                const Word& v,
                                std::optional<unsigned> certified_bound,
                                std::size_t step_budget) {
  if (!sys.is_binomial())
    throw UnsupportedKindError(
        "word_problem requires a binomial (semigroup) system");
  auto nf_word = [&](const Word& w) -> Word {
    Polynomial p = normal_form(w, sys, step_budget);
    if (p.support_size() != 1 || !p.terms().begin()->second.is_one())
      throw UnsupportedKindError("reduction left a non-word polynomial");
    return p.terms().begin()->first;
  };
  WordProblemVerdict verdict;
  verdict.nf_u = nf_word(u);
  verdict.nf_v = nf_word(v);
  verdict.equal = verdict.nf_u == verdict.nf_v;
  verdict.certified_bound = certified_bound;
  return verdict;
}

}  // namespace gsb
