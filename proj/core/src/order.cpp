#include "gsb/order.hpp"

#include <algorithm>
#include <numeric>
#include <span>

namespace gsb {

namespace {

using Span = std::span<const Letter>;

Ordering from_cmp(long long a, long long b) {
  if (a < b) return Ordering::Less;
  if (a > b) return Ordering::Greater;
  return Ordering::Equal;
}

struct TowerCtx {
  const std::vector<int>& rank;
  bool reversed;
};

bool span_equal(Span a, Span b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

Letter span_max(Span u, const std::vector<int>& rank) {
  Letter best = u[0];
  for (Letter x : u)
    if (rank[x] > rank[best]) best = x;
  return best;
}

/// Segments of u between occurrences of `top` (n+1 segments for n
/// occurrences), the decomposition u = u0 top u1 top ... top un.
std::vector<Span> split_segments(Span u, Letter top) {
  std::vector<Span> segs;
  std::size_t start = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == top) {
      segs.push_back(u.subspan(start, i - start));
      start = i + 1;
    }
  }
  segs.push_back(u.subspan(start));
  return segs;
}

Ordering tower_compare(Span u, Span v, const TowerCtx& ctx) {
  if (span_equal(u, v)) return Ordering::Equal;
  if (u.empty()) return Ordering::Less;
  if (v.empty()) return Ordering::Greater;
  Letter mu = span_max(u, ctx.rank);
  Letter mv = span_max(v, ctx.rank);
  if (ctx.rank[mu] != ctx.rank[mv])
    return from_cmp(ctx.rank[mu], ctx.rank[mv]);
  auto su = split_segments(u, mu);
  auto sv = split_segments(v, mu);
  if (su.size() != sv.size())
    return from_cmp(static_cast<long long>(su.size()),
                    static_cast<long long>(sv.size()));
  const std::size_t n = su.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = ctx.reversed ? n - 1 - k : k;
    if (span_equal(su[i], sv[i])) continue;
    if (su[i].empty()) return Ordering::Less;
    if (sv[i].empty()) return Ordering::Greater;
    return tower_compare(su[i], sv[i], ctx);
  }
  return Ordering::Equal;
}

}  // namespace

std::vector<int> MonomialOrder::ranks_from_ascending(
    const Alphabet& alpha, const std::vector<int>& asc) {
  if (static_cast<int>(asc.size()) != alpha.size())
    throw DomainError("letter priority sequence must cover the alphabet");
  std::vector<int> rank(alpha.size(), -1);
  for (int r = 0; r < static_cast<int>(asc.size()); ++r) {
    int l = asc[r];
    if (l < 0 || l >= alpha.size() || rank[l] != -1)
      throw DomainError("invalid letter priority sequence");
    rank[l] = r;
  }
  return rank;
}

MonomialOrder MonomialOrder::deg_lex(AlphabetPtr alpha,
                                     std::vector<int> ascending) {
  auto rank = ranks_from_ascending(*alpha, ascending);
  return MonomialOrder(OrderKind::DegLex, std::move(alpha), std::move(rank),
                       std::vector<long>(ascending.size(), 1));
}

MonomialOrder MonomialOrder::weighted_deg_lex(AlphabetPtr alpha,
                                              std::vector<long> weights,
                                              std::vector<int> ascending) {
  auto rank = ranks_from_ascending(*alpha, ascending);
  if (static_cast<int>(weights.size()) != alpha->size())
    throw DomainError("weight vector must cover the alphabet");
  for (long w : weights)
    if (w <= 0) throw DomainError("weights must be positive");
  return MonomialOrder(OrderKind::WeightedDegLex, std::move(alpha),
                       std::move(rank), std::move(weights));
}

MonomialOrder MonomialOrder::tower(AlphabetPtr alpha,
                                   std::vector<int> ascending) {
  auto rank = ranks_from_ascending(*alpha, ascending);
  return MonomialOrder(OrderKind::Tower, std::move(alpha), std::move(rank),
                       std::vector<long>(ascending.size(), 1));
}

MonomialOrder MonomialOrder::reverse_tower(AlphabetPtr alpha,
                                           std::vector<int> ascending) {
  auto rank = ranks_from_ascending(*alpha, ascending);
  return MonomialOrder(OrderKind::ReverseTower, std::move(alpha),
                       std::move(rank),
                       std::vector<long>(ascending.size(), 1));
}

std::vector<int> MonomialOrder::ascending_letters() const {
  std::vector<int> asc(rank_.size());
  for (int l = 0; l < static_cast<int>(rank_.size()); ++l) asc[rank_[l]] = l;
  return asc;
}

Ordering MonomialOrder::compare(const Word& u, const Word& v) const {
  u.check_over(*alpha_);
  v.check_over(*alpha_);
  switch (kind_) {
    case OrderKind::DegLex: {
      if (u.size() != v.size())
        return from_cmp(static_cast<long long>(u.size()),
                        static_cast<long long>(v.size()));
      for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return from_cmp(rank_[u[i]], rank_[v[i]]);
      return Ordering::Equal;
    }
    case OrderKind::WeightedDegLex: {
      long long wu = 0, wv = 0;
      for (Letter x : u.letters) wu += weights_[x];
      for (Letter x : v.letters) wv += weights_[x];
      if (wu != wv) return from_cmp(wu, wv);
      for (std::size_t i = 0; i < std::min(u.size(), v.size()); ++i)
        if (u[i] != v[i]) return from_cmp(rank_[u[i]], rank_[v[i]]);
      return from_cmp(static_cast<long long>(u.size()),
                      static_cast<long long>(v.size()));
    }
    case OrderKind::Tower:
    case OrderKind::ReverseTower: {
      TowerCtx ctx{rank_, kind_ == OrderKind::ReverseTower};
      return tower_compare(Span(u.letters), Span(v.letters), ctx);
    }
  }
  throw Error("unreachable order kind");
}

LengthBoundMeta MonomialOrder::length_bound() const {
  switch (kind_) {
    case OrderKind::DegLex:
      return {LengthBoundMeta::Linear{Rational(1)}};
    case OrderKind::WeightedDegLex: {
      long m = *std::max_element(weights_.begin(), weights_.end());
      return {LengthBoundMeta::Linear{Rational(m)}};
    }
    case OrderKind::Tower:
    case OrderKind::ReverseTower:
      return {LengthBoundMeta::None{}};
  }
  throw Error("unreachable order kind");
}

}  // namespace gsb
