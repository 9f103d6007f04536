#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gsb/coefficient.hpp"
#include "gsb/word.hpp"

namespace gsb {

enum class Ordering { Less, Equal, Greater };

enum class OrderKind { DegLex, WeightedDegLex, Tower, ReverseTower };

/// Length-bound metadata for an order family: whether u < v constrains |u| in
/// terms of |v|. Drives the validity of GK-dimension claims.
struct LengthBoundMeta {
  struct Linear {
    Rational c;
  };
  struct PolynomialBound {
    int d;
  };
  struct None {};
  std::variant<Linear, PolynomialBound, None> bound;

  bool is_linear() const { return std::holds_alternative<Linear>(bound); }
  bool is_none() const { return std::holds_alternative<None>(bound); }
};

/// A monomial order on the free monoid over a fixed alphabet. Four families:
/// deg-lex, weighted deg-lex, tower, reverse tower. The empty word is the
/// unique minimum in every family.
class MonomialOrder {
 public:
  /// `ascending` lists letters from smallest to largest.
  static MonomialOrder deg_lex(AlphabetPtr alpha, std::vector<int> ascending);
  static MonomialOrder weighted_deg_lex(AlphabetPtr alpha,
                                        std::vector<long> weights,
                                        std::vector<int> ascending);
  static MonomialOrder tower(AlphabetPtr alpha, std::vector<int> ascending);
  static MonomialOrder reverse_tower(AlphabetPtr alpha,
                                     std::vector<int> ascending);

  OrderKind kind() const { return kind_; }
  const AlphabetPtr& alphabet() const { return alpha_; }
  /// Rank of a letter: larger rank = larger letter.
  int rank(Letter x) const { return rank_.at(x); }
  long weight(Letter x) const { return weights_.at(x); }
  /// Letters from smallest to largest, as given at construction.
  std::vector<int> ascending_letters() const;

  Ordering compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const {
    return compare(u, v) == Ordering::Less;
  }

  LengthBoundMeta length_bound() const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && rank_ == o.rank_ && weights_ == o.weights_ &&
           same_alphabet(alpha_, o.alpha_);
  }

 private:
  MonomialOrder(OrderKind kind, AlphabetPtr alpha, std::vector<int> rank,
                std::vector<long> weights)
      : kind_(kind),
        alpha_(std::move(alpha)),
        rank_(std::move(rank)),
        weights_(std::move(weights)) {}

  static std::vector<int> ranks_from_ascending(const Alphabet& alpha,
                                               const std::vector<int>& asc);

  OrderKind kind_;
  AlphabetPtr alpha_;
  std::vector<int> rank_;      // per letter, larger = bigger letter
  std::vector<long> weights_;  // per letter; all 1 except WeightedDegLex
};

}  // namespace gsb
