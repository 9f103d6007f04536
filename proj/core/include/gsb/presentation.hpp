#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsb/rewrite.hpp"

namespace gsb {

enum class PresentationKind { Semigroup, Algebra };

/// Alphabet + relations + declared order. Semigroup kind means every relation
/// is a pair of words.
struct Presentation {
  AlphabetPtr alphabet;
  std::vector<std::pair<Polynomial, Polynomial>> relations;
  MonomialOrder order;
  PresentationKind kind = PresentationKind::Algebra;
  /// Letter name -> canonical generator name (e.g. "a" -> "a12") when the
  /// alphabet uses short aliases.
  std::vector<std::pair<std::string, std::string>> aliases;

  /// lhs - rhs for each relation.
  std::vector<Polynomial> relation_polynomials() const;
  bool is_binomial() const;
};

struct ManturovSpec {
  int n = 0;
  int k = 0;
};

/// The Manturov (k,n)-group presentation: C(n,k) involutive generators
/// indexed by k-subsets, far-commutativity and tetrahedron relations,
/// deg-lex order in generator order.
Presentation manturov(const ManturovSpec& spec);

/// Relation counts of manturov(n,k) without building the word lists.
struct ManturovCounts {
  long long involutions = 0;
  long long far_commutativity = 0;
  long long tetrahedron = 0;
};
ManturovCounts manturov_counts(const ManturovSpec& spec);

/// Images sigma(y), delta(y) as polynomials in the single letter y.
struct OreSpec {
  Polynomial sigma_of_y;
  Polynomial delta_of_y;
};

/// The skew polynomial presentation over {x, y} with the single relation
/// x y = sigma(y) x + delta(y), under the weighted deg-lex order with
/// deg_w(y) = 1, deg_w(x) = max(deg delta(y), 1), y below x.
Presentation ore_extension(const OreSpec& spec);

struct WordProblemVerdict {
  bool equal = false;
  Word nf_u, nf_v;
  /// GSB verification bound under which the answer is canonical, if any.
  std::optional<unsigned> certified_bound;
};

/// Decides u = v in the presented semigroup by comparing normal forms. Sound
/// and complete when the system is a certified GSB. Throws
/// UnsupportedKindError on non-binomial systems.
WordProblemVerdict word_problem(const RewriteSystem& sys, const Word& u,
                                const Word& v,
                                std::optional<unsigned> certified_bound = {},
                                std::size_t step_budget = kDefaultStepBudget);

}  // namespace gsb
