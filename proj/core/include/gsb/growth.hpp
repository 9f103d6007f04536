#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "gsb/presentation.hpp"
#include "gsb/rewrite.hpp"

namespace gsb {

/// A pumped factor family {P B^m S : m >= m_min}.
struct PumpedPattern {
  Word prefix;
  Word block;  // non-empty
  Word suffix;
  unsigned m_min = 1;
};

/// The forbidden-factor set of a rewrite system: every finite rule lhs plus
/// every schema lhs family.
struct ForbiddenSet {
  std::vector<Word> finite_words;
  std::vector<PumpedPattern> pumped_patterns;

  static ForbiddenSet of(const RewriteSystem& sys);
};

inline constexpr std::size_t kDefaultStateCap = 100'000;

/// Deterministic, trimmed automaton accepting exactly the words avoiding
/// every forbidden factor (the normal words Irr of the system). Every
/// retained state is accepting; missing transitions are rejecting.
class IrrAutomaton {
 public:
  int state_count() const { return static_cast<int>(delta_.size()); }
  int start() const { return 0; }
  int alphabet_size() const { return nletters_; }
  /// Target state or -1 (dead).
  int next(int state, Letter x) const { return delta_[state][x]; }

  bool accepts(const Word& w) const;

  friend IrrAutomaton build_irr_automaton(const ForbiddenSet& fs,
                                          const AlphabetPtr& alpha,
                                          std::size_t state_cap);

 private:
  int nletters_ = 0;
  std::vector<std::vector<int>> delta_;
};

IrrAutomaton build_irr_automaton(const ForbiddenSet& fs,
                                 const AlphabetPtr& alpha,
                                 std::size_t state_cap = kDefaultStateCap);

/// Exact per-length counts f(0..n) of accepted words.
std::vector<Integer> count_normal_words(const IrrAutomaton& aut, std::size_t n);
std::vector<Integer> cumulative(const std::vector<Integer>& per_length);

/// Growth class of the accepted language.
struct Classification {
  struct FiniteDimensional {
    Integer dim;
  };
  struct Polynomial {
    int gk;  // GK-dimension of the cumulative census
  };
  struct Exponential {};
  std::variant<FiniteDimensional, Polynomial, Exponential> value;

  bool is_finite() const {
    return std::holds_alternative<FiniteDimensional>(value);
  }
  bool is_polynomial() const {
    return std::holds_alternative<Polynomial>(value);
  }
  bool is_exponential() const {
    return std::holds_alternative<Exponential>(value);
  }
  std::optional<int> gk() const {
    if (auto* p = std::get_if<Polynomial>(&value)) return p->gk;
    if (is_finite()) return 0;
    return std::nullopt;
  }
};

Classification classify_growth(const IrrAutomaton& aut);

enum class GrowthValidity { ExactForA, LowerBoundForA, SandwichForA };

struct GrowthReport {
  std::vector<Integer> per_length;  // f(0..n)
  std::vector<Integer> counts;      // cumulative sums
  Classification classification;
  GrowthValidity validity = GrowthValidity::LowerBoundForA;
  /// Upper factor d when validity is SandwichForA: GKdim(A) in [gk, d*gk].
  std::optional<int> sandwich_factor;
  bool certified = false;
  std::optional<unsigned> certified_bound;
};

/// Builds the forbidden set of sys, classifies growth and derives how the
/// monomial-algebra answer relates to the presented algebra from the order's
/// length-bound metadata.
GrowthReport gkdim_report(const Presentation& pres, const RewriteSystem& sys,
                          std::optional<unsigned> certified_bound = {},
                          std::size_t count_to = 200,
                          std::size_t state_cap = kDefaultStateCap);

struct FiltrationTable {
  std::vector<Integer> d_A;      // dim (F + FX)^n for n = 0..n_max
  std::vector<Integer> d_tilde;  // same for the associated monomial algebra
};

/// Exact filtration dimensions by exhaustive reduction of all words of
/// length <= n_max. n_max is capped at 10.
FiltrationTable dim_filtration(const Presentation& pres,
                               const RewriteSystem& sys, std::size_t n_max,
                               std::size_t step_budget = kDefaultStepBudget);

struct FreeCheckResult {
  enum class Verdict { Free, NotCode, LeavesIrr };
  Verdict verdict = Verdict::Free;
  /// NotCode: a word with two factorizations. LeavesIrr: a product of
  /// generators containing a forbidden factor.
  std::optional<Word> witness;

  bool is_free() const { return verdict == Verdict::Free; }
};

/// Certifies that `gens` generate a free subalgebra of the monomial algebra:
/// their concatenation closure stays inside the automaton's language and the
/// set is uniquely decodable (Sardinas-Patterson).
FreeCheckResult free_submonoid_check(const IrrAutomaton& aut,
                                     const std::vector<Word>& gens);

/// Sardinas-Patterson unique-decodability check, exposed for testing.
/// Returns a word with two distinct factorizations when not a code.
std::optional<Word> sardinas_patterson_witness(const std::vector<Word>& gens);

}  // namespace gsb
