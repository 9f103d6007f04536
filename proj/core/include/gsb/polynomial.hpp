#pragma once

#include <map>
#include <utility>

#include "gsb/coefficient.hpp"
#include "gsb/order.hpp"
#include "gsb/word.hpp"

namespace gsb {

/// A noncommutative polynomial: a finite map Word -> nonzero Coefficient over
/// a fixed alphabet. Equality is support-and-coefficient equality. No
/// monomial order is baked in; order-dependent queries take one explicitly.
class Polynomial {
 public:
  using Terms = std::map<Word, Coefficient>;

  /// Placeholder zero with no alphabet; assign before use.
  Polynomial() = default;
  explicit Polynomial(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}

  static Polynomial zero(AlphabetPtr alpha) { return Polynomial(alpha); }
  static Polynomial term(AlphabetPtr alpha, Word w, Coefficient c);
  static Polynomial from_word(AlphabetPtr alpha, Word w) {
    return term(std::move(alpha), std::move(w), Coefficient(1));
  }
  static Polynomial one(AlphabetPtr alpha) {
    return from_word(std::move(alpha), Word{});
  }
  static Polynomial constant(AlphabetPtr alpha, Coefficient c) {
    return term(std::move(alpha), Word{}, std::move(c));
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Coefficient coefficient(const Word& w) const;
  void add_term(const Word& w, const Coefficient& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  /// Free-algebra product: distributive concatenation.
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Coefficient& c) const;
  /// a * p * b for words a, b.
  Polynomial conjugated(const Word& a, const Word& b) const;

  bool operator==(const Polynomial& o) const {
    return terms_ == o.terms_ && same_alphabet(alpha_, o.alpha_);
  }

  /// The ord-maximal word of the support with its coefficient.
  /// Throws EmptyPolynomialError on zero.
  std::pair<Word, Coefficient> leading(const MonomialOrder& ord) const;
  /// Divides by the leading coefficient. Throws EmptyPolynomialError on zero.
  Polynomial monic(const MonomialOrder& ord) const;

  std::string str(const Alphabet& alpha) const;

 private:
  AlphabetPtr alpha_;
  Terms terms_;
};

}  // namespace gsb
