#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsb/alphabet.hpp"

namespace gsb {

using Letter = std::int32_t;

/// A word in the free monoid: a sequence of letter indices into an Alphabet.
/// The empty word is the monoid identity 1. Comparison here is plain storage
/// order (length, then index-lex) used for canonical containers; monomial
/// comparison lives in MonomialOrder.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& other) const {
    if (auto c = letters.size() <=> other.letters.size(); c != 0) return c;
    return letters <=> other.letters;
  }

  /// Concatenation.
  Word operator*(const Word& other) const;
  Word pow(unsigned m) const;

  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix(std::size_t len) const { return sub(size() - len, len); }

  bool matches_at(const Word& factor, std::size_t pos) const;
  /// Leftmost occurrence of a factor, if any.
  std::optional<std::size_t> find(const Word& factor) const;

  /// Validates all indices against an alphabet.
  void check_over(const Alphabet& alpha) const;
};

/// Builds a word from whitespace-free concatenated letter names using greedy
/// longest-match tokenization, or from space-separated names.
Word word_from_names(const Alphabet& alpha, std::string_view text);

/// Renders a word using the alphabet's names; multi-character names are
/// space-separated, single-character alphabets concatenate. The empty word
/// renders as "1".
std::string to_string(const Alphabet& alpha, const Word& w);

}  // namespace gsb
