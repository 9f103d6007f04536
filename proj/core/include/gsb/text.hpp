#pragma once

#include <string>
#include <string_view>

#include "gsb/completion.hpp"
#include "gsb/presentation.hpp"

namespace gsb {

/// Syntax error with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", col " +
              std::to_string(col) + ")"),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

/// Parses a polynomial expression over the given alphabet. Grammar: sum of
/// terms, each a product of factors joined by `*` or juxtaposition; a factor
/// is a letter name, an integer or rational coefficient, or a parenthesized
/// subexpression, optionally raised with `^n`. `1` is the empty word.
Polynomial parse_polynomial(const AlphabetPtr& alpha, std::string_view text,
                            int line = 1);

/// Parses an order spec such as `deglex a < b < c`, `wdeglex x:2 y:1`,
/// `tower a > b > c > d`, `revtower y < x`. Chains with `<` list letters
/// ascending, chains with `>` descending; wdeglex takes `name:weight` pairs
/// with an optional `; a < b < ...` tie-break chain (default: pair order,
/// ascending).
MonomialOrder parse_order_spec(const AlphabetPtr& alpha, std::string_view text,
                               int line = 1);
std::string order_spec_string(const MonomialOrder& ord);

/// Presentation file format, versioned header `gsbpres 1`:
///
///   gsbpres 1
///   alphabet a b c
///   order deglex a < b < c
///   relations:
///   b c a = a c b
///
/// or one of the shorthand stanzas `manturov <n> <k>` and
/// `ore sigma = <poly in y> delta = <poly in y>` in place of the three
/// sections. `#` starts a comment.
Presentation parse_presentation(std::string_view text);
std::string to_text(const Presentation& pres);

/// Rewrite-system file format, versioned header `gsbsys 1`: alphabet and
/// order lines as above, then `rule lhs -> rhs` and
/// `schema P (B)^m S -> P' (B')^m S' for m >= m0` lines (primed parts may be
/// absent; an rhs without a `( )^m` group has an empty pumped block).
RewriteSystem parse_system(std::string_view text);
std::string to_text(const RewriteSystem& sys);

}  // namespace gsb
