#include "gsb/text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace gsb {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  char symbol = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  Lexer(std::string_view text, int line) : text_(text), line_(line) {
    advance();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        step();
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        step();
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          step();
      }
      tok_.kind = Token::Kind::Number;
      tok_.text = std::string(text_.substr(start, pos_ - start));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        step();
      tok_.kind = Token::Kind::Ident;
      tok_.text = std::string(text_.substr(start, pos_ - start));
    } else if (std::string_view("+-*^()<>:;=").find(c) !=
               std::string_view::npos) {
      tok_.kind = Token::Kind::Symbol;
      tok_.symbol = c;
      step();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_,
                       col_);
    }
  }

  void step() {
    ++pos_;
    ++col_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_, col_ = 1;
  Token tok_;
};

bool is_symbol(const Token& t, char c) {
  return t.kind == Token::Kind::Symbol && t.symbol == c;
}

Rational parse_rational(const std::string& text) {
  return Rational(text);
}

Letter letter_of(const AlphabetPtr& alpha, const Token& tok) {
  int idx = alpha->index(tok.text);
  if (idx < 0)
    throw ParseError("unknown letter '" + tok.text + "'", tok.line, tok.col);
  return static_cast<Letter>(idx);
}

class PolyParser {
 public:
  PolyParser(const AlphabetPtr& alpha, Lexer& lex) : alpha_(alpha), lex_(lex) {}

  Polynomial expr() {
    bool neg = false;
    if (is_symbol(lex_.peek(), '-')) {
      lex_.take();
      neg = true;
    } else if (is_symbol(lex_.peek(), '+')) {
      lex_.take();
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (is_symbol(lex_.peek(), '+') || is_symbol(lex_.peek(), '-')) {
      bool minus = lex_.take().symbol == '-';
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

 private:
  bool starts_factor(const Token& t) const {
    return t.kind == Token::Kind::Ident || t.kind == Token::Kind::Number ||
           is_symbol(t, '(');
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (is_symbol(lex_.peek(), '*')) {
        lex_.take();
        acc = acc * factor();
      } else if (starts_factor(lex_.peek())) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (is_symbol(lex_.peek(), '^')) {
      lex_.take();
      Token e = lex_.take();
      if (e.kind != Token::Kind::Number ||
          e.text.find('/') != std::string::npos)
        throw ParseError("exponent must be a nonnegative integer", e.line,
                         e.col);
      unsigned n = static_cast<unsigned>(std::stoul(e.text));
      Polynomial acc = Polynomial::one(alpha_);
      for (unsigned i = 0; i < n; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial primary() {
    Token t = lex_.take();
    if (t.kind == Token::Kind::Number)
      return Polynomial::constant(alpha_,
                                  Coefficient(parse_rational(t.text)));
    if (t.kind == Token::Kind::Ident)
      return Polynomial::from_word(alpha_, Word({letter_of(alpha_, t)}));
    if (is_symbol(t, '(')) {
      Polynomial inner = expr();
      Token close = lex_.take();
      if (!is_symbol(close, ')'))
        throw ParseError("expected ')'", close.line, close.col);
      return inner;
    }
    throw ParseError("expected a coefficient, letter or '('", t.line, t.col);
  }

  AlphabetPtr alpha_;
  Lexer& lex_;
};

void expect_end(Lexer& lex) {
  if (lex.peek().kind != Token::Kind::End) lex.fail("trailing input");
}

/// Chain `a < b < c` (ascending) or `a > b > c` (descending); returns
/// letters in ascending order and checks coverage of the alphabet.
std::vector<int> parse_letter_chain(const AlphabetPtr& alpha, Lexer& lex) {
  std::vector<int> letters;
  char rel = 0;
  for (;;) {
    Token t = lex.take();
    if (t.kind != Token::Kind::Ident)
      throw ParseError("expected a letter name", t.line, t.col);
    letters.push_back(letter_of(alpha, t));
    const Token& nxt = lex.peek();
    if (is_symbol(nxt, '<') || is_symbol(nxt, '>')) {
      char c = lex.take().symbol;
      if (rel && c != rel)
        throw ParseError("mixed '<' and '>' in order chain", nxt.line,
                         nxt.col);
      rel = c;
    } else {
      break;
    }
  }
  if (rel == '>') std::reverse(letters.begin(), letters.end());
  std::vector<bool> seen(alpha->size(), false);
  for (int l : letters) {
    if (seen[l])
      throw ParseError("letter '" + alpha->name(l) + "' listed twice", 0, 0);
    seen[l] = true;
  }
  if (static_cast<int>(letters.size()) != alpha->size())
    throw ParseError("order chain must list every letter", 0, 0);
  return letters;
}

}  // namespace

Polynomial parse_polynomial(const AlphabetPtr& alpha, std::string_view text,
                            int line) {
  Lexer lex(text, line);
  PolyParser parser(alpha, lex);
  Polynomial p = parser.expr();
  expect_end(lex);
  return p;
}

MonomialOrder parse_order_spec(const AlphabetPtr& alpha, std::string_view text,
                               int line) {
  Lexer lex(text, line);
  Token fam = lex.take();
  if (fam.kind != Token::Kind::Ident)
    throw ParseError("expected an order family name", fam.line, fam.col);
  if (fam.text == "deglex" || fam.text == "tower" || fam.text == "revtower") {
    std::vector<int> asc = parse_letter_chain(alpha, lex);
    expect_end(lex);
    if (fam.text == "deglex") return MonomialOrder::deg_lex(alpha, asc);
    if (fam.text == "tower") return MonomialOrder::tower(alpha, asc);
    return MonomialOrder::reverse_tower(alpha, asc);
  }
  if (fam.text == "wdeglex") {
    std::vector<long> weights(alpha->size(), 0);
    std::vector<int> pair_order;
    while (lex.peek().kind == Token::Kind::Ident) {
      Token name = lex.take();
      Letter l = letter_of(alpha, name);
      Token colon = lex.take();
      if (!is_symbol(colon, ':'))
        throw ParseError("expected ':' after letter name", colon.line,
                         colon.col);
      Token w = lex.take();
      if (w.kind != Token::Kind::Number ||
          w.text.find('/') != std::string::npos)
        throw ParseError("weight must be a positive integer", w.line, w.col);
      long weight = std::stol(w.text);
      if (weight <= 0)
        throw ParseError("weight must be a positive integer", w.line, w.col);
      if (weights[l] != 0)
        throw ParseError("letter '" + name.text + "' listed twice", name.line,
                         name.col);
      weights[l] = weight;
      pair_order.push_back(l);
    }
    for (int l = 0; l < alpha->size(); ++l)
      if (weights[l] == 0)
        throw ParseError("missing weight for letter '" + alpha->name(l) + "'",
                         fam.line, fam.col);
    std::vector<int> asc = pair_order;
    if (is_symbol(lex.peek(), ';')) {
      lex.take();
      asc = parse_letter_chain(alpha, lex);
    }
    expect_end(lex);
    return MonomialOrder::weighted_deg_lex(alpha, std::move(weights), asc);
  }
  throw ParseError("unknown order family '" + fam.text + "'", fam.line,
                   fam.col);
}

std::string order_spec_string(const MonomialOrder& ord) {
  const AlphabetPtr& alpha = ord.alphabet();
  std::vector<int> asc = ord.ascending_letters();
  std::ostringstream os;
  switch (ord.kind()) {
    case OrderKind::DegLex:
    case OrderKind::ReverseTower: {
      os << (ord.kind() == OrderKind::DegLex ? "deglex" : "revtower");
      for (std::size_t i = 0; i < asc.size(); ++i)
        os << (i ? " < " : " ") << alpha->name(asc[i]);
      break;
    }
    case OrderKind::Tower: {
      os << "tower";
      for (std::size_t i = 0; i < asc.size(); ++i)
        os << (i ? " > " : " ") << alpha->name(asc[asc.size() - 1 - i]);
      break;
    }
    case OrderKind::WeightedDegLex: {
      os << "wdeglex";
      for (int l : asc) os << ' ' << alpha->name(l) << ':' << ord.weight(l);
      break;
    }
  }
  return os.str();
}

namespace {

std::string word_string(const Alphabet& alpha, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << alpha.name(w[i]);
  }
  return os.str();
}

std::string poly_string(const Alphabet& alpha, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // largest storage-order term first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    Rational v = c.value();
    bool neg = v < 0;
    if (first) {
      if (neg) os << "- ";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Rational a = neg ? Rational(-v) : v;
    if (w.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << ' ';
      os << word_string(alpha, w);
    }
  }
  return os.str();
}

struct Line {
  std::string text;
  int number = 0;
};

/// Strips comments and blank lines, keeping 1-based line numbers.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!line.empty() && is_space(line.back())) line.pop_back();
    std::size_t lead = 0;
    while (lead < line.size() && is_space(line[lead])) ++lead;
    line.erase(0, lead);
    if (!line.empty()) out.push_back(Line{std::move(line), number});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.size() >= prefix.size() &&
         std::string_view(s).substr(0, prefix.size()) == prefix;
}

Presentation parse_ore_stanza(const Line& line) {
  // ore sigma = <poly in y> delta = <poly in y>
  std::string body = line.text.substr(3);
  std::size_t sigma_at = body.find("sigma");
  std::size_t delta_at = body.find("delta");
  if (sigma_at == std::string::npos || delta_at == std::string::npos ||
      delta_at < sigma_at)
    throw ParseError("ore stanza needs 'sigma = ... delta = ...'", line.number,
                     1);
  auto after_eq = [&](std::size_t from, std::size_t limit) -> std::string {
    std::size_t eq = body.find('=', from);
    if (eq == std::string::npos || eq >= limit)
      throw ParseError("expected '=' in ore stanza", line.number, 1);
    return body.substr(eq + 1, limit - eq - 1);
  };
  std::string sigma_text = after_eq(sigma_at, delta_at);
  std::string delta_text = after_eq(delta_at, body.size());

  AlphabetPtr y_alpha = Alphabet::make({"y"});
  OreSpec spec{parse_polynomial(y_alpha, sigma_text, line.number),
               parse_polynomial(y_alpha, delta_text, line.number)};
  return ore_extension(spec);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<Line> lines = significant_lines(text);
  std::size_t i = 0;
  if (i >= lines.size() || lines[i].text != "gsbpres 1")
    throw ParseError("expected header 'gsbpres 1'",
                     i < lines.size() ? lines[i].number : 1, 1);
  ++i;
  if (i >= lines.size())
    throw ParseError("empty presentation", lines[0].number, 1);

  if (starts_with(lines[i].text, "manturov")) {
    auto parts = split_words(lines[i].text);
    if (parts.size() != 3)
      throw ParseError("manturov stanza needs 'manturov <n> <k>'",
                       lines[i].number, 1);
    return manturov(ManturovSpec{std::stoi(parts[1]), std::stoi(parts[2])});
  }
  if (starts_with(lines[i].text, "ore")) return parse_ore_stanza(lines[i]);

  auto parts = split_words(lines[i].text);
  if (parts.empty() || parts[0] != "alphabet" || parts.size() < 2)
    throw ParseError("expected 'alphabet <name>...'", lines[i].number, 1);
  AlphabetPtr alpha =
      Alphabet::make(std::vector<std::string>(parts.begin() + 1, parts.end()));
  ++i;

  if (i >= lines.size() || !starts_with(lines[i].text, "order"))
    throw ParseError("expected 'order <spec>'",
                     i < lines.size() ? lines[i].number : lines[0].number, 1);
  std::string order_text = lines[i].text.substr(5);
  if (!order_text.empty() && order_text[0] == ':') order_text.erase(0, 1);
  MonomialOrder ord = parse_order_spec(alpha, order_text, lines[i].number);
  ++i;

  if (i >= lines.size() || lines[i].text != "relations:")
    throw ParseError("expected 'relations:'",
                     i < lines.size() ? lines[i].number : lines[0].number, 1);
  ++i;

  std::vector<std::pair<Polynomial, Polynomial>> relations;
  bool binomial = true;
  for (; i < lines.size(); ++i) {
    std::size_t eq = lines[i].text.find('=');
    if (eq == std::string::npos)
      throw ParseError("relation needs 'lhs = rhs'", lines[i].number, 1);
    Polynomial l = parse_polynomial(alpha, lines[i].text.substr(0, eq),
                                    lines[i].number);
    Polynomial r = parse_polynomial(alpha, lines[i].text.substr(eq + 1),
                                    lines[i].number);
    if (l == r)
      throw ParseError("relation has equal sides", lines[i].number, 1);
    auto word_like = [](const Polynomial& p) {
      return p.support_size() == 1 && p.terms().begin()->second.is_one();
    };
    if (!word_like(l) || !word_like(r)) binomial = false;
    relations.emplace_back(std::move(l), std::move(r));
  }
  return Presentation{alpha, std::move(relations), std::move(ord),
                      binomial ? PresentationKind::Semigroup
                               : PresentationKind::Algebra,
                      {}};
}

std::string to_text(const Presentation& pres) {
  std::ostringstream os;
  os << "gsbpres 1\n";
  os << "alphabet";
  for (const auto& n : pres.alphabet->letters()) os << ' ' << n;
  os << "\norder " << order_spec_string(pres.order) << "\nrelations:\n";
  for (const auto& [l, r] : pres.relations)
    os << poly_string(*pres.alphabet, l) << " = "
       << poly_string(*pres.alphabet, r) << '\n';
  return os.str();
}

namespace {

/// One schema side: letters with at most one parenthesized pumped group.
struct SchemaSide {
  Word prefix, block, suffix;
  bool has_block = false;
};

SchemaSide parse_schema_side(const AlphabetPtr& alpha, const std::string& text,
                             int line) {
  Lexer lex(text, line);
  SchemaSide side;
  if (lex.peek().kind == Token::Kind::Number) {
    // the empty word `1`
    Token one = lex.take();
    if (one.text != "1")
      throw ParseError("expected a word or '1'", one.line, one.col);
    expect_end(lex);
    return side;
  }
  while (lex.peek().kind != Token::Kind::End) {
    Token t = lex.take();
    if (t.kind == Token::Kind::Ident) {
      (side.has_block ? side.suffix : side.prefix)
          .letters.push_back(letter_of(alpha, t));
    } else if (is_symbol(t, '(')) {
      if (side.has_block)
        throw ParseError("only one pumped block per side", t.line, t.col);
      while (lex.peek().kind == Token::Kind::Ident) {
        Token b = lex.take();
        side.block.letters.push_back(letter_of(alpha, b));
      }
      Token close = lex.take();
      if (!is_symbol(close, ')'))
        throw ParseError("expected ')'", close.line, close.col);
      Token caret = lex.take();
      if (!is_symbol(caret, '^'))
        throw ParseError("expected '^m' after pumped block", caret.line,
                         caret.col);
      Token m = lex.take();
      if (m.kind != Token::Kind::Ident || m.text != "m")
        throw ParseError("expected exponent 'm'", m.line, m.col);
      side.has_block = true;
    } else {
      throw ParseError("unexpected token in schema side", t.line, t.col);
    }
  }
  return side;
}

std::string schema_side_string(const Alphabet& alpha, const Word& prefix,
                               const Word& block, const Word& suffix) {
  std::ostringstream os;
  bool any = false;
  auto emit_word = [&](const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (any) os << ' ';
      os << alpha.name(w[i]);
      any = true;
    }
  };
  emit_word(prefix);
  if (!block.empty()) {
    if (any) os << ' ';
    os << '(';
    for (std::size_t i = 0; i < block.size(); ++i)
      os << (i ? " " : "") << alpha.name(block[i]);
    os << ")^m";
    any = true;
  }
  emit_word(suffix);
  if (!any) os << '1';
  return os.str();
}

}  // namespace

RewriteSystem parse_system(std::string_view text) {
  std::vector<Line> lines = significant_lines(text);
  std::size_t i = 0;
  if (i >= lines.size() || lines[i].text != "gsbsys 1")
    throw ParseError("expected header 'gsbsys 1'",
                     i < lines.size() ? lines[i].number : 1, 1);
  ++i;

  if (i >= lines.size() || !starts_with(lines[i].text, "alphabet"))
    throw ParseError("expected 'alphabet <name>...'",
                     i < lines.size() ? lines[i].number : lines[0].number, 1);
  auto parts = split_words(lines[i].text);
  if (parts.size() < 2)
    throw ParseError("expected 'alphabet <name>...'", lines[i].number, 1);
  AlphabetPtr alpha =
      Alphabet::make(std::vector<std::string>(parts.begin() + 1, parts.end()));
  ++i;

  if (i >= lines.size() || !starts_with(lines[i].text, "order"))
    throw ParseError("expected 'order <spec>'",
                     i < lines.size() ? lines[i].number : lines[0].number, 1);
  std::string order_text = lines[i].text.substr(5);
  if (!order_text.empty() && order_text[0] == ':') order_text.erase(0, 1);
  MonomialOrder ord = parse_order_spec(alpha, order_text, lines[i].number);
  ++i;

  std::vector<Rule> rules;
  std::vector<RuleSchema> schemas;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::size_t arrow = line.text.find("->");
    if (arrow == std::string::npos)
      throw ParseError("expected '->'", line.number, 1);
    if (starts_with(line.text, "rule ")) {
      std::string lhs_text = line.text.substr(5, arrow - 5);
      std::string rhs_text = line.text.substr(arrow + 2);
      Polynomial lhs = parse_polynomial(alpha, lhs_text, line.number);
      if (lhs.support_size() != 1 || !lhs.terms().begin()->second.is_one() ||
          lhs.terms().begin()->first.empty())
        throw ParseError("rule lhs must be a non-empty word", line.number, 1);
      Polynomial rhs = parse_polynomial(alpha, rhs_text, line.number);
      rules.push_back(Rule{lhs.terms().begin()->first, std::move(rhs),
                           RuleOrigin{}});
    } else if (starts_with(line.text, "schema ")) {
      std::size_t for_at = line.text.find(" for ", arrow);
      if (for_at == std::string::npos)
        throw ParseError("schema needs 'for m >= m0'", line.number, 1);
      std::string lhs_text = line.text.substr(7, arrow - 7);
      std::string rhs_text = line.text.substr(arrow + 2, for_at - arrow - 2);
      std::string cond_text = line.text.substr(for_at + 5);

      SchemaSide lhs = parse_schema_side(alpha, lhs_text, line.number);
      if (!lhs.has_block || lhs.block.empty())
        throw ParseError("schema lhs needs a pumped block '(B)^m'",
                         line.number, 1);
      SchemaSide rhs = parse_schema_side(alpha, rhs_text, line.number);

      Lexer cond(cond_text, line.number);
      Token m = cond.take();
      if (m.kind != Token::Kind::Ident || m.text != "m")
        throw ParseError("expected 'm >= m0'", m.line, m.col);
      Token ge1 = cond.take(), ge2 = cond.take();
      if (!is_symbol(ge1, '>') || !is_symbol(ge2, '='))
        throw ParseError("expected '>=' in schema condition", ge1.line,
                         ge1.col);
      Token m0 = cond.take();
      if (m0.kind != Token::Kind::Number ||
          m0.text.find('/') != std::string::npos)
        throw ParseError("m0 must be a positive integer", m0.line, m0.col);
      expect_end(cond);
      unsigned m_min = static_cast<unsigned>(std::stoul(m0.text));

      schemas.push_back(RuleSchema{lhs.prefix, lhs.block, lhs.suffix,
                                   rhs.prefix, rhs.block, rhs.suffix, m_min});
    } else {
      throw ParseError("expected a 'rule' or 'schema' line", line.number, 1);
    }
  }
  return RewriteSystem(alpha, std::move(ord), std::move(rules),
                       std::move(schemas));
}

std::string to_text(const RewriteSystem& sys) {
  const Alphabet& alpha = *sys.alphabet();
  std::ostringstream os;
  os << "gsbsys 1\nalphabet";
  for (const auto& n : alpha.letters()) os << ' ' << n;
  os << "\norder " << order_spec_string(sys.order()) << '\n';
  for (const Rule& r : sys.rules())
    os << "rule " << word_string(alpha, r.lhs) << " -> "
       << poly_string(alpha, r.rhs) << '\n';
  for (const RuleSchema& s : sys.schemas())
    os << "schema "
       << schema_side_string(alpha, s.lhs_prefix, s.lhs_block, s.lhs_suffix)
       << " -> "
       << schema_side_string(alpha, s.rhs_prefix, s.rhs_block, s.rhs_suffix)
       << " for m >= " << s.m_min << '\n';
  return os.str();
}

}  // namespace gsb
