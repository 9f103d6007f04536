#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace gsb;
using gsb::testing::w;

TEST_CASE("orient makes rules monic and checks orientation") {
  AlphabetPtr alpha = Alphabet::make({"a", "b", "c"});
  MonomialOrder ord = MonomialOrder::deg_lex(alpha, {0, 1, 2});
  Rule r = orient(parse_polynomial(alpha, "2 b c a - 2 a c b"), ord);
  CHECK(r.lhs == w(*alpha, "bca"));
  CHECK(r.rhs == parse_polynomial(alpha, "a c b"));
  CHECK(r.binding() == parse_polynomial(alpha, "b c a - a c b"));
  CHECK_THROWS_AS(orient(Polynomial::zero(alpha), ord), EmptyPolynomialError);
  // a nonzero constant has the empty word as leading monomial
  CHECK_THROWS_AS(orient(parse_polynomial(alpha, "2"), ord), OrientationError);
}

TEST_CASE("schema instances expand blocks") {
  RewriteSystem sys = gsb::testing::g23_system();
  const Alphabet& alpha = *sys.alphabet();
  REQUIRE(sys.schemas().size() == 1);
  const RuleSchema& s = sys.schemas()[0];
  CHECK(s.lhs_instance(1) == w(alpha, "bacb"));
  CHECK(s.rhs_instance(1) == w(alpha, "ca"));
  CHECK(s.lhs_instance(3) == w(alpha, "bacacacb"));
  CHECK(s.rhs_instance(3) == w(alpha, "cacaca"));
}

TEST_CASE("find_occurrence picks leftmost, then rule order, then largest m") {
  RewriteSystem sys = gsb::testing::g23_system();
  const Alphabet& alpha = *sys.alphabet();

  // schema instance m = 2 at offset 1 inside abacacba
  auto occ = find_occurrence(w(alpha, "abacacba"), sys);
  REQUIRE(occ.has_value());
  CHECK(occ->position == 1);
  CHECK(occ->ref.is_schema());
  CHECK(occ->ref.exponent == 2);

  // bacb is reducible only through the schema with m = 1
  CHECK_FALSE(is_irreducible(w(alpha, "bacb"), sys));
  auto occ2 = find_occurrence(w(alpha, "bacb"), sys);
  REQUIRE(occ2.has_value());
  CHECK(occ2->ref.is_schema());
  CHECK(occ2->ref.exponent == 1);

  // finite rules win at the same position
  auto occ3 = find_occurrence(w(alpha, "bbacb"), sys);
  REQUIRE(occ3.has_value());
  CHECK(occ3->position == 0);
  CHECK_FALSE(occ3->ref.is_schema());

  CHECK(is_irreducible(w(alpha, "abab"), sys));
  CHECK(is_irreducible(Word{}, sys));
}

TEST_CASE("normal forms in the G23 system") {
  RewriteSystem sys = gsb::testing::g23_system();
  const Alphabet& alpha = *sys.alphabet();
  AlphabetPtr ap = sys.alphabet();
  auto nf = [&](const std::string& word) {
    Polynomial p = normal_form(w(alpha, word), sys);
    REQUIRE(p.support_size() == 1);
    return to_string(alpha, p.terms().begin()->first);
  };
  CHECK(nf("bacb") == "ca");
  CHECK(nf("bacacb") == "caca");
  CHECK(nf("aa") == "1");
  CHECK(nf("bca") == "acb");
  CHECK(nf("cbacba") == "1");
  CHECK(nf("abab") == "abab");
}

TEST_CASE("normal form is idempotent and strictly decreasing per step") {
  RewriteSystem sys = gsb::testing::g23_system();
  AlphabetPtr alpha = sys.alphabet();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 12), letter(0, 2);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Letter> ls(len(rng));
    for (Letter& l : ls) l = letter(rng);
    Word u(std::move(ls));
    Polynomial p = normal_form(u, sys);
    CHECK(normal_form(p, sys) == p);
    for (const auto& [word, c] : p.terms())
      CHECK(is_irreducible(word, sys));
    // a reducible input strictly exceeds its normal form
    if (!is_irreducible(u, sys) && p.support_size() == 1)
      CHECK(sys.order().less(p.terms().begin()->first, u));
  }
}

TEST_CASE("step budget aborts runaway reductions") {
  RewriteSystem sys = gsb::testing::g23_system();
  const Alphabet& alpha = *sys.alphabet();
  Word big = w(alpha, "cba").pow(40);
  CHECK_THROWS_AS(normal_form(big, sys, 3), StepBudgetError);
}

TEST_CASE("system construction rejects bad rule sets") {
  AlphabetPtr alpha = Alphabet::make({"a", "b"});
  MonomialOrder ord = MonomialOrder::deg_lex(alpha, {0, 1});
  auto rule = [&](const std::string& l, const std::string& r) {
    return Rule{w(*alpha, l), parse_polynomial(alpha, r), RuleOrigin{}};
  };
  // duplicate lhs
  CHECK_THROWS_AS(
      RewriteSystem(alpha, ord, {rule("ba", "a b"), rule("ba", "a")}),
      DomainError);
  // misoriented rhs
  CHECK_THROWS_AS(RewriteSystem(alpha, ord, {rule("a", "b b")}),
                  OrientationError);
  // fine
  RewriteSystem ok(alpha, ord, {rule("ba", "a b")});
  CHECK(ok.is_binomial());
}
