#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace gsb;
using gsb::testing::w;

TEST_CASE("intersection and inclusion compositions") {
  AlphabetPtr alpha = Alphabet::make({"a", "b", "c"});
  MonomialOrder ord = MonomialOrder::deg_lex(alpha, {0, 1, 2});
  auto rule = [&](const std::string& l, const std::string& r) {
    return orient(parse_polynomial(alpha, l + " - (" + r + ")"), ord);
  };

  // bb and bca overlap in b: w = bbca
  Rule f = rule("b b", "1");
  Rule g = rule("b c a", "a c b");
  auto recs = compositions(f, g);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].kind == CompositionRecord::Kind::Intersection);
  CHECK(recs[0].ambiguity == w(*alpha, "bbca"));
  CHECK(recs[0].raw ==
        parse_polynomial(alpha, "b b c a - c a") -
            parse_polynomial(alpha, "b b c a - b a c b"));

  // no overlap at all
  CHECK(compositions(rule("a a", "1"), rule("b b", "1")).empty());

  // inclusion: aba contains b
  Rule big = rule("a b a", "1");
  Rule small = rule("b", "a");
  auto incl = compositions(big, small);
  REQUIRE(incl.size() == 1);
  CHECK(incl[0].kind == CompositionRecord::Kind::Inclusion);
  CHECK(incl[0].ambiguity == w(*alpha, "aba"));
}

TEST_CASE("verify certifies the G23 system and lists the proof ambiguities") {
  RewriteSystem sys = gsb::testing::g23_system();
  const Alphabet& alpha = *sys.alphabet();
  VerifyReport report = verify_gsb(sys, 6);
  CHECK(report.certified());
  CHECK(report.nonzero.empty());
  CHECK(report.inconclusive.empty());

  std::set<Word> ambiguities;
  for (const auto& rec : report.records) ambiguities.insert(rec.ambiguity);
  for (const char* pattern :
       {"aaa", "bbb", "ccc", "bbca", "ccab", "ccba", "bcaa", "bcab", "cabb",
        "cabca", "cbaa", "bbacb", "bbacacb", "cabacb", "cbacb", "bacbb",
        "bacbca", "bacba", "bacbacb", "bacbacacb", "bacacbacb"})
    CHECK_MESSAGE(ambiguities.count(w(alpha, pattern)) == 1, pattern);
}

TEST_CASE("verify flags an incomplete system") {
  // drop the schema: composition bbca leaves the nonzero remainder bacb - ca
  RewriteSystem sys = parse_system(R"(gsbsys 1
alphabet a b c
order deglex a < b < c
rule a a -> 1
rule b b -> 1
rule c c -> 1
rule b c a -> a c b
rule c a b -> b a c
rule c b a -> a b c
)");
  VerifyReport report = verify_gsb(sys, 6);
  CHECK_FALSE(report.certified());
  CHECK_FALSE(report.nonzero.empty());
}

TEST_CASE("completion reproduces the G23 rule family up to the degree cap") {
  Presentation pres = gsb::testing::g23_presentation();
  CompletionCaps caps;
  auto [sys, report] = complete(pres, caps);
  CHECK(report.status == CompletionReport::Status::CapReached);
  CHECK(report.pending > 0);

  const Alphabet& alpha = *sys.alphabet();
  std::set<Word> lhs;
  for (const Rule& r : sys.rules()) lhs.insert(r.lhs);
  std::set<Word> expected;
  for (const char* s : {"aa", "bb", "cc", "bca", "cab", "cba"})
    expected.insert(w(alpha, s));
  for (unsigned m = 1; m <= 5; ++m)
    expected.insert(w(alpha, "b") * w(alpha, "ac").pow(m) * w(alpha, "b"));
  CHECK(lhs == expected);

  // fold the family and re-certify
  auto [schemas, rest] = infer_schemas(sys.rules());
  REQUIRE(schemas.size() == 1);
  CHECK(schemas[0].lhs_prefix == w(alpha, "b"));
  CHECK(schemas[0].lhs_block == w(alpha, "ac"));
  CHECK(schemas[0].lhs_suffix == w(alpha, "b"));
  CHECK(schemas[0].rhs_block == w(alpha, "ca"));
  CHECK(schemas[0].m_min == 1);
  CHECK(rest.size() == 6);
  RewriteSystem folded(pres.alphabet, pres.order, rest, schemas);
  CHECK(verify_gsb(folded, 8).certified());
}

TEST_CASE("completion stabilizes on commuting involutions") {
  // manturov(3,1): three commuting involutions
  Presentation pres = manturov(ManturovSpec{3, 1});
  auto [sys, report] = complete(pres, CompletionCaps{});
  CHECK(report.status == CompletionReport::Status::Stabilized);
  CHECK(report.pending == 0);
  // every composition of the final system is trivial
  CHECK(verify_gsb(sys, 4).certified());
}

TEST_CASE("completion detects inconsistency") {
  // a = 1 and a = 2 force 1 = 2, so the ideal contains a nonzero constant
  AlphabetPtr alpha = Alphabet::make({"a"});
  MonomialOrder ord = MonomialOrder::deg_lex(alpha, {0});
  Presentation pres{alpha,
                    {{parse_polynomial(alpha, "a"), parse_polynomial(alpha, "1")},
                     {parse_polynomial(alpha, "a"), parse_polynomial(alpha, "2")}},
                    ord,
                    PresentationKind::Algebra,
                    {}};
  CHECK_THROWS_AS(complete(pres, CompletionCaps{}),
                  InconsistentPresentationError);
}

TEST_CASE("inter-reduction removes contained lhs and reduces rhs") {
  AlphabetPtr alpha = Alphabet::make({"a", "b"});
  MonomialOrder ord = MonomialOrder::deg_lex(alpha, {0, 1});
  auto rule = [&](const std::string& l, const std::string& r) {
    return orient(parse_polynomial(alpha, l + " - (" + r + ")"), ord);
  };
  // ba -> ab makes the second rule's lhs reducible
  std::vector<Rule> rules{rule("b a", "a b"), rule("b a b", "a")};
  std::vector<Rule> reduced = inter_reduce(alpha, ord, rules);
  // bab -> abb, so the second rule becomes abb -> a
  std::set<Word> lhs;
  for (const Rule& r : reduced) lhs.insert(r.lhs);
  CHECK(lhs == std::set<Word>{w(*alpha, "ba"), w(*alpha, "abb")});
}

TEST_CASE("schema inference requires three consistent members") {
  AlphabetPtr alpha = Alphabet::make({"x", "y"});
  MonomialOrder ord = MonomialOrder::deg_lex(alpha, {0, 1});
  auto rule = [&](const std::string& l, const std::string& r) {
    return orient(parse_polynomial(alpha, l + " - (" + r + ")"), ord);
  };
  // blocks do not align on the two sides
  auto [schemas, rest] =
      infer_schemas({rule("y x", "x y"), rule("y y x", "x y y")});
  CHECK(schemas.empty());
  CHECK(rest.size() == 2);

  // a genuine family with three members folds
  auto [schemas2, rest2] = infer_schemas(
      {rule("y x", "x"), rule("y y x", "x"), rule("y y y x", "x")});
  REQUIRE(schemas2.size() == 1);
  CHECK(schemas2[0].lhs_block == w(*alpha, "y"));
  CHECK(schemas2[0].m_min == 1);
  CHECK(rest2.empty());
}
