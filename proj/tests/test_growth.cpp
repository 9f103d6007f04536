#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace gsb;
using gsb::testing::w;

namespace {

/// Brute-force count of words avoiding every forbidden factor, per length.
std::vector<Integer> brute_counts(const RewriteSystem& sys,
                                  std::size_t max_len) {
  std::vector<Integer> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    Integer c = 0;
    for (const Word& u : gsb::testing::words_of_length(sys.alphabet(), len))
      if (is_irreducible(u, sys)) c += 1;
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("automaton counts match enumeration on the example systems") {
  for (const char* text :
       {gsb::testing::kG23System, gsb::testing::kG43System}) {
    RewriteSystem sys = parse_system(text);
    IrrAutomaton aut = build_irr_automaton(ForbiddenSet::of(sys), sys.alphabet());
    auto counts = count_normal_words(aut, 12);
    auto expected = brute_counts(sys, 12);
    CHECK(counts == expected);
  }
}

TEST_CASE("automaton acceptance equals irreducibility wordwise") {
  RewriteSystem sys = gsb::testing::g23_system();
  IrrAutomaton aut = build_irr_automaton(ForbiddenSet::of(sys), sys.alphabet());
  for (const Word& u : gsb::testing::words_up_to(sys.alphabet(), 9))
    CHECK(aut.accepts(u) == is_irreducible(u, sys));
}

TEST_CASE("G23 census is quadratic with validity ExactForA") {
  RewriteSystem sys = gsb::testing::g23_system();
  Presentation pres = gsb::testing::g23_presentation();
  GrowthReport report = gkdim_report(pres, sys, 12, 100);
  CHECK(report.validity == GrowthValidity::ExactForA);
  REQUIRE(report.classification.is_polynomial());
  CHECK(*report.classification.gk() == 2);
  CHECK(report.certified);
  // f(0) = 1, f(1) = 3, f(n) = 3n for n >= 1
  CHECK(report.per_length[0] == 1);
  for (std::size_t n = 1; n <= 100; ++n)
    CHECK(report.per_length[n] == 3 * Integer(n));
}

TEST_CASE("tower-order systems only give lower bounds") {
  RewriteSystem sys = gsb::testing::g43_system();
  Presentation pres{sys.alphabet(), {}, sys.order(),
                    PresentationKind::Semigroup, {}};
  GrowthReport report = gkdim_report(pres, sys, {}, 30);
  CHECK(report.validity == GrowthValidity::LowerBoundForA);
  CHECK(report.classification.is_exponential());
}

TEST_CASE("finite-dimensional classification counts the basis") {
  // commuting involutions: Irr = square-free ascending words, 2^3 of them
  Presentation pres = manturov(ManturovSpec{3, 1});
  auto [sys, report] = complete(pres, CompletionCaps{});
  REQUIRE(report.status == CompletionReport::Status::Stabilized);
  IrrAutomaton aut = build_irr_automaton(ForbiddenSet::of(sys), sys.alphabet());
  Classification cls = classify_growth(aut);
  REQUIRE(cls.is_finite());
  CHECK(std::get<Classification::FiniteDimensional>(cls.value).dim == 8);
}

TEST_CASE("single rule systems classify by cycle structure") {
  AlphabetPtr alpha = Alphabet::make({"x", "y"});
  MonomialOrder ord = MonomialOrder::deg_lex(alpha, {0, 1});
  auto sys_for = [&](const std::string& lhs) {
    return RewriteSystem(
        alpha, ord,
        {Rule{w(*alpha, lhs), Polynomial::from_word(alpha, w(*alpha, "x")),
              RuleOrigin{}}});
  };
  // avoid xy: Irr = y^i x^j, quadratic
  {
    IrrAutomaton aut =
        build_irr_automaton(ForbiddenSet::of(sys_for("xy")), alpha);
    Classification cls = classify_growth(aut);
    REQUIRE(cls.is_polynomial());
    CHECK(*cls.gk() == 2);
  }
  // avoid yyx: exponential (contains all yy-free words)
  {
    IrrAutomaton aut =
        build_irr_automaton(ForbiddenSet::of(sys_for("yyx")), alpha);
    CHECK(classify_growth(aut).is_exponential());
  }
}

TEST_CASE("pumped patterns participate in the forbidden set") {
  RewriteSystem sys = gsb::testing::g23_system();
  IrrAutomaton aut = build_irr_automaton(ForbiddenSet::of(sys), sys.alphabet());
  const Alphabet& alpha = *sys.alphabet();
  CHECK_FALSE(aut.accepts(w(alpha, "bacb")));
  CHECK_FALSE(aut.accepts(w(alpha, "bacacacb")));
  CHECK_FALSE(aut.accepts(w(alpha, "abacacbc")));
  CHECK(aut.accepts(w(alpha, "bacac")));
  CHECK(aut.accepts(w(alpha, "acacac")));
}

TEST_CASE("state cap raises a resource error") {
  RewriteSystem sys = gsb::testing::g43_system();
  CHECK_THROWS_AS(build_irr_automaton(ForbiddenSet::of(sys), sys.alphabet(), 3),
                  ResourceError);
}

TEST_CASE("Sardinas-Patterson on known codes and non-codes") {
  AlphabetPtr alpha = Alphabet::make({"x", "y"});
  auto words = [&](std::initializer_list<const char*> names) {
    std::vector<Word> out;
    for (const char* n : names) out.push_back(w(*alpha, n));
    return out;
  };
  // {x, xx} is not a code; the witness has two factorizations
  auto witness = sardinas_patterson_witness(words({"x", "xx"}));
  REQUIRE(witness.has_value());
  CHECK(witness->size() >= 2);
  // {yx, yx^2} is a code (prefix distinguishing letter counts)
  CHECK_FALSE(sardinas_patterson_witness(words({"yx", "yxx"})).has_value());
  // classic uniquely decodable but non-prefix set
  CHECK_FALSE(sardinas_patterson_witness(words({"x", "xy"})).has_value());
  // {xy, yx, xyx} admits xyxyx in two ways
  CHECK(sardinas_patterson_witness(words({"xy", "yx", "xyx"})).has_value());
}

TEST_CASE("free submonoid certification") {
  // free monoid: everything accepted
  AlphabetPtr alpha = Alphabet::make({"x", "y"});
  RewriteSystem free_sys(alpha, MonomialOrder::deg_lex(alpha, {0, 1}), {});
  IrrAutomaton all = build_irr_automaton(ForbiddenSet::of(free_sys), alpha);

  auto gens = [&](std::initializer_list<const char*> names) {
    std::vector<Word> out;
    for (const char* n : names) out.push_back(w(*alpha, n));
    return out;
  };

  CHECK(free_submonoid_check(all, gens({"yx", "yxx"})).is_free());
  CHECK(free_submonoid_check(all, gens({"x", "xx"})).verdict ==
        FreeCheckResult::Verdict::NotCode);

  // forbid xx: products of {x, yx} leave the language
  RewriteSystem no_xx(
      alpha, MonomialOrder::deg_lex(alpha, {0, 1}),
      {Rule{w(*alpha, "xx"), Polynomial::from_word(alpha, w(*alpha, "y")),
            RuleOrigin{}}});
  IrrAutomaton aut = build_irr_automaton(ForbiddenSet::of(no_xx), alpha);
  FreeCheckResult r = free_submonoid_check(aut, gens({"x", "yx"}));
  CHECK(r.verdict == FreeCheckResult::Verdict::LeavesIrr);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->find(w(*alpha, "xx")).has_value());

  CHECK_THROWS_AS(free_submonoid_check(all, {}), DomainError);
  CHECK_THROWS_AS(free_submonoid_check(all, gens({"x", "x"})), DomainError);
}

TEST_CASE("G43 free pair") {
  RewriteSystem sys = gsb::testing::g43_system();
  IrrAutomaton aut = build_irr_automaton(ForbiddenSet::of(sys), sys.alphabet());
  const Alphabet& alpha = *sys.alphabet();
  FreeCheckResult r =
      free_submonoid_check(aut, {w(alpha, "ca"), w(alpha, "da")});
  CHECK(r.is_free());
}

TEST_CASE("filtration dimensions for G23 coincide with the monomial algebra") {
  RewriteSystem sys = gsb::testing::g23_system();
  Presentation pres = gsb::testing::g23_presentation();
  FiltrationTable table = dim_filtration(pres, sys, 6);
  REQUIRE(table.d_A.size() == 7);
  CHECK(table.d_A == table.d_tilde);
  // cumulative census: 1, 4, 10, then +9, +12, ... (3n new words per length)
  CHECK(table.d_A[0] == 1);
  CHECK(table.d_A[1] == 4);
  CHECK(table.d_A[2] == 10);
}

TEST_CASE("filtration diverges for xy = y^2 x under reverse tower") {
  AlphabetPtr alpha = Alphabet::make({"x", "y"});
  MonomialOrder ord = MonomialOrder::reverse_tower(alpha, {1, 0});
  Polynomial xy = parse_polynomial(alpha, "x y");
  Polynomial yyx = parse_polynomial(alpha, "y y x");
  Presentation pres{alpha, {{xy, yyx}}, ord, PresentationKind::Semigroup, {}};
  RewriteSystem sys(alpha, ord,
                    {orient(xy - yyx, ord)});
  CHECK(sys.rules()[0].lhs == w(*alpha, "xy"));
  FiltrationTable table = dim_filtration(pres, sys, 6);
  bool strict = false;
  for (std::size_t n = 0; n < table.d_A.size(); ++n) {
    CHECK(table.d_tilde[n] <= table.d_A[n]);
    if (table.d_tilde[n] < table.d_A[n]) strict = true;
  }
  CHECK(strict);
  // the monomial side counts y^i x^j only
  CHECK(table.d_tilde[6] == Integer(7 * 8 / 2));
}

TEST_CASE("filtration length cap") {
  RewriteSystem sys = gsb::testing::g23_system();
  Presentation pres = gsb::testing::g23_presentation();
  CHECK_THROWS_AS(dim_filtration(pres, sys, 11), ResourceError);
}
