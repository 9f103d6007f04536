// gsb: command-line frontend for the Groebner-Shirshov workbench.
//
// Reads a presentation file, dispatches one computation and emits a JSON
// report on stdout (or to --output). Completed systems are cached beside the
// input as <name>.gsb so later runs skip completion. Exit codes: 0 success,
// 1 computation error, 2 usage or parse error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsb/completion.hpp"
#include "gsb/growth.hpp"
#include "gsb/presentation.hpp"
#include "gsb/text.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gsb::Error("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Space-free rendering for report payloads; the alias table disambiguates
/// multi-character names.
std::string compact_word(const gsb::Alphabet& alpha, const gsb::Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += alpha.name(w[i]);
  return out;
}

struct Caps {
  std::size_t max_deg = 12;
  std::size_t max_rules = 500;
  std::size_t max_rounds = 50;
  unsigned schema_bound = 10;
  std::size_t step_budget = gsb::kDefaultStepBudget;
  std::size_t state_cap = gsb::kDefaultStateCap;
};

std::size_t default_state_cap() {
  if (const char* env = std::getenv("GSB_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return gsb::kDefaultStateCap;
}

std::string cache_path_for(const std::string& input) {
  std::string out = input;
  if (auto dot = out.rfind('.');
      dot != std::string::npos && out.find('/', dot) == std::string::npos)
    out.erase(dot);
  return out + ".gsb";
}

gsb::CompletionCaps completion_caps(const Caps& caps) {
  return gsb::CompletionCaps{caps.max_deg, caps.max_rules, caps.max_rounds,
                             caps.step_budget};
}

json completion_json(const gsb::RewriteSystem& sys,
                     const gsb::CompletionReport& report) {
  json j;
  j["status"] = report.status == gsb::CompletionReport::Status::Stabilized
                    ? "Stabilized"
                    : "CapReached";
  j["pending"] = report.pending;
  j["added"] = report.added.size();
  j["max_deg"] = report.max_deg;
  j["rule_count_history"] = report.rule_count_history;
  json rules = json::array();
  const gsb::Alphabet& alpha = *sys.alphabet();
  for (const gsb::Rule& r : sys.rules()) rules.push_back(compact_word(alpha, r.lhs));
  j["rules"] = rules;
  json schemas = json::array();
  for (const gsb::RuleSchema& s : sys.schemas()) {
    json e;
    e["lhs_prefix"] = compact_word(alpha, s.lhs_prefix);
    e["lhs_block"] = compact_word(alpha, s.lhs_block);
    e["lhs_suffix"] = compact_word(alpha, s.lhs_suffix);
    e["m_min"] = s.m_min;
    schemas.push_back(e);
  }
  j["schemas"] = schemas;
  return j;
}

/// Completes the presentation, folds rule families into schemas and writes
/// the cache file.
std::pair<gsb::RewriteSystem, json> complete_and_fold(
    const gsb::Presentation& pres, const Caps& caps,
    const std::string& cache_path) {
  auto [sys, report] = gsb::complete(pres, completion_caps(caps));
  auto [schemas, rest] = gsb::infer_schemas(sys.rules());
  gsb::RewriteSystem folded(pres.alphabet, pres.order, std::move(rest),
                            std::move(schemas));
  json j = completion_json(folded, report);
  std::ofstream out(cache_path, std::ios::binary);
  out << gsb::to_text(folded);
  j["cache"] = cache_path;
  return {std::move(folded), std::move(j)};
}

/// A completed system for the input: the cache when present, otherwise a
/// fresh bounded completion (cached for next time).
gsb::RewriteSystem load_system(const gsb::Presentation& pres,
                               const std::string& input, const Caps& caps) {
  std::string cache = cache_path_for(input);
  if (std::ifstream probe(cache); probe) return gsb::parse_system(read_file(cache));
  return complete_and_fold(pres, caps, cache).first;
}

json verify_json(const gsb::RewriteSystem& sys, const gsb::VerifyReport& vr,
                 bool verbose) {
  json j;
  j["schema_bound"] = vr.schema_bound;
  j["compositions"] = vr.records.size();
  j["nontrivial_compositions"] = vr.nonzero.size();
  j["inconclusive"] = vr.inconclusive.size();
  j["certified"] = vr.certified();
  const gsb::Alphabet& alpha = *sys.alphabet();
  if (verbose) {
    json amb = json::array();
    for (const auto& rec : vr.records)
      amb.push_back(compact_word(alpha, rec.ambiguity));
    j["ambiguities"] = amb;
  }
  json bad = json::array();
  for (std::size_t i : vr.nonzero)
    bad.push_back(compact_word(alpha, vr.records[i].ambiguity));
  j["nontrivial_ambiguities"] = bad;
  return j;
}

json classification_json(const gsb::Classification& cls) {
  json j;
  if (cls.is_finite()) {
    j["type"] = "finite";
    j["dim"] = std::get<gsb::Classification::FiniteDimensional>(cls.value)
                   .dim.str();
    j["gkdim"] = 0;
  } else if (cls.is_polynomial()) {
    j["type"] = "polynomial";
    j["gkdim"] = *cls.gk();
  } else {
    j["type"] = "exponential";
    j["gkdim"] = "infinity";
  }
  return j;
}

const char* validity_name(gsb::GrowthValidity v) {
  switch (v) {
    case gsb::GrowthValidity::ExactForA:
      return "ExactForA";
    case gsb::GrowthValidity::LowerBoundForA:
      return "LowerBoundForA";
    case gsb::GrowthValidity::SandwichForA:
      return "SandwichForA";
  }
  return "?";
}

json decimal_strings(const std::vector<gsb::Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

json alias_json(const gsb::Presentation& pres) {
  json a = json::object();
  for (const auto& [alias, canonical] : pres.aliases) a[alias] = canonical;
  return a;
}

struct Options {
  std::string input;
  std::string output;
  Caps caps;
  bool verbose = false;
  // per-subcommand extras
  std::string word1, word2, gens;
  std::size_t filtration_n = 6;
  int manturov_n = 0, manturov_k = 0;
  std::string sigma = "0", delta = "0";
  std::size_t count_to = 60;
};

int emit(const Options& opt, const std::string& command, const json& result,
         const std::string& input_text,
         std::chrono::steady_clock::time_point t0) {
  json doc;
  doc["meta"]["version"] = kVersion;
  doc["meta"]["command"] = command;
  doc["meta"]["input_digest"] = hex64(fnv1a64(input_text));
  doc["meta"]["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count();
  doc["result"] = result;
  std::string text = doc.dump(2) + "\n";
  if (!opt.output.empty()) {
    std::ofstream out(opt.output, std::ios::binary);
    out << text;
  }
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-Shirshov workbench"};
  app.require_subcommand(1);

  Options opt;
  opt.caps.state_cap = default_state_cap();

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("input", opt.input, "presentation file")->required();
    sub->add_option("-o,--output", opt.output, "also write the report here");
    sub->add_option("--max-deg", opt.caps.max_deg, "completion degree cap");
    sub->add_option("--max-rules", opt.caps.max_rules, "completion rule cap");
    sub->add_option("--max-rounds", opt.caps.max_rounds,
                    "completion round cap");
    sub->add_option("-M,--schema-bound", opt.caps.schema_bound,
                    "schema instance bound for verification");
    sub->add_option("--step-budget", opt.caps.step_budget,
                    "reduction step budget");
    sub->add_option("--state-cap", opt.caps.state_cap, "automaton state cap");
    sub->add_flag("-v,--verbose", opt.verbose, "include full listings");
  };

  CLI::App* cmd_complete = app.add_subcommand("complete", "bounded completion");
  add_common(cmd_complete);
  CLI::App* cmd_verify = app.add_subcommand("verify", "check all compositions");
  add_common(cmd_verify);
  CLI::App* cmd_nf = app.add_subcommand("nf", "normal form of a word");
  add_common(cmd_nf);
  cmd_nf->add_option("word", opt.word1, "input word")->required();
  CLI::App* cmd_wp = app.add_subcommand("wp", "word problem");
  add_common(cmd_wp);
  cmd_wp->add_option("w1", opt.word1)->required();
  cmd_wp->add_option("w2", opt.word2)->required();
  CLI::App* cmd_growth = app.add_subcommand("growth", "normal-word census");
  add_common(cmd_growth);
  cmd_growth->add_option("--count-to", opt.count_to, "census length");
  CLI::App* cmd_gkdim = app.add_subcommand("gkdim", "GK-dimension");
  add_common(cmd_gkdim);
  CLI::App* cmd_filtration =
      app.add_subcommand("filtration", "filtration dimension table");
  add_common(cmd_filtration);
  cmd_filtration->add_option("n", opt.filtration_n, "table length (<= 10)");
  CLI::App* cmd_free =
      app.add_subcommand("free-check", "free subalgebra certificate");
  add_common(cmd_free);
  cmd_free->add_option("generators", opt.gens, "comma-separated words")
      ->required();
  CLI::App* cmd_manturov =
      app.add_subcommand("manturov", "emit a Manturov group presentation");
  add_common(cmd_manturov, false);
  cmd_manturov->add_option("n", opt.manturov_n)->required();
  cmd_manturov->add_option("k", opt.manturov_k)->required();
  CLI::App* cmd_ore =
      app.add_subcommand("ore", "emit an Ore extension presentation");
  add_common(cmd_ore, false);
  cmd_ore->add_option("--sigma", opt.sigma, "sigma(y) as a polynomial in y");
  cmd_ore->add_option("--delta", opt.delta, "delta(y) as a polynomial in y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (name == "manturov") {
      gsb::Presentation pres =
          gsb::manturov(gsb::ManturovSpec{opt.manturov_n, opt.manturov_k});
      gsb::ManturovCounts counts =
          gsb::manturov_counts(gsb::ManturovSpec{opt.manturov_n, opt.manturov_k});
      json result;
      result["generators"] = pres.alphabet->size();
      result["counts"] = {{"involutions", counts.involutions},
                          {"far_commutativity", counts.far_commutativity},
                          {"tetrahedron", counts.tetrahedron}};
      result["relations"] = pres.relations.size();
      result["aliases"] = alias_json(pres);
      result["presentation"] = gsb::to_text(pres);
      if (!opt.output.empty()) {
        std::ofstream out(opt.output, std::ios::binary);
        out << gsb::to_text(pres);
        opt.output.clear();
      }
      return emit(opt, name, result, gsb::to_text(pres), t0);
    }
    if (name == "ore") {
      gsb::AlphabetPtr y_alpha = gsb::Alphabet::make({"y"});
      gsb::OreSpec spec{gsb::parse_polynomial(y_alpha, opt.sigma),
                        gsb::parse_polynomial(y_alpha, opt.delta)};
      gsb::Presentation pres = gsb::ore_extension(spec);
      json result;
      result["order"] = gsb::order_spec_string(pres.order);
      result["presentation"] = gsb::to_text(pres);
      if (!opt.output.empty()) {
        std::ofstream out(opt.output, std::ios::binary);
        out << gsb::to_text(pres);
        opt.output.clear();
      }
      return emit(opt, name, result, gsb::to_text(pres), t0);
    }

    std::string input_text = read_file(opt.input);
    const bool is_system = opt.input.size() > 4 &&
                           opt.input.substr(opt.input.size() - 4) == ".gsb";

    std::optional<gsb::RewriteSystem> loaded;
    std::optional<gsb::Presentation> pres_opt;
    if (is_system) {
      loaded = gsb::parse_system(input_text);
      // a synthetic presentation carrying the system's alphabet and order
      std::vector<std::pair<gsb::Polynomial, gsb::Polynomial>> relations;
      for (const gsb::Rule& r : loaded->rules())
        relations.emplace_back(
            gsb::Polynomial::from_word(loaded->alphabet(), r.lhs), r.rhs);
      pres_opt = gsb::Presentation{
          loaded->alphabet(), std::move(relations), loaded->order(),
          loaded->is_binomial() ? gsb::PresentationKind::Semigroup
                                : gsb::PresentationKind::Algebra,
          {}};
    } else {
      pres_opt = gsb::parse_presentation(input_text);
    }
    gsb::Presentation& pres = *pres_opt;
    const gsb::Alphabet& alpha = *pres.alphabet;

    if (name == "complete") {
      if (is_system) throw gsb::Error("complete expects a presentation file");
      auto [sys, result] =
          complete_and_fold(pres, opt.caps, cache_path_for(opt.input));
      return emit(opt, name, result, input_text, t0);
    }

    gsb::RewriteSystem sys =
        loaded ? *loaded : load_system(pres, opt.input, opt.caps);

    if (name == "verify") {
      gsb::VerifyReport vr =
          gsb::verify_gsb(sys, opt.caps.schema_bound, opt.caps.step_budget);
      json result = verify_json(sys, vr, opt.verbose);
      int rc = emit(opt, name, result, input_text, t0);
      return vr.certified() ? rc : 1;
    }
    if (name == "nf") {
      gsb::Word u = gsb::word_from_names(alpha, opt.word1);
      gsb::ReductionStats stats;
      gsb::Polynomial p = gsb::normal_form(gsb::Polynomial::from_word(pres.alphabet, u),
                                           sys, opt.caps.step_budget, &stats);
      json result;
      result["input"] = compact_word(alpha, u);
      result["normal_form"] = p.str(alpha);
      result["steps"] = stats.steps;
      return emit(opt, name, result, input_text, t0);
    }
    if (name == "wp") {
      gsb::VerifyReport vr =
          gsb::verify_gsb(sys, opt.caps.schema_bound, opt.caps.step_budget);
      std::optional<unsigned> bound;
      if (vr.certified()) bound = vr.schema_bound;
      gsb::WordProblemVerdict v = gsb::word_problem(
          sys, gsb::word_from_names(alpha, opt.word1),
          gsb::word_from_names(alpha, opt.word2), bound, opt.caps.step_budget);
      json verdict;
      verdict["equal"] = v.equal;
      verdict["nf_u"] = compact_word(alpha, v.nf_u);
      verdict["nf_v"] = compact_word(alpha, v.nf_v);
      if (v.certified_bound) verdict["certified_bound"] = *v.certified_bound;
      json result;
      result["verdict"] = verdict;
      result["aliases"] = alias_json(pres);
      return emit(opt, name, result, input_text, t0);
    }
    if (name == "growth" || name == "gkdim") {
      gsb::GrowthReport gr = gsb::gkdim_report(
          pres, sys, std::nullopt,
          name == "growth" ? opt.count_to : std::size_t{60},
          opt.caps.state_cap);
      json result = classification_json(gr.classification);
      result["validity"] = validity_name(gr.validity);
      if (gr.sandwich_factor) result["sandwich_factor"] = *gr.sandwich_factor;
      if (name == "growth") {
        result["per_length"] = decimal_strings(gr.per_length);
        result["counts"] = decimal_strings(gr.counts);
      }
      return emit(opt, name, result, input_text, t0);
    }
    if (name == "filtration") {
      gsb::FiltrationTable table =
          gsb::dim_filtration(pres, sys, opt.filtration_n, opt.caps.step_budget);
      json result;
      result["d_A"] = decimal_strings(table.d_A);
      result["d_tilde"] = decimal_strings(table.d_tilde);
      return emit(opt, name, result, input_text, t0);
    }
    if (name == "free-check") {
      std::vector<gsb::Word> gens;
      std::stringstream ss(opt.gens);
      std::string piece;
      while (std::getline(ss, piece, ','))
        if (!piece.empty()) gens.push_back(gsb::word_from_names(alpha, piece));
      gsb::IrrAutomaton aut = gsb::build_irr_automaton(
          gsb::ForbiddenSet::of(sys), pres.alphabet, opt.caps.state_cap);
      gsb::FreeCheckResult fr = gsb::free_submonoid_check(aut, gens);
      json result;
      switch (fr.verdict) {
        case gsb::FreeCheckResult::Verdict::Free:
          result["verdict"] = "Free";
          break;
        case gsb::FreeCheckResult::Verdict::NotCode:
          result["verdict"] = "NotCode";
          break;
        case gsb::FreeCheckResult::Verdict::LeavesIrr:
          result["verdict"] = "LeavesIrr";
          break;
      }
      if (fr.witness) result["witness"] = compact_word(alpha, *fr.witness);
      return emit(opt, name, result, input_text, t0);
    }
    std::cerr << "unknown subcommand\n";
    return 2;
  } catch (const gsb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
