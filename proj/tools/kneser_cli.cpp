// Command-line surface for the kneser toolkit: generate the named extremal
// families, check forbidden-subgraph freeness, compute invariants, evaluate
// closed-form bounds, run exact searches, and drive the acceptance grid.
//
// Machine-readable JSON goes to stdout, prose to stderr.  Exit codes:
// 0 success, 2 meaningful negative (a forbidden copy / constraint violation
// was found), 1 usage or input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kneser/bounds.hpp"
#include "kneser/constructions.hpp"
#include "kneser/invariants.hpp"
#include "kneser/report.hpp"
#include "kneser/search.hpp"
#include "kneser/subgraph.hpp"
#include "kneser/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kneser::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

kneser::Family load_family(const std::string& path) {
  return kneser::Family::from_text(read_file(path));
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

bool g_validate_reports = false;  // --json: refuse to print a malformed report

void emit(const std::string& command, const std::string& inputs, json results, const Timer& timer) {
  json report = kneser::make_report(command, inputs, std::move(results), timer.ms());
  if (g_validate_reports && !kneser::report_schema_valid(report))
    throw kneser::Error("internal: report violates docs/report.schema.json");
  std::cout << report.dump(2) << "\n";
}

json family_json(const kneser::Family& f) { return f.to_json(); }

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(std::stoi(item));
  return parts;
}

// --- gen ---------------------------------------------------------------------

int cmd_gen(const std::string& kind_name, int n, int k, int s, int t, int chi,
            const std::string& parts_text, const std::string& base_path,
            const std::string& output_path) {
  Timer timer;
  kneser::ConstructionSpec spec;
  spec.kind = kneser::parse_construction_kind(kind_name);
  spec.n = n;
  spec.k = k;
  spec.s = s;
  spec.t = t;
  spec.chi = chi;
  if (!parts_text.empty()) spec.parts = parse_parts(parts_text);

  mpz_class expected;
  kneser::Family family = [&] {
    if (spec.kind == kneser::ConstructionKind::Chi3Compose) {
      if (base_path.empty()) throw kneser::Error("compose needs --base <family file>");
      kneser::Family base = load_family(base_path);
      expected = kneser::compose_expected_size(n, base.set_size(), chi, base.size());
      return kneser::compose_chi3(base, chi, n);
    }
    expected = kneser::construction_expected_size(spec);
    return kneser::generate(spec);
  }();

  json results{{"kind", kneser::construction_kind_name(spec.kind)},
               {"n", n},
               {"k", family.set_size()},
               {"expected_size", expected.get_str()},
               {"actual_size", family.size()}};
  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw kneser::Error("cannot write " + output_path);
    out << family.to_text();
    results["output"] = output_path;
  } else {
    results["family"] = family_json(family);
  }
  std::string inputs = kind_name + " " + std::to_string(n) + " " + std::to_string(k) + " " +
                       std::to_string(s) + " " + std::to_string(t) + " " + parts_text;
  emit("gen", inputs, results, timer);
  if (mpz_class(family.size()) != expected) {
    std::cerr << "generated size disagrees with the closed form\n";
    return kExitError;
  }
  return kExitOk;
}

// --- check ---------------------------------------------------------------------

int cmd_check(const std::string& pattern_text, const std::string& family_path) {
  Timer timer;
  std::string content = read_file(family_path);
  kneser::Family family = kneser::Family::from_text(content);
  kneser::PatternGraph pattern = kneser::parse_pattern(pattern_text);
  kneser::SubgraphResult hit = kneser::contains_subgraph(kneser::induced_kneser_graph(family),
                                                         pattern);
  json results{{"pattern", pattern.to_string()},
               {"family_size", family.size()},
               {"free", !hit.found()}};
  if (hit.pattern_larger_than_host) results["pattern_larger_than_host"] = true;
  if (hit.found()) results["witness"] = hit.witness->mapping;
  emit("check", content, results, timer);
  std::cerr << (hit.found() ? "copy found\n" : "free\n");
  return hit.found() ? kExitViolation : kExitOk;
}

// --- ell ------------------------------------------------------------------------

int cmd_ell(int t, const std::string& family_path) {
  Timer timer;
  std::string content = read_file(family_path);
  kneser::Family family = kneser::Family::from_text(content);
  kneser::EllResult r = kneser::ell(family, t);
  json results{{"value", r.value}, {"witness", r.removal_witness}};
  if (!r.proven) {
    results["proven"] = false;
    results["lower_bound"] = r.lower_bound;
    results["upper_bound"] = r.upper_bound;
  }
  emit("ell", content, results, timer);
  return kExitOk;
}

// --- eta ------------------------------------------------------------------------

int cmd_eta(const std::string& pattern_text) {
  Timer timer;
  kneser::PatternGraph pattern = kneser::parse_pattern(pattern_text);
  kneser::ChromaticProfile prof = kneser::chromatic_profile(pattern);
  json results{{"pattern", pattern.to_string()},
               {"chi", prof.chi},
               {"eta", prof.eta},
               {"witness_coloring", prof.witness_coloring}};
  emit("eta", pattern_text, results, timer);
  return kExitOk;
}

// --- bound ----------------------------------------------------------------------

int cmd_bound(const std::string& name, long n, long k, long s, long t,
              long chi, long eta, long ell_value, long vertices,
              const std::string& parts_text) {
  Timer timer;
  kneser::BoundValue value = [&]() -> kneser::BoundValue {
    if (name == "at") return kneser::at_bound(n, k, chi, eta);
    if (name == "hm") return kneser::hm_bound(n, k);
    if (name == "stabst") return kneser::stabst_bound(n, k, s, t);
    if (name == "stabmulti") {
      std::vector<int> p = parse_parts(parts_text);
      return kneser::stabmulti_bound(n, k, std::vector<long>(p.begin(), p.end()));
    }
    if (name == "cycle6") return kneser::cycle6_bound(n, k);
    if (name == "cycles") return kneser::cycles_bound(n, k, s);
    if (name == "easy") return kneser::easy_lemma_bound(n, k, s, t);
    if (name == "bbn") return kneser::bbn_lower_edges(mpz_class(static_cast<long>(ell_value)), k);
    if (name == "bs") return kneser::bs_edge_bound(vertices, s);
    if (name == "kst") return kneser::kst_edge_bound(vertices, s, t);
    throw kneser::Error("unknown bound tag: " + name +
                        " (expected at|hm|stabst|stabmulti|cycle6|cycles|easy|bbn|bs|kst)");
  }();
  std::string inputs = name + " n=" + std::to_string(n) + " k=" + std::to_string(k);
  emit("bound", inputs, value.to_json(), timer);
  return kExitOk;
}

// --- search ---------------------------------------------------------------------

int cmd_search(int n, int k, const std::string& pattern_text, bool no_common_element,
               const std::string& min_ell_text, std::uint64_t budget) {
  Timer timer;
  kneser::SearchProblem problem;
  problem.n = n;
  problem.k = k;
  problem.pattern = kneser::parse_pattern(pattern_text);
  problem.budget = budget;
  if (no_common_element && !min_ell_text.empty())
    throw kneser::Error("choose at most one side constraint");
  if (no_common_element) problem.constraint = kneser::SideConstraint::NoCommonElement;
  if (!min_ell_text.empty()) {
    auto colon = min_ell_text.find(':');
    if (colon == std::string::npos) throw kneser::Error("--min-ell expects t:s");
    problem.constraint = kneser::SideConstraint::MinEll;
    problem.min_ell_t = std::stoi(min_ell_text.substr(0, colon));
    problem.min_ell_s = std::stoi(min_ell_text.substr(colon + 1));
  }
  kneser::SearchOutcome outcome = kneser::max_f_free(problem);
  json results{{"optimum", outcome.optimum},
               {"status", outcome.proven ? "proven" : "budget_exhausted"},
               {"lower_bound", outcome.lower_bound},
               {"upper_bound", outcome.upper_bound},
               {"nodes", outcome.nodes},
               {"witness", family_json(outcome.witness)}};
  std::string inputs = std::to_string(n) + " " + std::to_string(k) + " " + pattern_text;
  emit("search", inputs, results, timer);
  return kExitOk;
}

// --- verify ---------------------------------------------------------------------

int cmd_verify(const std::string& filter, std::uint64_t seed) {
  kneser::VerifyOptions options;
  options.filter = filter;
  options.seed = seed;
  int failed = kneser::print_acceptance(std::cout, options);
  return failed == 0 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex Turán toolkit for Kneser graphs"};
  app.require_subcommand(1);
  app.add_flag("--json", g_validate_reports, "validate every report against the schema");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named extremal family");
  std::string gen_kind, gen_parts, gen_base, gen_output;
  int gen_n = 0, gen_k = 0, gen_s = 0, gen_t = 0, gen_chi = 3;
  gen->add_option("--kind", gen_kind, "hm|f_st|f_multi|g6|g2s|g2s_plus|compose")->required();
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--k", gen_k);
  gen->add_option("--s", gen_s);
  gen->add_option("--t", gen_t);
  gen->add_option("--chi", gen_chi);
  gen->add_option("--parts", gen_parts, "comma-separated, non-increasing");
  gen->add_option("--base", gen_base, "base family file (compose)");
  gen->add_option("-o,--output", gen_output, "family file destination");

  // check
  auto* check = app.add_subcommand("check", "test a family for forbidden-subgraph freeness");
  std::string check_pattern, check_file;
  check->add_option("--pattern", check_pattern, "pattern literal")->required();
  check->add_option("family", check_file, "family file")->required();

  // ell
  auto* ellcmd = app.add_subcommand("ell", "minimum removals leaving no t pairwise disjoint sets");
  std::string ell_file;
  int ell_t = 2;
  ellcmd->add_option("--t", ell_t);
  ellcmd->add_option("family", ell_file, "family file")->required();

  // eta
  auto* eta = app.add_subcommand("eta", "chromatic number and minimum color-class size");
  std::string eta_pattern;
  eta->add_option("pattern", eta_pattern, "pattern literal")->required();

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound");
  std::string bound_name, bound_parts;
  long b_n = 0, b_k = 0, b_s = 0, b_t = 0, b_chi = 0, b_eta = 0, b_ell = 0, b_vertices = 0;
  bound->add_option("--name", bound_name)->required();
  bound->add_option("--n", b_n);
  bound->add_option("--k", b_k);
  bound->add_option("--s", b_s);
  bound->add_option("--t", b_t);
  bound->add_option("--chi", b_chi);
  bound->add_option("--eta", b_eta);
  bound->add_option("--ell", b_ell);
  bound->add_option("--vertices", b_vertices);
  bound->add_option("--parts", bound_parts);

  // search
  auto* search = app.add_subcommand("search", "maximum pattern-free vertex subset of K(n,k)");
  std::string search_pattern = "K2", search_min_ell;
  int search_n = 0, search_k = 0;
  bool search_no_common = false;
  std::uint64_t search_budget = kneser::kDefaultSearchBudget;
  search->add_option("--n", search_n)->required();
  search->add_option("--k", search_k)->required();
  search->add_option("--pattern", search_pattern);
  search->add_flag("--no-common-element", search_no_common);
  search->add_option("--min-ell", search_min_ell, "t:s  (require ell_t >= s)");
  search->add_option("--budget", search_budget);

  // verify
  auto* verify = app.add_subcommand("verify", "run the full verification grid");
  std::string verify_filter;
  std::uint64_t verify_seed = kneser::VerifyOptions{}.seed;
  verify->add_option("--filter", verify_filter, "run only matching rows");
  verify->add_option("--seed", verify_seed, "seed for the randomized rows");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_n, gen_k, gen_s, gen_t, gen_chi, gen_parts, gen_base,
                     gen_output);
    if (check->parsed()) return cmd_check(check_pattern, check_file);
    if (ellcmd->parsed()) return cmd_ell(ell_t, ell_file);
    if (eta->parsed()) return cmd_eta(eta_pattern);
    if (bound->parsed())
      return cmd_bound(bound_name, b_n, b_k, b_s, b_t, b_chi, b_eta, b_ell, b_vertices,
                       bound_parts);
    if (search->parsed())
      return cmd_search(search_n, search_k, search_pattern, search_no_common, search_min_ell,
                        search_budget);
    if (verify->parsed()) return cmd_verify(verify_filter, verify_seed);
  } catch (const kneser::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
