// Command-line front end: algebras, formula checks, countermodels, witnesses
// and the acceptance suite.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brouwer/acceptance/criteria.hpp"
#include "brouwer/core/error.hpp"
#include "brouwer/degrees/analysis.hpp"
#include "brouwer/degrees/degree_structure.hpp"
#include "brouwer/degrees/presentation.hpp"
#include "brouwer/degrees/transfer.hpp"
#include "brouwer/semantics/kripke.hpp"
#include "brouwer/semantics/theory.hpp"
#include "report.hpp"

namespace {

using namespace brouwer;
using cli::Report;
using Element = FiniteBrouwerAlgebra::Element;

constexpr std::size_t kMaxX = 16;

struct Outcome {
  Report report;
  int code = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct LoadedAlgebra {
  FiniteBrouwerAlgebra algebra;
  std::string description;
  std::size_t bn = 0;  // N for bn:N, else 0
};

LoadedAlgebra load_algebra(const std::string& source) {
  const auto colon = source.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::InvalidInput, "--algebra expects bn:N, poset:FILE or degrees:FILE");
  }
  const std::string kind = source.substr(0, colon), arg = source.substr(colon + 1);
  if (kind == "bn") {
    std::size_t n = 0;
    try {
      n = std::stoul(arg);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "--algebra bn:N needs a number, got '" + arg + "'");
    }
    return {build_bn(n), source, n};
  }
  if (kind == "poset") return {upset_brouwer_algebra(parse_poset(read_file(arg)), kDefaultCarrierCap, source), source, 0};
  if (kind == "degrees") {
    const auto d = DegreeStructure::from_presentation(parse_presentation(read_file(arg)));
    return {upset_brouwer_algebra(d.poset(), kDefaultCarrierCap, source), source, 0};
  }
  throw Error(ErrorKind::InvalidInput, "--algebra kind '" + kind + "' is not bn, poset or degrees");
}

Report valuation_report(const FiniteBrouwerAlgebra& alg, const Valuation<Element>& v) {
  Report out = Report::object();
  for (const auto& [name, e] : v) out[name] = alg.label(e);
  return out;
}

Report set_valuation_report(const Poset& p, const std::map<std::string, ElementSet>& v) {
  Report out = Report::object();
  for (const auto& [name, s] : v) out[name] = p.format(s);
  return out;
}

// bn -------------------------------------------------------------------------

Outcome run_bn(std::size_t n) {
  const auto alg = build_bn(n);
  Outcome o{cli::make_report("bn", "ok"), 0};
  o.report["algebra"] = alg.name();
  o.report["carrier_size"] = alg.size();
  o.report["poset_size"] = alg.poset().size();
  o.report["bottom"] = alg.label(alg.bottom());
  o.report["top"] = alg.label(alg.top());
  if (alg.size() <= 64) o.report["elements"] = alg.labels();
  return o;
}

// check ----------------------------------------------------------------------

Outcome run_check(const std::string& text, const std::string& algebra_source, const std::string& factor_label) {
  const Formula phi = parse_formula(text);
  LoadedAlgebra loaded = load_algebra(algebra_source);
  std::optional<Element> x;
  if (!factor_label.empty()) {
    x = loaded.algebra.find_label(factor_label);
    if (!x) throw Error(ErrorKind::UnknownElement, "--factor " + factor_label + " is not an element of " + algebra_source);
  }
  const FiniteBrouwerAlgebra alg = x ? factor_algebra(loaded.algebra, *x) : std::move(loaded.algebra);
  const auto hit = find_refutation(alg, phi);
  Outcome o{cli::make_report("check", hit ? "refuted" : "valid"), hit ? 1 : 0};
  o.report["algebra"] = loaded.description + (x ? " / " + factor_label : "");
  o.report["carrier_size"] = alg.size();
  o.report["formula"] = to_string(phi);
  if (hit) {
    Report cm;
    if (loaded.bn != 0) cm["n"] = loaded.bn;
    cm["x"] = alg.label(alg.top());
    cm["valuation"] = valuation_report(alg, hit->valuation);
    cm["value"] = alg.label(hit->value);
    const Element again = evaluate(alg, phi, hit->valuation);
    cm["verified"] = again == hit->value && again != alg.bottom();
    o.report["countermodel"] = cm;
  }
  return o;
}

// countermodel ---------------------------------------------------------------

Outcome run_countermodel(const std::string& text, std::size_t max_n) {
  const Formula phi = parse_formula(text);
  const auto cm = countermodel_search(phi, max_n);
  Outcome o{cli::make_report("countermodel", cm ? "refuted" : "not refuted"), cm ? 1 : 0};
  o.report["formula"] = to_string(phi);
  o.report["max_n"] = max_n;
  if (!cm) return o;
  const Poset p = subset_poset(cm->n);
  o.report["algebra"] = "bn:" + std::to_string(cm->n) + " / " + p.format(cm->x);
  o.report["carrier_size"] = factor_algebra(build_bn(cm->n), *build_bn(cm->n).find(cm->x)).size();
  Report c;
  c["n"] = cm->n;
  c["x"] = p.format(cm->x);
  c["valuation"] = set_valuation_report(p, cm->valuation);
  c["value"] = p.format(cm->value);
  if (!cm->fresh.empty()) {
    c["positive_formula"] = to_string(cm->positive);
    c["fresh_variable"] = cm->fresh;
  }
  c["verified"] = verify_countermodel(phi, *cm);
  o.report["countermodel"] = c;
  return o;
}

// oracle ---------------------------------------------------------------------

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

Outcome run_oracle(const std::string& text, std::size_t max_worlds) {
  const Formula phi = parse_formula(text);
  const auto km = kripke_ipc_oracle(phi, max_worlds);
  Outcome o{cli::make_report("oracle", km ? "refuted" : "not refuted"), km ? 1 : 0};
  o.report["formula"] = to_string(phi);
  o.report["max_worlds"] = max_worlds;
  if (!km) return o;
  Report frame;
  frame["worlds"] = km->frame.size();
  frame["poset"] = lines(format_poset(km->frame));
  o.report["frame"] = frame;
  o.report["valuation"] = set_valuation_report(km->frame, km->valuation);
  o.report["forced_at"] = km->frame.format(km->forcing);
  o.report["failing_world"] = km->frame.name(km->failing_world);
  return o;
}

// witness --------------------------------------------------------------------

IndexSet parse_index_set(const std::string& flag, std::string text, std::size_t n) {
  std::erase_if(text, [](char c) { return c == '{' || c == '}' || c == ' '; });
  IndexSet out = 0;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    std::size_t i = 0;
    try {
      std::size_t used = 0;
      i = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, flag + " expects indices like 1,2 and got '" + item + "'");
    }
    if (i < 1 || i > n) throw Error(ErrorKind::InvalidConfig, flag + " index " + item + " is outside 1.." + std::to_string(n));
    out |= IndexSet{1} << (i - 1);
  }
  return out;
}

Report embedding_report(const EmbeddingReport& e) {
  Report r;
  r["injective"] = e.injective;
  r["preserves_join"] = e.preserves_join;
  r["preserves_implication"] = e.preserves_implication;
  r["preserves_bounds"] = e.preserves_bounds;
  if (e.counterexample) {
    r["counterexample"] = format_index_set(e.counterexample->x) + " " + format_index_set(e.counterexample->y) +
                          ": " + e.counterexample->details;
  }
  return r;
}

Outcome run_witness(std::size_t n, std::size_t k, const std::vector<std::optional<std::string>>& xs,
                    std::size_t relativized, const std::string& formula) {
  WitnessConfig cfg;
  cfg.n = n;
  cfg.k = k;
  if (k < 1 || k > kMaxX) throw Error(ErrorKind::InvalidConfig, "--k must be in 1.." + std::to_string(kMaxX));
  for (std::size_t j = 0; j < kMaxX; ++j) {
    const std::string flag = "--X" + std::to_string(j + 1);
    if (j < k && !xs[j]) throw Error(ErrorKind::InvalidConfig, flag + " is required when --k is " + std::to_string(k));
    if (j >= k && xs[j]) throw Error(ErrorKind::InvalidConfig, flag + " given but --k is " + std::to_string(k));
    if (j < k) cfg.X.push_back(parse_index_set(flag, *xs[j], n));
  }
  cfg.validate();
  const Witness w = relativized > 0 ? build_relativized_witness(cfg, relativized) : build_main_witness(cfg);
  const auto a = analyze_witness(w);

  bool finding = !a.ok();
  std::string status = a.ok() ? "equal" : "unequal";
  Report r;
  r["config"] = cfg.describe();
  r["relativized"] = relativized;
  r["degrees"] = a.degree_count;
  r["strong_antichain"] = a.antichain;
  r["upset_embedding"] = embedding_report(a.upset_embedding);
  r["hull_embedding"] = embedding_report(a.hull_embedding);
  r["canonical"] = {{"meet_irreducible", a.canonical.meet_irreducible},
                    {"closed", a.canonical.closed},
                    {"distributive", a.canonical.distributive}};
  if (!a.canonical.detail.empty()) r["canonical"]["detail"] = a.canonical.detail;
  r["interval_size"] = a.interval_size;
  r["whole_interval"] = a.whole_interval;
  r["generated_size"] = a.generated_size;
  r["isomorphic_to_bn"] = a.isomorphic_to_bn;
  r["equation"] = {{"kind", relativized > 0 ? "relativized" : "main"},
                   {"equal", a.equation.equal},
                   {"equal_collapsed", a.equation.equal_collapsed}};
  r["equation_diff"] = a.equation.diff;
  if (!a.failure.empty()) r["failure"] = a.failure;

  if (!formula.empty()) {
    const Formula phi = parse_formula(formula);
    const auto bn = build_bn(n);
    const ElementSet x = factor_of_config(cfg);
    const auto factor = factor_algebra(bn, *bn.find(x));
    const auto hit = find_refutation(factor, phi);
    Report f;
    f["formula"] = to_string(phi);
    f["algebra"] = "bn:" + std::to_string(n) + " / " + factor.label(factor.top());
    f["carrier_size"] = factor.size();
    if (hit) {
      std::map<std::string, ElementSet> valuation;
      for (const auto& [name, e] : hit->valuation) valuation.emplace(name, factor.mask(e));
      const auto t = transfer_refutation(phi, cfg, valuation);
      f["countermodel"] = {{"n", n},
                           {"x", factor.label(factor.top())},
                           {"valuation", valuation_report(factor, hit->valuation)},
                           {"value", factor.label(hit->value)}};
      f["transfer"] = {{"hull_elements", t.closure_size},
                       {"isomorphism", t.isomorphism_ok},
                       {"gamma_homomorphism", t.gamma.all_pass()},
                       {"valuation", t.valuation},
                       {"value", t.value},
                       {"value_transported", t.value_transported},
                       {"refuted", t.refuted}};
      if (!t.gamma.counterexample.empty()) f["transfer"]["gamma_counterexample"] = t.gamma.counterexample;
      f["status"] = t.ok() ? "refuted" : "transfer failed";
      finding = true;
      if (a.ok()) status = t.ok() ? "refuted" : "transfer failed";
    } else {
      f["status"] = "valid";
    }
    r["formula"] = f;
  }
  Outcome o{cli::make_report("witness", status), finding ? 1 : 0};
  o.report.update(r);
  return o;
}

// suite ----------------------------------------------------------------------

Outcome run_suite(const std::vector<int>& only) {
  const auto results = acceptance::run_criteria(only);
  bool all = true;
  Report list = Report::array();
  for (const auto& c : results) {
    all = all && c.passed;
    list.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Outcome o{cli::make_report("suite", all ? "pass" : "fail"), all ? 0 : 1};
  o.report["criteria"] = list;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Brouwer algebras, intuitionistic formulas and simulated mass problems"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the structured report as JSON");

  auto* bn = app.add_subcommand("bn", "Summarize the algebra Bn");
  std::size_t bn_n = 0;
  bn->add_option("N", bn_n, "n")->required();

  auto* check = app.add_subcommand("check", "Look for a valuation refuting a formula in a finite algebra");
  std::string check_formula, algebra, factor;
  check->add_option("FORMULA", check_formula)->required();
  check->add_option("--algebra", algebra, "bn:N, poset:FILE or degrees:FILE")->required();
  check->add_option("--factor", factor, "Element label x: check in the factor [0, x]");

  auto* cm = app.add_subcommand("countermodel", "Search B1..Bn factors for a countermodel");
  std::string cm_formula;
  std::size_t max_n = 3;
  cm->add_option("FORMULA", cm_formula)->required();
  cm->add_option("--max-n", max_n, "Largest n to try")->check(CLI::Range(1, 4));

  auto* oracle = app.add_subcommand("oracle", "Search Kripke frames for a countermodel");
  std::string oracle_formula;
  std::size_t max_worlds = 5;
  oracle->add_option("FORMULA", oracle_formula)->required();
  oracle->add_option("--max-worlds", max_worlds, "Largest frame to try")->check(CLI::Range(1, 7));

  auto* witness = app.add_subcommand("witness", "Build and verify a witness degree structure");
  std::size_t wn = 0, wk = 0, relativized = 0;
  std::string witness_formula;
  std::vector<std::optional<std::string>> xs(kMaxX);
  std::vector<std::string> x_values(kMaxX);
  std::vector<CLI::Option*> x_options;
  witness->add_option("--n", wn, "Antichain size")->required();
  witness->add_option("--k", wk, "Number of subsets X1..Xk")->required();
  for (std::size_t j = 0; j < kMaxX; ++j) {
    x_options.push_back(witness->add_option("--X" + std::to_string(j + 1), x_values[j],
                                            "Subset X" + std::to_string(j + 1) + " of {1..n}, e.g. 1,2"));
  }
  witness->add_option("--formula", witness_formula, "Refute this formula in the simulated factor");
  witness->add_option("--relativized", relativized, "Number of extra E generators")->check(CLI::Range(0, 4));

  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  std::vector<int> only;
  suite->add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome o;
    if (*bn) {
      o = run_bn(bn_n);
    } else if (*check) {
      o = run_check(check_formula, algebra, factor);
    } else if (*cm) {
      o = run_countermodel(cm_formula, max_n);
    } else if (*oracle) {
      o = run_oracle(oracle_formula, max_worlds);
    } else if (*witness) {
      for (std::size_t j = 0; j < kMaxX; ++j) {
        if (x_options[j]->count() > 0) xs[j] = x_values[j];
      }
      o = run_witness(wn, wk, xs, relativized, witness_formula);
    } else {
      o = run_suite(only);
    }
    std::cout << cli::render(o.report, json);
    return o.code;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
