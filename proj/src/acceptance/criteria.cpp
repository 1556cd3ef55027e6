#include "brouwer/acceptance/criteria.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "brouwer/core/error.hpp"
#include "brouwer/degrees/analysis.hpp"
#include "brouwer/degrees/degree_structure.hpp"
#include "brouwer/degrees/presentation.hpp"
#include "brouwer/degrees/transfer.hpp"
#include "brouwer/semantics/evaluate.hpp"
#include "brouwer/semantics/kripke.hpp"
#include "brouwer/semantics/theory.hpp"

namespace brouwer::acceptance {

namespace {

using Element = FiniteBrouwerAlgebra::Element;

struct Outcome {
  bool passed = false;
  std::string detail;
};

constexpr std::size_t kFamilyCarrier = 64;

std::string fraction(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& by) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      const auto it = by.find(f.name());
      return it == by.end() ? f : it->second;
    }
    case Formula::Kind::Bottom:
      return f;
    case Formula::Kind::And:
      return Formula::conj(substitute(f.left(), by), substitute(f.right(), by));
    case Formula::Kind::Or:
      return Formula::disj(substitute(f.left(), by), substitute(f.right(), by));
    case Formula::Kind::Implies:
      return Formula::implies(substitute(f.left(), by), substitute(f.right(), by));
  }
  return f;
}

// 1 -------------------------------------------------------------------------

Outcome laws() {
  std::size_t failures = 0;
  std::size_t triples = 0;
  std::string first;
  const std::size_t count = for_each_family_algebra([&](const FiniteBrouwerAlgebra& alg) {
    const auto r = check_brouwer_laws(alg);
    triples += r.triples_checked;
    if (!r.ok) {
      if (failures++ == 0) first = alg.name() + ": " + r.failure;
    }
  });
  std::string detail = fraction(count - failures, count) + " algebras satisfy every law (" +
                       std::to_string(triples) + " triples)";
  if (failures != 0) detail += "; first failure " + first;
  return {failures == 0, detail};
}

// 2 -------------------------------------------------------------------------

// Counts families of nonempty subsets of {1..n} closed under nonempty
// subsets, straight from the definition.
std::size_t brute_force_bn_size(std::size_t n) {
  const std::size_t subsets = (std::size_t{1} << n) - 1;
  std::size_t count = 0;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    bool closed = true;
    for (std::size_t s = 1; s <= subsets && closed; ++s) {
      if (!((family >> (s - 1)) & 1U)) continue;
      for (std::size_t t = 1; t <= subsets; ++t) {
        if ((t & ~s) == 0 && !((family >> (t - 1)) & 1U)) {
          closed = false;
          break;
        }
      }
    }
    count += closed;
  }
  return count;
}

Outcome carrier_counts() {
  const std::size_t b1 = build_bn(1).size(), b2 = build_bn(2).size(), b3 = build_bn(3).size();
  const std::size_t oracle = brute_force_bn_size(3);
  std::ostringstream out;
  out << "|B1|=" << b1 << " |B2|=" << b2 << " |B3|=" << b3 << " (brute force " << oracle << ")";
  return {b1 == 2 && b2 == 5 && b3 == oracle, out.str()};
}

// 3 -------------------------------------------------------------------------

std::vector<Formula> axiom_instances() {
  const std::vector<std::string> vars{"p", "q"};
  std::vector<Formula> out;
  std::uint64_t seed = 1;
  for (const auto& scheme : ipc_axiom_schemes()) {
    for (std::size_t t = 0; t < 20; ++t) {
      const Formula a = sample_formula(seed++, t % 3, vars);
      const Formula b = sample_formula(seed++, (t + 1) % 3, vars);
      const Formula c = sample_formula(seed++, (t + 2) % 3, vars);
      out.push_back(instantiate(scheme, a, b, c));
    }
  }
  return out;
}

Outcome soundness() {
  const auto instances = axiom_instances();
  std::vector<CompiledFormula> code;
  for (const auto& f : instances) code.emplace_back(f);
  std::size_t failures = 0;
  std::string first;
  const std::size_t count = for_each_family_algebra([&](const FiniteBrouwerAlgebra& alg) {
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (!in_theory(alg, code[i])) {
        if (failures++ == 0) first = to_string(instances[i]) + " fails in " + alg.name();
      }
    }
  });
  std::string detail = std::to_string(instances.size()) + " axiom instances on " + std::to_string(count) +
                       " algebras, " + std::to_string(failures) + " failures";
  if (failures != 0) detail += "; first: " + first;
  return {failures == 0, detail};
}

// 4 -------------------------------------------------------------------------

Outcome countermodels() {
  bool ok = true;
  std::string detail;
  for (const auto& phi : refutable_formulas()) {
    const auto cm = countermodel_search(phi, 3);
    const bool verified = cm && verify_countermodel(phi, *cm);
    const auto kripke = kripke_ipc_oracle(phi, 3);
    ok = ok && verified && kripke;
    if (!detail.empty()) detail += "; ";
    detail += to_string(phi) + ": " +
              (cm ? "B" + std::to_string(cm->n) + (verified ? " countermodel" : " countermodel fails to verify")
                  : std::string("no countermodel")) +
              (kripke ? ", Kripke frame of " + std::to_string(kripke->frame.size()) + " worlds"
                      : std::string(", no Kripke countermodel"));
  }
  return {ok, detail};
}

// 5 -------------------------------------------------------------------------

Outcome weak_excluded_middle() {
  const Formula wlem = parse_formula("~p | ~~p");
  std::size_t holds = 0, total = 0, largest = 0;
  for (const auto& p : enumerate_small_presentations(4)) {
    const auto d = DegreeStructure::from_presentation(p);
    const auto alg = muchnik_algebra(d);
    largest = std::max(largest, alg.size());
    ++total;
    holds += in_theory(alg, wlem);
  }
  const auto cm = countermodel_search(wlem, 3);
  const bool refuted = cm && verify_countermodel(wlem, *cm);
  std::string detail = "valid in " + fraction(holds, total) + " muchnik algebras (largest carrier " +
                       std::to_string(largest) + "); ";
  detail += refuted ? "refuted in B" + std::to_string(cm->n) + " factor" : "no finite refutation";
  return {holds == total && refuted, detail};
}

// 6-8 helpers ---------------------------------------------------------------

struct MutationFlags {
  bool antichain = true;
  bool upset = true;
  bool hull = true;
};

MutationFlags embedding_flags(const Witness& w) {
  MutationFlags f;
  try {
    f.antichain = is_strong_antichain(w.degrees, w.ambient, w.D);
  } catch (const Error&) {
    f.antichain = false;
  }
  const AlphaMap alpha = w.alpha();
  const std::size_t n = w.cfg.n;
  const IndexSet full = full_index_set(n);
  const TaggedUnionSpace space(w.degrees.poset());
  f.upset = verify_usl_embedding(alpha, n, UpSetSpace(w.degrees.poset()), alpha(full), alpha(0)).all();
  auto tagged = [&](IndexSet x) { return alpha.tagged(x); };
  f.hull = verify_usl_embedding(tagged, n, space, tagged(full), tagged(0)).all();
  return f;
}

// A mutation is caught when the antichain breaks or the equation changes.
bool mutation_caught(const WitnessConfig& cfg, std::size_t m, const Presentation& p) {
  const Witness w = assemble_witness(cfg, m, p);
  try {
    if (!is_strong_antichain(w.degrees, w.ambient, w.D)) return true;
    const auto eq = m > 0 ? check_relativized_equation(w, w.e_problem(), w.b_problem()) : check_main_equation(w);
    return !eq.diff.empty();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::AntichainViolated || e.kind() == ErrorKind::MemberOutsideAmbient;
  }
}

// 6 -------------------------------------------------------------------------

Outcome embedding() {
  std::size_t passing = 0, sensitive = 0, mutations = 0, flipped = 0;
  std::string first_fail, first_insensitive;
  const auto configs = sampled_configs();
  for (const auto& cfg : configs) {
    const Witness w = build_main_witness(cfg);
    const auto a = analyze_witness(w);
    if (a.failure.empty() && a.antichain && a.upset_embedding.all() && a.hull_embedding.all()) {
      ++passing;
    } else if (first_fail.empty()) {
      first_fail = cfg.describe();
    }
    bool any = false;
    for (std::size_t t = 0; t < w.presentation.triggers.size(); ++t) {
      const Witness mutated = assemble_witness(cfg, 0, w.presentation.without_trigger(t));
      const auto f = embedding_flags(mutated);
      ++mutations;
      if (!f.antichain || !f.upset || !f.hull) {
        ++flipped;
        any = true;
      }
    }
    if (any) {
      ++sensitive;
    } else if (first_insensitive.empty()) {
      first_insensitive = cfg.describe();
    }
  }
  std::string detail = "embedding flags pass on " + fraction(passing, configs.size()) + " configs; " +
                       "mutation-sensitive configs " + fraction(sensitive, configs.size()) + " (" +
                       fraction(flipped, mutations) + " single-trigger deletions flip a flag)";
  if (!first_fail.empty()) detail += "; first failing config " + first_fail;
  if (!first_insensitive.empty()) detail += "; first insensitive config " + first_insensitive;
  return {passing == configs.size() && sensitive == configs.size(), detail};
}

// 7 -------------------------------------------------------------------------

Outcome canonicity() {
  std::size_t passing = 0;
  std::string first_fail;
  const auto configs = sampled_configs();
  for (const auto& cfg : configs) {
    const auto a = analyze_witness(build_main_witness(cfg));
    const bool ok = a.failure.empty() && a.canonical.ok() && a.generated_size == build_bn(cfg.n).size() &&
                    a.isomorphic_to_bn;
    if (ok) {
      ++passing;
    } else if (first_fail.empty()) {
      first_fail = cfg.describe() + (a.failure.empty() ? " " + a.canonical.detail : " " + a.failure);
    }
  }
  std::string detail = "canonical range, |generated| = |Bn| and isomorphism on " +
                       fraction(passing, configs.size()) + " configs";
  if (!first_fail.empty()) detail += "; first failure " + first_fail;
  return {passing == configs.size(), detail};
}

// 8 -------------------------------------------------------------------------

Outcome equations() {
  const auto configs = sampled_configs();
  std::size_t main_equal = 0, rel_equal = 0, mutations = 0, caught = 0;
  std::string first_missed;
  auto mutate_all = [&](const WitnessConfig& cfg, std::size_t m, const Presentation& p) {
    for (std::size_t t = 0; t < p.triggers.size(); ++t) {
      ++mutations;
      if (mutation_caught(cfg, m, p.without_trigger(t))) {
        ++caught;
      } else if (first_missed.empty()) {
        first_missed = cfg.describe() + " m=" + std::to_string(m) + " without jump " + p.triggers[t][0] + " " +
                       p.triggers[t][1];
      }
    }
  };
  for (const auto& cfg : configs) {
    const Witness w = build_main_witness(cfg);
    const auto eq = check_main_equation(w);
    main_equal += eq.equal && eq.equal_collapsed;
    mutate_all(cfg, 0, w.presentation);
  }
  const std::size_t relativized = 20;
  for (std::size_t i = 0; i < relativized; ++i) {
    const Witness w = build_relativized_witness(configs[i], 1);
    const auto eq = check_relativized_equation(w, w.e_problem(), w.b_problem());
    rel_equal += eq.equal && eq.equal_collapsed;
    mutate_all(configs[i], 1, w.presentation);
  }
  std::string detail = "main equation " + fraction(main_equal, configs.size()) + ", relativized " +
                       fraction(rel_equal, relativized) + ", mutations caught " + fraction(caught, mutations);
  if (!first_missed.empty()) detail += "; first missed: " + first_missed;
  return {main_equal == configs.size() && rel_equal == relativized && caught == mutations, detail};
}

// 9 -------------------------------------------------------------------------

Outcome transfer() {
  bool ok = true;
  std::string detail;
  for (const auto& phi : refutable_formulas()) {
    const auto start = std::chrono::steady_clock::now();
    std::string line = to_string(phi) + ": ";
    try {
      const auto cm = countermodel_search(phi, 3);
      if (!cm) throw Error(ErrorKind::InvalidInput, "no countermodel");
      const auto r = transfer_countermodel(phi, *cm);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool good = r.ok() && seconds < 60;
      ok = ok && good;
      line += std::string(good ? "refuted" : "FAILED") + " in [0, columns] of " + r.cfg.describe() + " (" +
              std::to_string(r.closure_size) + " hull elements, gamma " + (r.gamma.all_pass() ? "ok" : "fails") +
              ")";
    } catch (const Error& e) {
      ok = false;
      line += e.what();
    }
    detail += (detail.empty() ? "" : "; ") + line;
  }
  return {ok, detail};
}

// 10 ------------------------------------------------------------------------

Outcome positive_fragment() {
  std::mt19937_64 rng(10);
  const std::vector<std::string> vars{"p", "q", "r"};
  std::vector<Formula> formulas;
  for (std::uint64_t seed = 1; formulas.size() < 100; ++seed) {
    Formula f = sample_formula(seed, 1 + seed % 6, vars);
    if (is_positive(f)) formulas.push_back(std::move(f));
  }
  std::vector<FiniteBrouwerAlgebra> ambients;
  for (const auto& p : enumerate_small_presentations(4)) {
    auto alg = muchnik_algebra(DegreeStructure::from_presentation(p));
    if (alg.size() >= 6 && alg.size() <= 256) ambients.push_back(std::move(alg));
  }
  std::size_t comparisons = 0, mismatches = 0, proper = 0;
  for (std::size_t s = 0; s < 10; ++s) {
    const auto& ambient = ambients[rng() % ambients.size()];
    std::vector<Element> gens{ambient.bottom()};
    for (std::size_t g = 0; g < 2; ++g) gens.push_back(rng() % ambient.size());
    const auto sub = closure_subalgebra(ambient, gens);
    proper += sub.size() < ambient.size();
    const auto& up = sub.parent_index();
    for (const auto& f : formulas) {
      const CompiledFormula code(f);
      const std::size_t k = code.vars().size();
      std::vector<Element> local(k), global(k);
      for (std::size_t trial = 0; trial < 50; ++trial) {
        for (std::size_t i = 0; i < k; ++i) {
          local[i] = rng() % sub.size();
          global[i] = up[local[i]];
        }
        ++comparisons;
        if (up[code.run(sub, local)] != code.run(ambient, global)) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(comparisons) + " evaluations on 10 sub-collections (" +
                               std::to_string(proper) + " proper), " + std::to_string(mismatches) + " mismatches"};
}

// 11 ------------------------------------------------------------------------

Outcome kripke_agreement() {
  std::mt19937_64 rng(11);
  std::vector<std::vector<Poset>> posets{{}};
  for (std::size_t n = 1; n <= 6; ++n) posets.push_back(enumerate_posets(n));
  std::size_t agree = 0;
  std::string first;
  const std::vector<std::string> vars{"p", "q", "r"};
  for (std::size_t t = 0; t < 200; ++t) {
    const auto& bucket = posets[1 + rng() % 6];
    const Poset& frame = bucket[rng() % bucket.size()];
    const auto alg = upset_brouwer_algebra(frame);
    const Formula f = sample_formula(rng(), 1 + rng() % 8, vars);
    std::map<std::string, ElementSet> masks;
    Valuation<Element> v;
    for (const auto& name : vars) {
      const Element e = rng() % alg.size();
      v.emplace(name, e);
      masks.emplace(name, alg.mask(e));
    }
    if (alg.mask(evaluate(alg, f, v)) == forcing_set(frame, f, masks)) {
      ++agree;
    } else if (first.empty()) {
      first = to_string(f) + " on " + std::to_string(frame.size()) + " worlds";
    }
  }
  std::string detail = fraction(agree, 200) + " triples agree";
  if (!first.empty()) detail += "; first disagreement " + first;
  return {agree == 200, detail};
}

struct Entry {
  CriterionInfo info;
  Outcome (*run)();
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {{1, "lattice and adjunction laws", 30}, laws},
      {{2, "carrier counts", 5}, carrier_counts},
      {{3, "IPC soundness", 60}, soundness},
      {{4, "countermodels", 60}, countermodels},
      {{5, "weak excluded middle dichotomy", 60}, weak_excluded_middle},
      {{6, "embedding of subsets", 300}, embedding},
      {{7, "canonical range and free algebra", 300}, canonicity},
      {{8, "main and relativized equations", 300}, equations},
      {{9, "end-to-end transfer", 180}, transfer},
      {{10, "positive fragment preservation", 60}, positive_fragment},
      {{11, "Kripke oracle agreement", 30}, kripke_agreement},
  };
  return list;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list = [] {
    std::vector<CriterionInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return list;
}

CriterionResult run_criterion(int id) {
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.title = e.info.title;
    r.limit_seconds = e.info.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("threw: ") + ex.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.passed && r.seconds <= r.limit_seconds;
    r.detail = o.detail;
    if (o.passed && !r.passed) r.detail += "; over the time limit";
    return r;
  }
  throw Error(ErrorKind::InvalidInput, "no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (only.empty() || std::find(only.begin(), only.end(), c.id) != only.end()) out.push_back(run_criterion(c.id));
  }
  for (int id : only) {
    if (id < 1 || id > static_cast<int>(criteria().size())) throw Error(ErrorKind::InvalidInput, "no criterion " + std::to_string(id));
  }
  return out;
}

std::vector<FiniteBrouwerAlgebra> base_family() {
  std::vector<FiniteBrouwerAlgebra> out;
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(build_bn(n));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto posets = enumerate_posets(n);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      auto alg = upset_brouwer_algebra(posets[i], kDefaultCarrierCap,
                                       "poset" + std::to_string(n) + "." + std::to_string(i));
      if (alg.size() <= kFamilyCarrier) out.push_back(std::move(alg));
    }
  }
  const auto presentations = enumerate_small_presentations(4);
  for (std::size_t i = 0; i < presentations.size(); ++i) {
    auto alg = upset_brouwer_algebra(DegreeStructure::from_presentation(presentations[i]).poset(),
                                     kDefaultCarrierCap, "muchnik" + std::to_string(i));
    if (alg.size() <= kFamilyCarrier) out.push_back(std::move(alg));
  }
  return out;
}

std::size_t for_each_family_algebra(const std::function<void(const FiniteBrouwerAlgebra&)>& visit) {
  std::size_t count = 0;
  for (const auto& alg : base_family()) {
    visit(alg);
    ++count;
    for (Element x = 0; x < alg.size(); ++x) {
      for (Element y = 0; y < alg.size(); ++y) {
        if ((x == alg.bottom() && y == alg.top()) || !alg.leq(x, y)) continue;
        visit(interval_algebra(alg, x, y));
        ++count;
      }
    }
  }
  return count;
}

std::vector<Formula> refutable_formulas() {
  return {parse_formula("~p | ~~p"), parse_formula("p | ~p"), parse_formula("((p -> q) -> p) -> p")};
}

std::vector<Formula> ipc_axiom_schemes() {
  static const char* const text[] = {
      "A -> B -> A",
      "(A -> B -> C) -> (A -> B) -> A -> C",
      "A & B -> A",
      "A & B -> B",
      "A -> B -> A & B",
      "A -> A | B",
      "B -> A | B",
      "(A -> C) -> (B -> C) -> A | B -> C",
      "F -> A",
      "(A -> B) -> (A -> ~B) -> ~A",
  };
  std::vector<Formula> out;
  for (const char* t : text) out.push_back(parse_formula(t));
  return out;
}

Formula instantiate(const Formula& scheme, const Formula& a, const Formula& b, const Formula& c) {
  return substitute(scheme, {{"A", a}, {"B", b}, {"C", c}});
}

std::vector<WitnessConfig> sampled_configs() {
  std::mt19937_64 rng(6);
  std::vector<WitnessConfig> out;
  std::set<std::vector<IndexSet>> seen;
  while (out.size() < 50) {
    WitnessConfig cfg;
    cfg.n = 1 + rng() % 3;
    cfg.k = 1 + rng() % 3;
    for (std::size_t j = 0; j < cfg.k; ++j) cfg.X.push_back(static_cast<IndexSet>(rng() % (1U << cfg.n)));
    std::vector<IndexSet> key{static_cast<IndexSet>(cfg.n)};
    key.insert(key.end(), cfg.X.begin(), cfg.X.end());
    if (seen.insert(key).second) out.push_back(std::move(cfg));
  }
  return out;
}

}  // namespace brouwer::acceptance
