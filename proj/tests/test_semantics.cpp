#include <doctest.h>

#include <random>

#include "brouwer/core/error.hpp"
#include "brouwer/semantics/evaluate.hpp"
#include "brouwer/semantics/gamma.hpp"
#include "brouwer/semantics/kripke.hpp"
#include "brouwer/semantics/theory.hpp"

using namespace brouwer;
using Element = FiniteBrouwerAlgebra::Element;

namespace {

Element element(const FiniteBrouwerAlgebra& alg, const std::string& label) {
  const auto e = alg.find_label(label);
  REQUIRE(e.has_value());
  return *e;
}

const std::vector<std::string> kVars{"p", "q"};

}  // namespace

TEST_CASE("evaluate examples") {
  const auto b2 = build_bn(2);
  const auto p_to_p = parse_formula("p -> p");
  for (Element a = 0; a < b2.size(); ++a) CHECK(evaluate(b2, p_to_p, {{"p", a}}) == b2.bottom());

  const Element u1 = element(b2, "{{1}}");
  const Element lem = evaluate(b2, parse_formula("p | ~p"), {{"p", u1}});
  CHECK(b2.label(lem) == "{{1},{2}}");
  CHECK(lem != b2.bottom());

  const IntervalView<FiniteBrouwerAlgebra> iv(b2, element(b2, "{{1},{2}}"), b2.top());
  CHECK(evaluate(iv, parse_formula("p -> q"), {{"p", u1}, {"q", element(b2, "{{2}}")}}) == element(b2, "{{2}}"));

  CHECK_THROWS_AS(evaluate(b2, parse_formula("p & q"), {{"p", u1}}), Error);
}

TEST_CASE("Bottom evaluates to the top") {
  const auto b2 = build_bn(2);
  CHECK(evaluate(b2, Formula::bottom(), {}) == b2.top());
}

TEST_CASE("in_theory examples") {
  CHECK(in_theory(build_bn(1), parse_formula("p | ~p")));
  CHECK_FALSE(in_theory(build_bn(2), parse_formula("p | ~p")));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(in_theory(build_bn(n), parse_formula("p -> q -> p")));
  CHECK_THROWS_AS(in_theory(build_bn(4), parse_formula("p & q & r & s"), 1000), Error);
}

TEST_CASE("φ→φ and ⊥→φ always evaluate to 0") {
  std::mt19937_64 rng(5);
  const auto algebras = {build_bn(2), build_bn(3), factor_algebra(build_bn(3), 7)};
  for (const auto& alg : algebras) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto f = sample_formula(seed, seed % 6, kVars);
      const Valuation<Element> v{{"p", rng() % alg.size()}, {"q", rng() % alg.size()}};
      CHECK(evaluate(alg, Formula::implies(f, f), v) == alg.bottom());
      CHECK(evaluate(alg, Formula::implies(Formula::bottom(), f), v) == alg.bottom());
    }
  }
}

TEST_CASE("compiled evaluation agrees with the tree walk") {
  const auto alg = build_bn(3);
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto f = sample_formula(seed, seed % 8, {"p", "q", "r"});
    const CompiledFormula code(f);
    std::vector<Element> values;
    Valuation<Element> v;
    for (const auto& name : code.vars()) {
      values.push_back(rng() % alg.size());
      v.emplace(name, values.back());
    }
    CHECK(code.run(alg, values) == evaluate(alg, f, v));
  }
}

TEST_CASE("countermodel_search examples") {
  const auto wlem = parse_formula("~p | ~~p");
  const auto cm = countermodel_search(wlem, 3);
  REQUIRE(cm.has_value());
  CHECK(cm->n <= 3);
  CHECK(verify_countermodel(wlem, *cm));

  CHECK_FALSE(countermodel_search(parse_formula("p -> p"), 3).has_value());

  const auto lem = parse_formula("p | ~p");
  const auto cm2 = countermodel_search(lem, 2);
  REQUIRE(cm2.has_value());
  CHECK(cm2->n <= 2);
  CHECK(verify_countermodel(lem, *cm2));

  CHECK_THROWS_AS(countermodel_search(lem, 0), Error);
}

TEST_CASE("countermodels re-verify and are not 0 in their factor") {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto f = sample_formula(seed, 1 + seed % 5, kVars);
    const auto cm = countermodel_search(f, 2);
    if (!cm) continue;
    ++found;
    CHECK(verify_countermodel(f, *cm));
    const auto b = build_bn(cm->n);
    CHECK(cm->x.subset_of(cm->value));
    CHECK(cm->value != b.mask(b.bottom()));
  }
  CHECK(found > 20);
}

TEST_CASE("Bottom as x in the factor matches the positified formula in Bn") {
  const auto b = build_bn(2);
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto f = sample_formula(seed, 1 + seed % 6, kVars);
    if (is_positive(f)) continue;
    const auto fresh = fresh_variable(f);
    const auto g = positify(f, fresh);
    Valuation<Element> v;
    Element x = b.bottom();
    for (const auto& name : variables(g)) {
      v.emplace(name, rng() % b.size());
      x = b.join(x, v.at(name));
    }
    const auto factor = factor_algebra(b, x);
    Valuation<Element> local;
    for (const auto& name : variables(f)) local.emplace(name, *factor.find(b.mask(v.at(name))));
    CHECK(factor.mask(evaluate(factor, f, local)) == b.mask(evaluate(b, g, v)));
  }
}

TEST_CASE("Kripke oracle examples") {
  const auto lem = kripke_ipc_oracle(parse_formula("p | ~p"), 2);
  REQUIRE(lem.has_value());
  CHECK(lem->frame.size() == 2);
  CHECK(lem->frame.relation_size() == 3);

  const auto wlem = kripke_ipc_oracle(parse_formula("~p | ~~p"), 3);
  REQUIRE(wlem.has_value());
  CHECK(wlem->frame.size() == 3);
  CHECK(wlem->frame.relation_size() == 5);
  CHECK_FALSE(kripke_ipc_oracle(parse_formula("~p | ~~p"), 2).has_value());

  const auto peirce = kripke_ipc_oracle(parse_formula("((p -> q) -> p) -> p"), 2);
  REQUIRE(peirce.has_value());
  CHECK(peirce->frame.relation_size() == 3);
  CHECK_FALSE(peirce->forcing.test(peirce->failing_world));

  CHECK_FALSE(kripke_ipc_oracle(parse_formula("p -> q -> p"), 4).has_value());
}

TEST_CASE("evaluation agrees with Kripke forcing and yields up-sets") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& frame : enumerate_posets(n)) {
      const auto alg = upset_brouwer_algebra(frame);
      for (int t = 0; t < 10; ++t) {
        const auto f = sample_formula(rng(), rng() % 7, kVars);
        Valuation<Element> v;
        std::map<std::string, ElementSet> masks;
        for (const auto& name : kVars) {
          v.emplace(name, rng() % alg.size());
          masks.emplace(name, alg.mask(v.at(name)));
        }
        const auto forced = forcing_set(frame, f, masks);
        CHECK(frame.is_upset(forced));
        CHECK(alg.mask(evaluate(alg, f, v)) == forced);
      }
    }
  }
}

TEST_CASE("gamma_hom_check examples") {
  const auto b2 = build_bn(2);
  const auto r = gamma_hom_check(b2, element(b2, "{{1}}"), element(b2, "{{2}}"));
  CHECK(r.all_pass());
  CHECK(r.formulas_sampled == 100);

  const auto id = gamma_hom_check(b2, b2.bottom(), element(b2, "{{1},{2}}"));
  CHECK(id.all_pass());
  CHECK(id.source_size == id.target_size);
}

TEST_CASE("gamma passes on every pair of B3") {
  const auto b3 = build_bn(3);
  for (Element x = 0; x < b3.size(); x += 2) {
    for (Element z = 0; z < b3.size(); z += 3) {
      const auto r = gamma_hom_check(b3, x, z, 10);
      CHECK_MESSAGE(r.all_pass(), r.counterexample);
    }
  }
}
