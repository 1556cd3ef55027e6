#include <doctest.h>

#include <algorithm>

#include "brouwer/core/error.hpp"
#include "brouwer/degrees/analysis.hpp"
#include "brouwer/degrees/transfer.hpp"
#include "brouwer/degrees/witness.hpp"
#include "brouwer/semantics/theory.hpp"

using namespace brouwer;

namespace {

WitnessConfig config(std::size_t n, std::vector<IndexSet> xs) { return {n, xs.size(), std::move(xs)}; }

ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

std::size_t trigger_index(const Presentation& p, std::vector<std::string> names) {
  std::ranges::sort(names);
  for (std::size_t t = 0; t < p.triggers.size(); ++t) {
    auto sorted = p.triggers[t];
    std::ranges::sort(sorted);
    if (sorted == names) return t;
  }
  FAIL("trigger not found");
  return 0;
}

}  // namespace

TEST_CASE("single column witness") {
  const auto w = build_main_witness(config(1, {0b1}));
  const auto& d = w.degrees;
  REQUIRE(w.D.size() == 1);
  REQUIRE(w.a.size() == 2);
  CHECK(w.D[0] == d.join(w.b[0], w.a[0]));
  CHECK(d.join(w.D[0], w.a[1]) == d.top());
  CHECK(w.ambient.test(w.D[0]));
  CHECK(witness_violations(w).empty());
}

TEST_CASE("a member outside every subset is its own antichain generator") {
  const auto w = build_main_witness(config(2, {0b01}));
  const auto& d = w.degrees;
  CHECK(w.D[1] == w.b[1]);
  CHECK(d.join(w.D[1], w.a[0]) == d.top());
  CHECK(d.join(w.D[0], w.D[1]) == d.top());
  CHECK(d.leq(w.a[0], w.D[0]));
}

TEST_CASE("witness configuration errors") {
  CHECK(kind_of([] { build_main_witness(config(2, {0b100})); }) == ErrorKind::InvalidConfig);
  CHECK(kind_of([] { build_main_witness(WitnessConfig{0, 1, {0}}); }) == ErrorKind::InvalidConfig);
  CHECK(kind_of([] { build_main_witness(WitnessConfig{2, 2, {1}}); }) == ErrorKind::InvalidConfig);
}

TEST_CASE("columns problem") {
  const auto w = build_main_witness(config(2, {0b01, 0b11}));
  const auto cols = columns_problem(w);
  CHECK(cols.parts().size() == 3);
  CHECK(cols.collapsed().test(w.degrees.top()));

  const auto r = build_relativized_witness(config(2, {0b01}), 1);
  const auto rcols = columns_problem(r);
  for (const auto& part : rcols.parts()) CHECK(r.e_problem().subset_of(part));

  Witness empty = w;
  empty.cfg.k = 0;
  empty.cfg.X.clear();
  empty.a.clear();
  CHECK(kind_of([&] { columns_problem(empty); }) == ErrorKind::EmptyColumns);
}

TEST_CASE("main equation examples") {
  for (const auto& cfg : {config(2, {0b01, 0b11}), config(1, {0b1}), config(1, {0}), config(3, {0b011, 0b110})}) {
    const auto eq = check_main_equation(build_main_witness(cfg));
    CHECK_MESSAGE(eq.equal, cfg.describe());
    CHECK(eq.equal_collapsed);
    CHECK(eq.diff.empty());
  }
}

TEST_CASE("deleting a column trigger breaks the main equation") {
  const auto cfg = config(2, {0});
  const auto p = witness_presentation(cfg);
  const auto mutated = p.without_trigger(trigger_index(p, {"b1", "a2"}));
  const auto eq = check_main_equation(assemble_witness(cfg, 0, mutated));
  CHECK_FALSE(eq.equal);
  CHECK_FALSE(eq.diff.empty());
}

TEST_CASE("deleting an antichain trigger breaks the embedding") {
  const auto cfg = config(2, {0b11});
  const auto p = witness_presentation(cfg);
  const auto w = assemble_witness(cfg, 0, p.without_trigger(trigger_index(p, {"b1", "b2"})));
  CHECK_FALSE(is_strong_antichain(w.degrees, w.ambient, w.D));
  const auto report = verify_usl_embedding(w.alpha(), 2, UpSetSpace(w.degrees.poset()), w.alpha()(3), w.alpha()(0));
  CHECK_FALSE(report.preserves_join);
  CHECK_FALSE(report.preserves_implication);
  CHECK(report.injective);
  CHECK(report.preserves_bounds);
}

TEST_CASE("relativized equation") {
  const auto w = build_relativized_witness(config(2, {0b01}), 1);
  CHECK(w.e.size() == 1);
  CHECK(witness_violations(w).empty());
  const auto eq = check_relativized_equation(w, w.e_problem(), w.b_problem());
  CHECK(eq.equal);
  CHECK(eq.equal_collapsed);

  const auto plain = build_relativized_witness(config(2, {0b01}), 0);
  CHECK(plain.e_problem().empty());
  CHECK(check_relativized_equation(plain, plain.e_problem(), plain.b_problem()).equal);

  CHECK(kind_of([&] { check_relativized_equation(w, w.b_problem(), w.e_problem()); }) ==
        ErrorKind::EBelowBViolation);
  CHECK(kind_of([&] { check_relativized_equation(w, w.degrees.cone(w.D[0]), w.b_problem()); }) ==
        ErrorKind::ENotInAmbientComplement);
}

TEST_CASE("witness analysis passes on every small configuration") {
  std::size_t seen = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const IndexSet subsets = full_index_set(n) + 1;
      std::vector<IndexSet> xs(k, 0);
      for (IndexSet code = 0; code < (k == 1 ? subsets : subsets * subsets); ++code) {
        xs[0] = code % subsets;
        if (k == 2) xs[1] = code / subsets;
        const auto cfg = config(n, xs);
        for (std::size_t m = 0; m <= 1; ++m) {
          const auto w = m == 0 ? build_main_witness(cfg) : build_relativized_witness(cfg, m);
          const auto a = analyze_witness(w);
          CHECK_MESSAGE(a.ok(), cfg.describe() << " m=" << m << " " << a.failure);
          ++seen;
        }
      }
    }
  }
  CHECK(seen == 2 * (2 + 4 + 4 + 16));
}

TEST_CASE("factor configs round trip") {
  const auto b3 = build_bn(3);
  for (FiniteBrouwerAlgebra::Element x = 0; x < b3.size(); ++x) {
    const auto cfg = config_for_factor(3, b3.mask(x));
    CHECK_NOTHROW(cfg.validate());
    CHECK(factor_of_config(cfg) == b3.mask(x));
  }
}

TEST_CASE("refutations transfer into the witness") {
  for (const char* text : {"p | ~p", "~p | ~~p", "(p -> q) | (q -> p)", "((p -> q) -> p) -> p"}) {
    const auto phi = parse_formula(text);
    const auto cm = countermodel_search(phi, 3);
    REQUIRE_MESSAGE(cm.has_value(), text);
    const auto report = transfer_countermodel(phi, *cm);
    CHECK_MESSAGE(report.ok(), text);
    CHECK(report.gamma.all_pass());
    CHECK_FALSE(report.valuation.empty());
  }
}

TEST_CASE("a valid formula is not refuted in a witness") {
  CHECK_FALSE(refute_in_witness(parse_formula("p -> p"), config(2, {0b01})).has_value());
  const auto found = refute_in_witness(parse_formula("p | ~p"), config(2, {0b01}));
  REQUIRE(found.has_value());
  CHECK(found->ok());
}
