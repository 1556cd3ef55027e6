#include "brouwer/semantics/gamma.hpp"

#include <unordered_set>

#include "brouwer/logic/formula.hpp"
#include "brouwer/semantics/theory.hpp"

namespace brouwer {

GammaReport gamma_hom_check(const FiniteBrouwerAlgebra& alg, FiniteBrouwerAlgebra::Element x,
                            FiniteBrouwerAlgebra::Element z, std::size_t samples, std::uint64_t seed) {
  using Element = FiniteBrouwerAlgebra::Element;
  GammaReport r;
  const Element zero = alg.bottom();
  const Element y = alg.join(x, z);
  const auto source = interval_algebra(alg, zero, z);
  const auto target = interval_algebra(alg, x, y);
  r.source_size = source.size();
  r.target_size = target.size();

  auto gamma = [&](Element u) { return alg.join(x, u); };
  auto note = [&](bool& flag, const std::string& what) {
    if (flag && r.counterexample.empty()) r.counterexample = what;
    flag = false;
  };
  std::unordered_set<Element> image;
  for (Element i = 0; i < source.size(); ++i) {
    const Element u = source.parent_index()[i];
    const Element gu = gamma(u);
    image.insert(gu);
    if (!(alg.leq(x, gu) && alg.leq(gu, y))) note(r.maps_into, "γ(" + alg.label(u) + ") leaves [x,y]");
    for (Element j = 0; j < source.size(); ++j) {
      const Element v = source.parent_index()[j];
      const Element gv = gamma(v);
      const std::string at = " at " + alg.label(u) + ", " + alg.label(v);
      if (gamma(alg.join(u, v)) != alg.join(gu, gv)) note(r.preserves_join, "⊕" + at);
      if (gamma(alg.meet(u, v)) != alg.meet(gu, gv)) note(r.preserves_meet, "⊗" + at);
      // implication in [0,z] is the ambient one; in [x,y] it is (a→b) ⊕ x
      if (gamma(alg.imp(u, v)) != alg.join(alg.imp(gu, gv), x)) note(r.preserves_implication, "→" + at);
    }
  }
  if (gamma(zero) != x) note(r.preserves_bottom, "γ(0) ≠ x");
  if (gamma(z) != y) note(r.preserves_top, "γ(z) ≠ y");
  for (Element c : target.parent_index()) {
    if (image.count(c) == 0) note(r.surjective, alg.label(c) + " has no preimage");
  }

  const std::vector<std::string> vars{"p", "q"};
  for (std::size_t i = 0; i < samples; ++i) {
    const Formula f = sample_formula(seed + i, 1 + i % 6, vars);
    ++r.formulas_sampled;
    if (!in_theory(source, f)) continue;
    ++r.formulas_valid_in_source;
    if (!in_theory(target, f)) note(r.theory_transfer, "valid in [0,z] but not in [x,y]: " + to_string(f));
  }
  return r;
}

}  // namespace brouwer
