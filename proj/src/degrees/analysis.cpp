#include "brouwer/degrees/analysis.hpp"

#include "brouwer/core/error.hpp"

namespace brouwer {

WitnessAnalysis analyze_witness(const Witness& w, std::size_t interval_limit) {
  WitnessAnalysis r;
  r.cfg = w.cfg;
  r.m = w.m;
  r.degree_count = w.degrees.size();
  const std::size_t n = w.cfg.n;
  const IndexSet full = full_index_set(n);
  const TaggedUnionSpace space(w.degrees.poset());
  const UpSetSpace upsets(w.degrees.poset());
  try {
    r.antichain = is_strong_antichain(w.degrees, w.ambient, w.D);
    const ElementSet e = w.e_problem(), b = w.b_problem();
    const BetaMap beta = w.m > 0 ? beta_embedding(w.degrees, w.ambient, w.D, e, b)
                                 : BetaMap(w.alpha(), w.degrees.poset().all());
    const AlphaMap& alpha = beta.alpha();
    auto tagged = [&](IndexSet x) { return w.m > 0 ? beta(x) : alpha.tagged(x); };
    r.upset_embedding = verify_usl_embedding(alpha, n, upsets, alpha(full), alpha(0));
    r.hull_embedding = verify_usl_embedding(tagged, n, space, tagged(full), tagged(0));

    const TaggedUnion lo = tagged(full), hi = tagged(0);
    std::vector<TaggedUnion> range;
    for (IndexSet x = 0; x <= full; ++x) range.push_back(tagged(x));
    std::optional<TaggedAlgebra> interval;
    if (w.m == 0) {
      try {
        interval = tabulate_tagged_interval(space, lo, hi, tagged_interval(space, alpha(full), hi, interval_limit));
        r.whole_interval = true;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::CarrierTooLarge) throw;
      }
    }
    if (!interval) interval = close_tagged_interval(space, lo, hi, range, interval_limit);
    r.interval_size = interval->algebra.size();

    std::vector<FiniteBrouwerAlgebra::Element> gens;
    for (const auto& t : range) gens.push_back(interval->at(t));
    r.canonical = is_canonical_subset(interval->algebra, gens);
    if (r.canonical.ok()) {
      const auto sub = generated_subalgebra(interval->algebra, gens);
      r.generated_size = sub.size();
      r.isomorphic_to_bn = isomorphic_to_bn(sub, n).has_value();
    }
    r.equation = w.m > 0 ? check_relativized_equation(w, e, b) : check_main_equation(w);
  } catch (const Error& err) {
    r.failure = err.what();
  }
  return r;
}

}  // namespace brouwer
