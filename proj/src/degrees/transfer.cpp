#include "brouwer/degrees/transfer.hpp"

#include <unordered_map>

#include "brouwer/core/error.hpp"
#include "brouwer/semantics/evaluate.hpp"

namespace brouwer {

namespace {

// Poset element i of subset_poset(n) is the subset with bitmask i+1.
IndexSet subset_of_element(std::size_t i) { return static_cast<IndexSet>(i + 1); }

std::vector<IndexSet> maximal_members(const ElementSet& u) {
  std::vector<IndexSet> out;
  u.for_each([&](std::size_t i) {
    const IndexSet s = subset_of_element(i);
    bool maximal = true;
    u.for_each([&](std::size_t j) {
      const IndexSet t = subset_of_element(j);
      if (t != s && (s & ~t) == 0) maximal = false;
    });
    if (maximal) out.push_back(s);
  });
  return out;
}

}  // namespace

WitnessConfig config_for_factor(std::size_t n, const ElementSet& x) {
  WitnessConfig cfg;
  cfg.n = n;
  cfg.X = maximal_members(x);
  if (cfg.X.empty()) cfg.X.push_back(0);
  cfg.k = cfg.X.size();
  cfg.validate();
  return cfg;
}

ElementSet factor_of_config(const WitnessConfig& cfg) {
  ElementSet out;
  const std::size_t count = (std::size_t{1} << cfg.n) - 1;
  for (IndexSet x : cfg.X) {
    for (std::size_t i = 0; i < count; ++i) {
      if ((subset_of_element(i) & ~x) == 0) out.set(i);
    }
  }
  return out;
}

TransferReport transfer_refutation(const Formula& phi, const WitnessConfig& cfg,
                                   const std::map<std::string, ElementSet>& bn_valuation, std::size_t budget) {
  TransferReport r;
  r.cfg = cfg;
  const Witness w = build_main_witness(cfg);
  r.equation_equal = check_main_equation(w).equal;
  const TaggedUnionSpace space(w.degrees.poset());
  const AlphaMap alpha = alpha_embedding(w.degrees, w.ambient, w.D);
  const IndexSet full = full_index_set(cfg.n);

  const auto bn = build_bn(cfg.n);
  auto image = [&](const ElementSet& u) {
    const auto tops = maximal_members(u);
    if (tops.empty()) return alpha.tagged(0);
    TaggedUnion out = alpha.tagged(tops.front());
    for (std::size_t i = 1; i < tops.size(); ++i) out = space.meet(out, alpha.tagged(tops[i]));
    return out;
  };

  // ℬₙ → [α(I), α(∅)] as an isomorphism onto the generated sub-algebra
  {
    const IntervalView<TaggedUnionSpace> range(space, alpha.tagged(full), alpha.tagged(0));
    std::vector<TaggedUnion> images;
    for (std::size_t u = 0; u < bn.size(); ++u) images.push_back(image(bn.mask(u)));
    bool ok = images[bn.bottom()] == range.bottom() && images[bn.top()] == range.top();
    for (std::size_t u = 0; u < bn.size() && ok; ++u) {
      for (std::size_t v = 0; v < bn.size() && ok; ++v) {
        ok = (u == v || !(images[u] == images[v])) && images[bn.join(u, v)] == space.join(images[u], images[v]) &&
             images[bn.meet(u, v)] == space.meet(images[u], images[v]) &&
             images[bn.imp(u, v)] == range.imp(images[u], images[v]);
      }
    }
    r.isomorphism_ok = ok;
  }

  const ElementSet x_bn = factor_of_config(cfg);
  const auto x_index = bn.find(x_bn);
  const auto factor = factor_algebra(bn, *x_index);
  Valuation<FiniteBrouwerAlgebra::Element> bn_val;
  for (const auto& [name, set] : bn_valuation) {
    const auto e = factor.find(set);
    if (!e) throw Error(ErrorKind::InvalidInput, "valuation of " + name + " lies outside the factor");
    bn_val.emplace(name, *e);
  }
  const auto bn_value = evaluate(factor, phi, bn_val);

  const TaggedUnion zero = space.bottom();
  const TaggedUnion columns = columns_problem(w);
  const TaggedUnion x = alpha.tagged(full);
  const TaggedUnion y = image(x_bn);
  auto preimage = [&](const TaggedUnion& c) { return space.meet(c, columns); };

  std::vector<TaggedUnion> seeds{zero, columns, x, y};
  for (std::size_t i = 0; i < factor.size(); ++i) {
    const TaggedUnion c = image(factor.mask(i));
    seeds.push_back(c);
    seeds.push_back(preimage(c));
  }
  const TaggedAlgebra closure = close_tagged(space, seeds, budget);
  const auto& hull = closure.algebra;
  r.closure_size = hull.size();
  r.gamma = gamma_hom_check(hull, closure.at(x), closure.at(columns));
  if (hull.join(closure.at(x), closure.at(columns)) != closure.at(y)) r.equation_equal = false;

  const auto source = interval_algebra(hull, hull.bottom(), closure.at(columns));
  std::unordered_map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < source.size(); ++i) local.emplace(source.parent_index()[i], i);
  Valuation<FiniteBrouwerAlgebra::Element> val;
  for (const auto& [name, e] : bn_val) {
    const TaggedUnion pre = preimage(image(factor.mask(e)));
    val.emplace(name, local.at(closure.at(pre)));
    r.valuation.emplace(name, space.format(pre));
  }
  const auto value = evaluate(source, phi, val);
  r.refuted = value != source.bottom();
  r.value = source.label(value);
  const TaggedUnion transported = space.join(x, closure.carrier[source.parent_index()[value]]);
  r.value_transported = transported == image(factor.mask(bn_value));
  return r;
}

std::optional<TransferReport> refute_in_witness(const Formula& phi, const WitnessConfig& cfg, std::size_t budget) {
  cfg.validate();
  const auto bn = build_bn(cfg.n);
  const auto factor = factor_algebra(bn, *bn.find(factor_of_config(cfg)));
  const auto hit = find_refutation(factor, phi);
  if (!hit) return std::nullopt;
  std::map<std::string, ElementSet> valuation;
  for (const auto& [name, e] : hit->valuation) valuation.emplace(name, factor.mask(e));
  return transfer_refutation(phi, cfg, valuation, budget);
}

TransferReport transfer_countermodel(const Formula& phi, const Countermodel& cm, std::size_t budget) {
  return transfer_refutation(phi, config_for_factor(cm.n, cm.x), cm.valuation, budget);
}

}  // namespace brouwer
