#include "brouwer/semantics/theory.hpp"

namespace brouwer {

namespace {

std::size_t sweep_size(std::size_t carrier, std::size_t vars, std::size_t budget) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (total > budget / std::max<std::size_t>(carrier, 1)) {
      throw Error(ErrorKind::BudgetExceeded, std::to_string(carrier) + "^" + std::to_string(vars) +
                                                 " valuations exceed the budget of " + std::to_string(budget));
    }
    total *= carrier;
  }
  if (total > budget) throw Error(ErrorKind::BudgetExceeded, "valuation count exceeds the budget");
  return total;
}

}  // namespace

std::optional<Refutation> find_refutation(const FiniteBrouwerAlgebra& alg, const Formula& f,
                                          std::size_t budget) {
  return find_refutation(alg, CompiledFormula(f), budget);
}

std::optional<Refutation> find_refutation(const FiniteBrouwerAlgebra& alg, const CompiledFormula& code,
                                          std::size_t budget) {
  const std::size_t k = code.vars().size();
  sweep_size(alg.size(), k, budget);
  std::vector<FiniteBrouwerAlgebra::Element> values(k, 0);
  while (true) {
    const auto value = code.run(alg, values);
    if (value != alg.bottom()) {
      Refutation r;
      for (std::size_t i = 0; i < k; ++i) r.valuation.emplace(code.vars()[i], values[i]);
      r.value = value;
      return r;
    }
    // odometer, last variable fastest
    std::size_t i = k;
    while (i > 0 && ++values[i - 1] == alg.size()) values[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

bool in_theory(const FiniteBrouwerAlgebra& alg, const Formula& f, std::size_t budget) {
  return !find_refutation(alg, f, budget).has_value();
}

bool in_theory(const FiniteBrouwerAlgebra& alg, const CompiledFormula& code, std::size_t budget) {
  return !find_refutation(alg, code, budget).has_value();
}

std::optional<Countermodel> countermodel_search(const Formula& phi, std::size_t n_max, std::size_t budget) {
  if (n_max == 0) throw Error(ErrorKind::InvalidN, "n_max must be at least 1");
  const std::string fresh = is_positive(phi) ? std::string() : fresh_variable(phi);
  const Formula positive = fresh.empty() ? phi : positify(phi, fresh);
  std::size_t spent = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto bn = build_bn(n);
    const std::size_t cost = sweep_size(bn.size(), variables(positive).size(), budget - spent);
    auto hit = find_refutation(bn, positive, budget - spent);
    spent += cost;
    if (!hit) continue;
    Countermodel cm;
    cm.n = n;
    cm.positive = positive;
    cm.fresh = fresh;
    auto x = bn.bottom();
    for (const auto& [name, e] : hit->valuation) x = bn.join(x, e);
    cm.x = bn.mask(x);
    for (const auto& name : variables(phi)) cm.valuation.emplace(name, bn.mask(hit->valuation.at(name)));
    cm.value = bn.mask(hit->value);
    return cm;
  }
  return std::nullopt;
}

bool verify_countermodel(const Formula& phi, const Countermodel& cm) {
  const auto bn = build_bn(cm.n);
  const auto x = bn.find(cm.x);
  if (!x) return false;
  const auto factor = factor_algebra(bn, *x);
  Valuation<FiniteBrouwerAlgebra::Element> v;
  for (const auto& [name, set] : cm.valuation) {
    auto e = factor.find(set);
    if (!e) return false;
    v.emplace(name, *e);
  }
  const auto value = evaluate(factor, phi, v);
  return value != factor.bottom() && factor.mask(value) == cm.value;
}

}  // namespace brouwer
