#pragma once

#include <map>
#include <optional>
#include <string>

#include "brouwer/degrees/witness.hpp"
#include "brouwer/logic/formula.hpp"
#include "brouwer/semantics/gamma.hpp"
#include "brouwer/semantics/theory.hpp"

namespace brouwer {

/// The witness config whose main equation has right-hand side x: the
/// Xⱼ are the ⊆-maximal members of x (an up-set of subset_poset(n)), or
/// the single set ∅ when x is empty.
WitnessConfig config_for_factor(std::size_t n, const ElementSet& x);

/// ⋃ⱼ {S ≠ ∅ : S ⊆ Xⱼ}, the element of ℬₙ matching α(X₁) ⊗ … ⊗ α(X_k).
ElementSet factor_of_config(const WitnessConfig& cfg);

/// Carries a refutation from the factor [0, x] of ℬₙ into the witness:
/// ℬₙ ≅ ⟨range α⟩, then [x-image] = [α(I), RHS], then back along
/// γ(u) = α(I) ⊕ u to the interval [0, columns].
struct TransferReport {
  WitnessConfig cfg;
  bool equation_equal = false;
  /// U ↦ ⊗ {α(S) : S maximal in U} preserves ⊕, ⊗, → and the bounds and is
  /// injective on ℬₙ.
  bool isomorphism_ok = false;
  GammaReport gamma;
  std::size_t closure_size = 0;
  /// φ is not 0 in [0, columns] at the transported valuation.
  bool refuted = false;
  /// γ of that value is the image of the ℬₙ value.
  bool value_transported = false;
  std::map<std::string, std::string> valuation;
  std::string value;

  [[nodiscard]] bool ok() const {
    return equation_equal && isomorphism_ok && gamma.all_pass() && refuted && value_transported;
  }
};

/// `bn_valuation` assigns up-sets of subset_poset(cfg.n) inside
/// [0, factor_of_config(cfg)].  The sub-algebra generated around the
/// transported elements must stay within `budget` elements
/// (BudgetExceeded otherwise).
TransferReport transfer_refutation(const Formula& phi, const WitnessConfig& cfg,
                                   const std::map<std::string, ElementSet>& bn_valuation,
                                   std::size_t budget = 4096);

/// Looks for a refutation of φ in ℬₙ / factor_of_config(cfg) and transfers
/// it; nullopt when φ holds there.
std::optional<TransferReport> refute_in_witness(const Formula& phi, const WitnessConfig& cfg,
                                                std::size_t budget = 4096);

/// The full route from a countermodel to the witness built for its factor.
TransferReport transfer_countermodel(const Formula& phi, const Countermodel& cm, std::size_t budget = 4096);

}  // namespace brouwer
