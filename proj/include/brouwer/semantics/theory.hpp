#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "brouwer/core/algebra.hpp"
#include "brouwer/logic/formula.hpp"
#include "brouwer/semantics/evaluate.hpp"

namespace brouwer {

/// Default cap on formula evaluations per query.
inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// A valuation under which a formula is not 0, and the value it gets.
struct Refutation {
  Valuation<FiniteBrouwerAlgebra::Element> valuation;
  FiniteBrouwerAlgebra::Element value = 0;
};

/// First valuation (lexicographic over sorted variables, canonical carrier
/// order, last variable fastest) at which f is not 0.  Throws BudgetExceeded
/// when |carrier|^|vars| exceeds the budget.
std::optional<Refutation> find_refutation(const FiniteBrouwerAlgebra& alg, const Formula& f,
                                          std::size_t budget = kDefaultBudget);

std::optional<Refutation> find_refutation(const FiniteBrouwerAlgebra& alg, const CompiledFormula& code,
                                          std::size_t budget = kDefaultBudget);

/// f evaluates to 0 under every valuation.
bool in_theory(const FiniteBrouwerAlgebra& alg, const Formula& f, std::size_t budget = kDefaultBudget);
bool in_theory(const FiniteBrouwerAlgebra& alg, const CompiledFormula& code, std::size_t budget = kDefaultBudget);

/// φ fails in the factor [0, x] of ℬₙ at `valuation`.  Sets are up-sets of
/// subset_poset(n).
struct Countermodel {
  std::size_t n = 0;
  ElementSet x;
  std::map<std::string, ElementSet> valuation;
  ElementSet value;
  /// The Bottom-free formula that was refuted in ℬₙ and the variable added
  /// for it (empty when φ had no Bottom).
  Formula positive = Formula::bottom();
  std::string fresh;
};

/// Searches ℬ₁..ℬ_{n_max} for a valuation refuting positify(φ); the factor
/// is the ⊕ of all variable images.  nullopt means none was found up to the
/// bound, which is not a proof that φ is intuitionistically valid.
std::optional<Countermodel> countermodel_search(const Formula& phi, std::size_t n_max,
                                                std::size_t budget = kDefaultBudget);

/// Re-evaluates φ in factor_algebra(ℬₙ, x) at the countermodel's valuation
/// and checks that the result is the stored value and not 0.
bool verify_countermodel(const Formula& phi, const Countermodel& cm);

}  // namespace brouwer
