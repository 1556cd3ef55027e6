#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "brouwer/core/algebra.hpp"
#include "brouwer/degrees/witness.hpp"
#include "brouwer/logic/formula.hpp"

namespace brouwer::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct CriterionInfo {
  int id;
  std::string title;
  double limit_seconds;
};

const std::vector<CriterionInfo>& criteria();

/// Runs one criterion; a criterion that finishes over its time limit fails.
/// Throws InvalidInput for an unknown id.
CriterionResult run_criterion(int id);

/// `only` empty means every criterion, in order.
std::vector<CriterionResult> run_criteria(const std::vector<int>& only = {});

/// ℬ₁..ℬ₃, up-set algebras of every poset with at most 5 elements and
/// muchnik algebras of every presentation with at most 4 generators, each
/// with carrier at most 64.
std::vector<FiniteBrouwerAlgebra> base_family();

/// Calls `visit` on every base algebra and every interval [x, y] of it
/// (factors included).  Returns the number of algebras visited.
std::size_t for_each_family_algebra(const std::function<void(const FiniteBrouwerAlgebra&)>& visit);

/// The three formulas refuted in criterion 4: ~p | ~~p, p | ~p and Peirce's
/// law.
std::vector<Formula> refutable_formulas();

/// Ten Hilbert-style axiom schemes for IPC over metavariables A, B, C.
std::vector<Formula> ipc_axiom_schemes();

/// Replaces A, B and C.
Formula instantiate(const Formula& scheme, const Formula& a, const Formula& b, const Formula& c);

/// 50 distinct configs with n, k ≤ 3, drawn from a fixed seed.
std::vector<WitnessConfig> sampled_configs();

}  // namespace brouwer::acceptance
