#pragma once

#include <map>
#include <optional>
#include <string>

#include "brouwer/core/poset.hpp"
#include "brouwer/logic/formula.hpp"

namespace brouwer {

/// Worlds of `frame` forcing f, where each variable is true exactly on its
/// (upward closed) set.  Computed world by world from the forcing clauses,
/// without touching the algebra code.  Throws UnboundVariable.
ElementSet forcing_set(const Poset& frame, const Formula& f,
                       const std::map<std::string, ElementSet>& valuation);

struct KripkeCountermodel {
  Poset frame;
  std::map<std::string, ElementSet> valuation;
  ElementSet forcing;
  std::size_t failing_world = 0;
};

/// Searches rooted and unrooted frames with 1..max_worlds worlds (one per
/// isomorphism class, smallest first) for a persistent valuation under
/// which f is not forced everywhere.  Throws BudgetExceeded.
std::optional<KripkeCountermodel> kripke_ipc_oracle(const Formula& f, std::size_t max_worlds = 5,
                                                    std::size_t budget = 10'000'000);

}  // namespace brouwer
