#pragma once

#include <cstdint>
#include <string>

#include "brouwer/core/algebra.hpp"

namespace brouwer {

/// Results of checking u ↦ x ⊕ u as a map [0, z] → [x, x ⊕ z].
struct GammaReport {
  bool maps_into = true;
  bool preserves_join = true;
  bool preserves_meet = true;
  bool preserves_implication = true;
  bool preserves_bottom = true;
  bool preserves_top = true;
  bool surjective = true;
  bool theory_transfer = true;
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::size_t formulas_sampled = 0;
  std::size_t formulas_valid_in_source = 0;
  std::string counterexample;

  [[nodiscard]] bool all_pass() const {
    return maps_into && preserves_join && preserves_meet && preserves_implication &&
           preserves_bottom && preserves_top && surjective && theory_transfer;
  }
};

/// Builds γ(u) = x ⊕ u on [0, z] with y = x ⊕ z and checks that it is a
/// surjective Brouwer homomorphism onto [x, y].  Also samples `samples`
/// formulas and checks that each one valid in [0, z] is valid in [x, y].
GammaReport gamma_hom_check(const FiniteBrouwerAlgebra& alg, FiniteBrouwerAlgebra::Element x,
                            FiniteBrouwerAlgebra::Element z, std::size_t samples = 100,
                            std::uint64_t seed = 1);

}  // namespace brouwer
