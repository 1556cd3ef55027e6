#pragma once

#include <cstddef>
#include <string>

#include "brouwer/degrees/embedding.hpp"
#include "brouwer/degrees/witness.hpp"

namespace brouwer {

/// Everything the witness command reports about one witness: the
/// antichain, α as an embedding of P(I) into the up-sets, the map (α, or β
/// when m > 0) as an embedding into the tagged hull, canonicity of its
/// range, the algebra it generates and the main or relativized equation.
///
/// β is only checked in the hull: with tags forgotten, α(X) ∪ (E → B)
/// swallows the cones of the Dᵢ and is no longer injective.
struct WitnessAnalysis {
  WitnessConfig cfg;
  std::size_t m = 0;
  std::size_t degree_count = 0;
  bool antichain = false;
  EmbeddingReport upset_embedding;
  EmbeddingReport hull_embedding;
  CanonicalReport canonical;
  /// Size of the tabulated part of [map(I), map(∅)]: the whole interval when
  /// it is small enough, otherwise the sub-algebra generated by the range.
  std::size_t interval_size = 0;
  bool whole_interval = false;
  std::size_t generated_size = 0;
  bool isomorphic_to_bn = false;
  EquationReport equation;
  /// Set when a stage threw; the later stages were skipped.
  std::string failure;

  [[nodiscard]] bool ok() const {
    return failure.empty() && antichain && upset_embedding.all() && hull_embedding.all() && canonical.ok() &&
           isomorphic_to_bn && equation.equal && equation.equal_collapsed;
  }
};

/// Runs every check on w.  Relativized witnesses use E = w.e_problem() and
/// B = w.b_problem().
WitnessAnalysis analyze_witness(const Witness& w, std::size_t interval_limit = 4096);

}  // namespace brouwer
