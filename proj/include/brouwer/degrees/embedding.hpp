#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brouwer/core/algebra.hpp"
#include "brouwer/degrees/degree_structure.hpp"
#include "brouwer/degrees/tagged_union.hpp"
#include "brouwer/semantics/evaluate.hpp"

namespace brouwer {

using Degree = DegreeStructure::Degree;

/// Subsets of an index set I = {1..n} as bitmasks; bit i-1 is index i.
using IndexSet = std::uint32_t;

inline IndexSet full_index_set(std::size_t n) { return static_cast<IndexSet>((1U << n) - 1); }
std::string format_index_set(IndexSet x);

/// Every pairwise join of fs leaves `ambient`.  Throws NotDownwardClosed or
/// MemberOutsideAmbient when the preconditions fail.
bool is_strong_antichain(const DegreeStructure& d, const ElementSet& ambient, const std::vector<Degree>& fs);

/// X ↦ complement(ambient) ∪ ⋃_{i∈X} cone(fᵢ).
class AlphaMap {
 public:
  AlphaMap(ElementSet outside, std::vector<ElementSet> cones)
      : outside_(outside), cones_(std::move(cones)) {}

  [[nodiscard]] std::size_t width() const { return cones_.size(); }
  [[nodiscard]] ElementSet operator()(IndexSet x) const;
  [[nodiscard]] TaggedUnion tagged(IndexSet x) const { return TaggedUnion((*this)(x)); }
  [[nodiscard]] const ElementSet& outside() const { return outside_; }

 private:
  ElementSet outside_;
  std::vector<ElementSet> cones_;
};

/// Throws AntichainViolated unless fs is a strong antichain in ambient.
AlphaMap alpha_embedding(const DegreeStructure& d, const ElementSet& ambient, const std::vector<Degree>& fs);

/// The same map with no antichain check, for mutation experiments.
AlphaMap alpha_map_unchecked(const DegreeStructure& d, const ElementSet& ambient, const std::vector<Degree>& fs);

/// X ↦ α(X) ⊗ (E → B), kept as a two-part tagged union.
class BetaMap {
 public:
  BetaMap(AlphaMap alpha, ElementSet implication) : alpha_(std::move(alpha)), implication_(implication) {}

  [[nodiscard]] std::size_t width() const { return alpha_.width(); }
  [[nodiscard]] TaggedUnion operator()(IndexSet x) const {
    return TaggedUnion(std::vector<ElementSet>{alpha_(x), implication_});
  }
  /// β(X) with tags forgotten: α(X) ∪ (E → B).
  [[nodiscard]] ElementSet collapsed(IndexSet x) const { return alpha_(x) | implication_; }
  [[nodiscard]] const AlphaMap& alpha() const { return alpha_; }
  [[nodiscard]] const ElementSet& implication() const { return implication_; }

 private:
  AlphaMap alpha_;
  ElementSet implication_;
};

/// Throws ENotInAmbientComplement unless E ⊆ complement(ambient),
/// EBelowBViolation if E ≥ B (that is, E ⊆ B), AntichainViolated as for α.
BetaMap beta_embedding(const DegreeStructure& d, const ElementSet& ambient, const std::vector<Degree>& fs,
                       const ElementSet& e_problem, const ElementSet& b_problem);

struct EmbeddingCounterexample {
  IndexSet x = 0, y = 0;
  std::string details;
};

struct EmbeddingReport {
  bool injective = true;
  bool preserves_join = true;
  bool preserves_implication = true;
  bool preserves_bounds = true;
  std::optional<EmbeddingCounterexample> counterexample;

  [[nodiscard]] bool all() const {
    return injective && preserves_join && preserves_implication && preserves_bounds;
  }
};

/// Checks over all X, Y ⊆ I that `map` is injective, sends X ∩ Y to the ⊕
/// of the images and (I∖X) ∪ Y to the interval implication, and sends I and
/// ∅ to the interval bounds with every image inside [lo, hi].
template <BrouwerOps Ops, class Map>
EmbeddingReport verify_usl_embedding(const Map& map, std::size_t width, const Ops& ops,
                                     const typename Ops::value_type& lo, const typename Ops::value_type& hi) {
  EmbeddingReport r;
  const IndexSet full = full_index_set(width);
  const IntervalView<Ops> interval(ops, lo, hi);
  auto below = [&](const auto& a, const auto& b) { return ops.join(a, b) == b; };
  auto fail = [&](bool& flag, IndexSet x, IndexSet y, std::string what) {
    if (!r.counterexample) r.counterexample = EmbeddingCounterexample{x, y, std::move(what)};
    flag = false;
  };
  std::vector<typename Ops::value_type> image;
  for (IndexSet x = 0; x <= full; ++x) image.push_back(map(x));
  if (!(image[full] == lo)) fail(r.preserves_bounds, full, full, "I is not sent to the interval bottom");
  if (!(image[0] == hi)) fail(r.preserves_bounds, 0, 0, "the empty set is not sent to the interval top");
  for (IndexSet x = 0; x <= full; ++x) {
    if (!below(lo, image[x]) || !below(image[x], hi)) fail(r.preserves_bounds, x, x, "image outside the interval");
    for (IndexSet y = 0; y <= full; ++y) {
      if (x != y && image[x] == image[y]) fail(r.injective, x, y, "equal images");
      if (!(image[x & y] == ops.join(image[x], image[y]))) {
        fail(r.preserves_join, x, y, "image of X ∩ Y differs from the ⊕ of the images");
      }
      if (!(image[((full & ~x) | y)] == interval.imp(image[x], image[y]))) {
        fail(r.preserves_implication, x, y, "image of X → Y differs from the interval implication");
      }
    }
  }
  return r;
}

/// Per-condition result of the canonical-subset test.
struct CanonicalReport {
  bool meet_irreducible = true;
  bool closed = true;
  bool distributive = true;
  std::string detail;

  [[nodiscard]] bool ok() const { return meet_irreducible && closed && distributive; }
};

/// (i) each member is meet-irreducible in alg, (ii) the subset is closed
/// under ⊕ and →, (iii) a → (b ⊗ c) = (a → b) ⊗ (a → c) for members a and
/// all b, c of alg.
CanonicalReport is_canonical_subset(const FiniteBrouwerAlgebra& alg,
                                    const std::vector<FiniteBrouwerAlgebra::Element>& subset);

/// All ⊗-products of gens, as a sub-algebra.  Throws NotCanonical unless the
/// generators form a canonical subset, NotSubalgebra if the products are
/// not closed.
FiniteBrouwerAlgebra generated_subalgebra(const FiniteBrouwerAlgebra& alg,
                                          const std::vector<FiniteBrouwerAlgebra::Element>& gens);

/// A bijection a ↦ b preserving ⊕, ⊗, →, 0 and 1, found by backtracking
/// and re-verified on the full tables.
std::optional<std::vector<FiniteBrouwerAlgebra::Element>> find_isomorphism(const FiniteBrouwerAlgebra& a,
                                                                           const FiniteBrouwerAlgebra& b);

std::optional<std::vector<FiniteBrouwerAlgebra::Element>> isomorphic_to_bn(const FiniteBrouwerAlgebra& sub,
                                                                           std::size_t n);

}  // namespace brouwer
