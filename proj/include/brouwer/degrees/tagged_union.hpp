#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "brouwer/core/algebra.hpp"
#include "brouwer/core/element_set.hpp"
#include "brouwer/core/poset.hpp"

namespace brouwer {

/// A formal meet U₁ ⊗ … ⊗ U_r of up-sets that keeps the parts apart, the
/// way a disjoint union of tagged solutions does.
///
/// Parts are kept ⊆-maximal and in canonical order, so equal values have
/// equal representations.  The list is never empty: [∅] is the top and
/// [everything] the bottom.
class TaggedUnion {
 public:
  TaggedUnion() : parts_{ElementSet{}} {}
  explicit TaggedUnion(const ElementSet& single) : parts_{single} {}
  explicit TaggedUnion(std::vector<ElementSet> parts);

  [[nodiscard]] const std::vector<ElementSet>& parts() const { return parts_; }
  /// Union of the parts: what remains once the tags are forgotten.
  [[nodiscard]] ElementSet collapsed() const;

  bool operator==(const TaggedUnion&) const = default;

 private:
  std::vector<ElementSet> parts_;
};

struct TaggedUnionHash {
  std::size_t operator()(const TaggedUnion& t) const noexcept;
};

/// Brouwer operations on tagged unions over one degree order.
///
/// A ≤ B iff every part of B lies inside some part of A.  ⊗ concatenates,
/// ⊕ intersects part by part, and A → B = ⊕ᵢ ⊗ⱼ (Uᵢ → Vⱼ) with the
/// pointwise implication of up-sets.
class TaggedUnionSpace {
 public:
  using value_type = TaggedUnion;

  explicit TaggedUnionSpace(const Poset& p) : poset_(&p) {}

  [[nodiscard]] TaggedUnion join(const TaggedUnion& a, const TaggedUnion& b) const;
  [[nodiscard]] TaggedUnion meet(const TaggedUnion& a, const TaggedUnion& b) const;
  [[nodiscard]] TaggedUnion imp(const TaggedUnion& a, const TaggedUnion& b) const;
  [[nodiscard]] TaggedUnion bottom() const { return TaggedUnion(poset_->all()); }
  [[nodiscard]] TaggedUnion top() const { return TaggedUnion(); }
  [[nodiscard]] bool leq(const TaggedUnion& a, const TaggedUnion& b) const;
  [[nodiscard]] std::string format(const TaggedUnion& a) const;
  [[nodiscard]] const Poset& poset() const { return *poset_; }

 private:
  const Poset* poset_;
};

/// All tagged unions A with [lower] ≤ A ≤ upper, in canonical order.
/// Throws CarrierTooLarge past `limit`.
std::vector<TaggedUnion> tagged_interval(const TaggedUnionSpace& space, const ElementSet& lower,
                                         const TaggedUnion& upper, std::size_t limit = 4096);

/// A finite set of tagged unions closed under the operations it was built
/// with, tabulated, with the way back from values to indices.
struct TaggedAlgebra {
  FiniteBrouwerAlgebra algebra;
  std::vector<TaggedUnion> carrier;
  std::unordered_map<TaggedUnion, std::size_t, TaggedUnionHash> index;

  [[nodiscard]] FiniteBrouwerAlgebra::Element at(const TaggedUnion& t) const;
};

/// Closes `seeds` under ⊕, ⊗ and →.  Throws BudgetExceeded once more than
/// `budget` values appear.
TaggedAlgebra close_tagged(const TaggedUnionSpace& space, const std::vector<TaggedUnion>& seeds,
                           std::size_t budget = 4096);

/// The same inside [lo, hi], with implication (a → b) ⊕ lo; lo and hi are
/// added to the seeds.
TaggedAlgebra close_tagged_interval(const TaggedUnionSpace& space, const TaggedUnion& lo, const TaggedUnion& hi,
                                    const std::vector<TaggedUnion>& seeds, std::size_t budget = 4096);

/// Tabulates an explicit carrier of the interval [lo, hi] (NotSubalgebra if
/// it is not closed).
TaggedAlgebra tabulate_tagged_interval(const TaggedUnionSpace& space, const TaggedUnion& lo, const TaggedUnion& hi,
                                       std::vector<TaggedUnion> carrier);

}  // namespace brouwer
