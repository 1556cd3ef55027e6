#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brouwer/core/algebra.hpp"
#include "brouwer/core/poset.hpp"
#include "brouwer/degrees/presentation.hpp"

namespace brouwer {

/// A finite join-semilattice of simulated degrees with least element zero
/// and an absorbing greatest element top (the jump).
///
/// Degrees other than top are generator sets closed under the `below`
/// relation that contain no jump trigger.  Degree 0 is the empty set; top is
/// the last index.
class DegreeStructure {
 public:
  using Degree = std::size_t;

  /// Throws InconsistentPresentation when a generator or keep-set reaches
  /// top, InvalidInput on malformed relations, CarrierTooLarge beyond
  /// kMaxElements degrees.
  static DegreeStructure from_presentation(const Presentation& p);

  [[nodiscard]] std::size_t size() const { return sets_.size() + 1; }
  [[nodiscard]] Degree zero() const { return 0; }
  [[nodiscard]] Degree top() const { return sets_.size(); }
  [[nodiscard]] Degree join(Degree d, Degree e) const { return join_[d * size() + e]; }
  [[nodiscard]] bool leq(Degree d, Degree e) const { return join(d, e) == e; }

  [[nodiscard]] const std::vector<std::string>& generators() const { return generators_; }
  /// Degree of the join of the named generators (top if it jumps).
  [[nodiscard]] Degree of(const std::vector<std::string>& names) const;
  [[nodiscard]] Degree generator(const std::string& name) const { return of({name}); }
  /// Generator set of a degree below top.
  [[nodiscard]] std::uint64_t generator_set(Degree d) const { return sets_.at(d); }

  [[nodiscard]] const std::string& label(Degree d) const { return poset_.name(d); }
  /// The induced order, with degree d as element d.
  [[nodiscard]] const Poset& poset() const { return poset_; }
  [[nodiscard]] ElementSet all() const { return poset_.all(); }
  /// {e : e ≥ d}
  [[nodiscard]] const ElementSet& cone(Degree d) const { return poset_.up(d); }

  /// Join laws, zero identity, top absorption; empty string when all hold.
  [[nodiscard]] std::string check_invariants() const;

 private:
  DegreeStructure() : poset_(Poset::from_up_sets({}, {})) {}

  std::vector<std::string> generators_;
  std::vector<std::uint64_t> closure_;   // generator i ↦ its closed set
  std::vector<std::uint64_t> sets_;      // degrees below top
  std::vector<std::uint64_t> triggers_;
  std::uint64_t collapsing_ = 0;         // generators forced to top
  std::vector<Degree> join_;
  Poset poset_;

  [[nodiscard]] std::uint64_t close(std::uint64_t s) const;
  [[nodiscard]] bool jumps(std::uint64_t closed) const;
  [[nodiscard]] Degree locate(std::uint64_t s) const;
};

inline DegreeStructure degree_structure_from_presentation(const Presentation& p) {
  return DegreeStructure::from_presentation(p);
}

/// Up-sets of degrees (mass problems) with ⊕ = ∩, ⊗ = ∪ and pointwise →.
class UpSetSpace {
 public:
  using value_type = ElementSet;

  explicit UpSetSpace(const Poset& p) : poset_(&p) {}

  [[nodiscard]] ElementSet join(const ElementSet& a, const ElementSet& b) const { return a & b; }
  [[nodiscard]] ElementSet meet(const ElementSet& a, const ElementSet& b) const { return a | b; }
  [[nodiscard]] ElementSet imp(const ElementSet& a, const ElementSet& b) const {
    return poset_->pointwise_implication(a, b);
  }
  [[nodiscard]] ElementSet bottom() const { return poset_->all(); }
  [[nodiscard]] ElementSet top() const { return {}; }
  [[nodiscard]] bool leq(const ElementSet& a, const ElementSet& b) const { return b.subset_of(a); }
  [[nodiscard]] const Poset& poset() const { return *poset_; }

 private:
  const Poset* poset_;
};

/// The up-set algebra of the degree order.  Cones are carrier elements:
/// find(d.cone(g)).
FiniteBrouwerAlgebra muchnik_algebra(const DegreeStructure& d, std::size_t cap = kDefaultCarrierCap);

}  // namespace brouwer
