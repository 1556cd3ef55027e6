#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brouwer/core/element_set.hpp"

namespace brouwer {

/// A finite partial order on named elements, stored as the full relation.
///
/// up(i) is the principal up-set {j : i <= j}; down(i) the principal down-set.
/// Instances are immutable once built and always satisfy reflexivity,
/// antisymmetry and transitivity.
class Poset {
 public:
  /// Reflexive-transitive closure of the cover pairs (lower, upper).
  /// Throws DuplicateElement, UnknownElement or CyclicOrder.
  static Poset from_covers(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  /// Builds from a full relation given as principal up-sets.  The relation is
  /// validated (reflexive, antisymmetric, transitive) and rejected otherwise.
  static Poset from_up_sets(std::vector<std::string> elements, std::vector<ElementSet> up);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_[i]; }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;

  [[nodiscard]] bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  [[nodiscard]] const ElementSet& up(std::size_t i) const { return up_[i]; }
  [[nodiscard]] const ElementSet& down(std::size_t i) const { return down_[i]; }
  [[nodiscard]] ElementSet all() const { return ElementSet::prefix(size()); }

  [[nodiscard]] bool is_upset(const ElementSet& s) const;
  [[nodiscard]] bool is_downset(const ElementSet& s) const;
  [[nodiscard]] ElementSet upward_closure(const ElementSet& s) const;
  [[nodiscard]] ElementSet downward_closure(const ElementSet& s) const;

  /// Largest up-set C with a ∩ C ⊆ b: the points all of whose successors in
  /// a are also in b.
  [[nodiscard]] ElementSet pointwise_implication(const ElementSet& a, const ElementSet& b) const;

  /// Elements in an order compatible with leq (smaller ones first).
  [[nodiscard]] const std::vector<std::size_t>& linear_extension() const { return linear_; }

  /// Number of pairs (i, j) with i <= j, reflexive pairs included.
  [[nodiscard]] std::size_t relation_size() const;

  /// "{a,b}" using element names, members in index order.
  [[nodiscard]] std::string format(const ElementSet& s) const;

  bool operator==(const Poset& o) const { return names_ == o.names_ && up_ == o.up_; }

 private:
  Poset(std::vector<std::string> names, std::vector<ElementSet> up);

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::size_t> linear_;
};

/// Parses the line-oriented poset format:
///
///     # comment
///     elements: a b c
///     covers: a<b a<c
Poset parse_poset(std::string_view text);

/// Renders a poset in the format accepted by parse_poset (cover pairs only).
std::string format_poset(const Poset& p);

/// Up-sets U with lower ⊆ U ⊆ upper (both must be up-sets), in canonical order
/// (cardinality, then mask).  Throws CarrierTooLarge when more than `limit`
/// exist.
std::vector<ElementSet> enumerate_upsets_between(
    const Poset& p, ElementSet lower, ElementSet upper,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// All up-sets of p in canonical order.
std::vector<ElementSet> enumerate_upsets(
    const Poset& p, std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Posets on exactly n elements, one per isomorphism class, in a fixed order.
/// Elements are named w0, w1, ... and numbered along a linear extension.
std::vector<Poset> enumerate_posets(std::size_t n);

}  // namespace brouwer
