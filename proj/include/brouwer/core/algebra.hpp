#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "brouwer/core/element_set.hpp"
#include "brouwer/core/error.hpp"
#include "brouwer/core/poset.hpp"

namespace brouwer {

/// Default bound on carrier size for every algebra constructor.
inline constexpr std::size_t kDefaultCarrierCap = 4096;

/// Carriers up to this size get precomputed operation tables.
inline constexpr std::size_t kTableLimit = 4096;

/// A finite Brouwer algebra: a bounded distributive lattice with
/// implication a→b = least c such that a ⊕ c ≥ b.
///
/// Elements are indices 0..size()-1.  bottom() is 0 ("solved"), top() is 1.
/// Algebras built from a poset also carry the up-set behind each element;
/// their order is reverse inclusion, ⊕ = ∩ and ⊗ = ∪.
class FiniteBrouwerAlgebra {
 public:
  using Element = std::size_t;
  using value_type = Element;

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] Element bottom() const { return bottom_; }
  [[nodiscard]] Element top() const { return top_; }

  [[nodiscard]] Element join(Element a, Element b) const;
  [[nodiscard]] Element meet(Element a, Element b) const;
  [[nodiscard]] Element imp(Element a, Element b) const;
  [[nodiscard]] bool leq(Element a, Element b) const { return join(a, b) == b; }

  [[nodiscard]] const std::string& label(Element a) const { return labels_[a]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::optional<Element> find_label(std::string_view label) const;

  /// Short description such as "bn:2" or "interval[..]".
  [[nodiscard]] const std::string& name() const { return name_; }

  /// Up-set backing, present for algebras built from a poset (and their
  /// intervals and sub-algebras).
  [[nodiscard]] bool has_poset() const { return poset_ != nullptr; }
  [[nodiscard]] const Poset& poset() const;
  [[nodiscard]] const ElementSet& mask(Element a) const { return masks_[a]; }
  [[nodiscard]] std::optional<Element> find(const ElementSet& m) const;

  /// Index of each element in the algebra this one was cut out of, when it
  /// is an interval or sub-algebra.
  [[nodiscard]] const std::vector<Element>& parent_index() const { return parent_index_; }

  [[nodiscard]] bool tabulated() const { return !join_.empty(); }

 private:
  friend FiniteBrouwerAlgebra upset_brouwer_algebra(const Poset&, std::size_t, std::string);
  friend FiniteBrouwerAlgebra interval_algebra(const FiniteBrouwerAlgebra&, Element, Element,
                                               std::size_t);
  friend FiniteBrouwerAlgebra sub_algebra(const FiniteBrouwerAlgebra&, std::vector<Element>);
  friend class AlgebraBuilder;

  FiniteBrouwerAlgebra() = default;
  void fill_tables(const std::function<Element(Element, Element)>& join,
                   const std::function<Element(Element, Element)>& meet,
                   const std::function<Element(Element, Element)>& imp);
  void index_masks();
  void index_labels();

  std::size_t size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> label_index_;

  std::shared_ptr<const Poset> poset_;
  std::vector<ElementSet> masks_;
  ElementSet imp_floor_;  // implication is (u→v) ∩ imp_floor_
  std::unordered_map<ElementSet, Element> mask_index_;

  std::vector<std::uint32_t> join_, meet_, imp_;
  std::vector<Element> parent_index_;
};

/// Up-sets of p ordered by reverse inclusion.  Throws CarrierTooLarge when
/// p has more than `cap` up-sets.
FiniteBrouwerAlgebra upset_brouwer_algebra(const Poset& p, std::size_t cap = kDefaultCarrierCap,
                                           std::string name = "");

/// The poset of nonempty subsets of {1..n} under ⊇.  Element i is the subset
/// whose bitmask is i+1; names look like "{1,2}".
Poset subset_poset(std::size_t n);

/// Up-sets of subset_poset(n).  Throws InvalidN for n = 0.
FiniteBrouwerAlgebra build_bn(std::size_t n, std::size_t cap = kDefaultCarrierCap);

/// [x, y] with inherited ⊕, ⊗ and implication (u→v) ⊕ x.  Throws
/// NotComparable unless x ≤ y.
FiniteBrouwerAlgebra interval_algebra(const FiniteBrouwerAlgebra& alg,
                                      FiniteBrouwerAlgebra::Element x,
                                      FiniteBrouwerAlgebra::Element y,
                                      std::size_t cap = kDefaultCarrierCap);

/// The factor by x, realised as the interval [0, x].
FiniteBrouwerAlgebra factor_algebra(const FiniteBrouwerAlgebra& alg, FiniteBrouwerAlgebra::Element x);

/// The given elements with inherited operations.  Throws NotSubalgebra
/// unless they are closed under ⊕, ⊗ and →.
FiniteBrouwerAlgebra sub_algebra(const FiniteBrouwerAlgebra& alg,
                                 std::vector<FiniteBrouwerAlgebra::Element> elements);

/// Closure of `gens` under ⊕, ⊗ and →, as a sub-algebra.
FiniteBrouwerAlgebra closure_subalgebra(const FiniteBrouwerAlgebra& alg,
                                        const std::vector<FiniteBrouwerAlgebra::Element>& gens);

/// Builds a tabulated algebra from explicit operation callbacks over indices
/// 0..size-1.  Used for algebras whose elements are not single up-sets.
class AlgebraBuilder {
 public:
  using Element = FiniteBrouwerAlgebra::Element;
  using BinaryOp = std::function<Element(Element, Element)>;

  static FiniteBrouwerAlgebra tabulate(std::string name, std::vector<std::string> labels,
                                       Element bottom, Element top, const BinaryOp& join,
                                       const BinaryOp& meet, const BinaryOp& imp);
};

/// Tabulates a closed finite set of values of any Brouwer-algebra-like model.
/// `ops` needs join/meet/imp on T; throws NotSubalgebra if a result falls
/// outside `carrier`.
template <class Ops, class T, class Label, class Hash = std::hash<T>>
FiniteBrouwerAlgebra tabulate(const Ops& ops, const std::vector<T>& carrier, const T& bottom,
                              const T& top, std::string name, Label&& label) {
  std::unordered_map<T, std::size_t, Hash> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    index.emplace(carrier[i], i);
    labels.push_back(label(carrier[i]));
  }
  auto locate = [&](const T& v, const char* what) {
    auto it = index.find(v);
    if (it == index.end()) throw Error(ErrorKind::NotSubalgebra, std::string(what) + " leaves the carrier");
    return it->second;
  };
  return AlgebraBuilder::tabulate(
      std::move(name), std::move(labels), locate(bottom, "bottom"), locate(top, "top"),
      [&](std::size_t a, std::size_t b) { return locate(ops.join(carrier[a], carrier[b]), "join"); },
      [&](std::size_t a, std::size_t b) { return locate(ops.meet(carrier[a], carrier[b]), "meet"); },
      [&](std::size_t a, std::size_t b) { return locate(ops.imp(carrier[a], carrier[b]), "implication"); });
}

/// Outcome of an exhaustive law check.  `failure` names the first violated
/// law with the offending elements.
struct LawReport {
  bool ok = true;
  std::string failure;
  std::size_t triples_checked = 0;
};

/// Checks the bounded distributive lattice laws, the order/join agreement and
/// the adjunction c ≥ a→b ⇔ a ⊕ c ≥ b over all triples.
LawReport check_brouwer_laws(const FiniteBrouwerAlgebra& alg);

}  // namespace brouwer
