#include "brouwer/core/algebra.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace brouwer {

using Element = FiniteBrouwerAlgebra::Element;

Element FiniteBrouwerAlgebra::join(Element a, Element b) const {
  if (!join_.empty()) return join_[a * size_ + b];
  return mask_index_.at(masks_[a] & masks_[b]);
}

Element FiniteBrouwerAlgebra::meet(Element a, Element b) const {
  if (!meet_.empty()) return meet_[a * size_ + b];
  return mask_index_.at(masks_[a] | masks_[b]);
}

Element FiniteBrouwerAlgebra::imp(Element a, Element b) const {
  if (!imp_.empty()) return imp_[a * size_ + b];
  return mask_index_.at(poset_->pointwise_implication(masks_[a], masks_[b]) & imp_floor_);
}

std::optional<Element> FiniteBrouwerAlgebra::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

const Poset& FiniteBrouwerAlgebra::poset() const {
  if (!poset_) throw Error(ErrorKind::InvalidInput, "algebra '" + name_ + "' has no backing poset");
  return *poset_;
}

std::optional<Element> FiniteBrouwerAlgebra::find(const ElementSet& m) const {
  auto it = mask_index_.find(m);
  if (it == mask_index_.end()) return std::nullopt;
  return it->second;
}

void FiniteBrouwerAlgebra::fill_tables(const std::function<Element(Element, Element)>& join,
                                       const std::function<Element(Element, Element)>& meet,
                                       const std::function<Element(Element, Element)>& imp) {
  const std::size_t n = size_;
  join_.resize(n * n);
  meet_.resize(n * n);
  imp_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      join_[a * n + b] = static_cast<std::uint32_t>(join(a, b));
      meet_[a * n + b] = static_cast<std::uint32_t>(meet(a, b));
      imp_[a * n + b] = static_cast<std::uint32_t>(imp(a, b));
    }
  }
}

void FiniteBrouwerAlgebra::index_masks() {
  mask_index_.clear();
  mask_index_.reserve(masks_.size());
  for (Element i = 0; i < masks_.size(); ++i) mask_index_.emplace(masks_[i], i);
  if (poset_) {
    labels_.clear();
    for (const auto& m : masks_) labels_.push_back(poset_->format(m));
  }
}

void FiniteBrouwerAlgebra::index_labels() {
  label_index_.clear();
  for (Element i = 0; i < labels_.size(); ++i) label_index_.emplace(labels_[i], i);
}

FiniteBrouwerAlgebra upset_brouwer_algebra(const Poset& p, std::size_t cap, std::string name) {
  FiniteBrouwerAlgebra alg;
  alg.poset_ = std::make_shared<const Poset>(p);
  alg.masks_ = enumerate_upsets(p, cap);
  alg.size_ = alg.masks_.size();
  alg.imp_floor_ = p.all();
  alg.index_masks();
  alg.index_labels();
  alg.bottom_ = *alg.find(p.all());
  alg.top_ = *alg.find(ElementSet{});
  alg.name_ = name.empty() ? "upsets(" + std::to_string(p.size()) + ")" : std::move(name);
  if (alg.size_ <= kTableLimit) {
    const auto& masks = alg.masks_;
    const auto& index = alg.mask_index_;
    alg.fill_tables([&](Element a, Element b) { return index.at(masks[a] & masks[b]); },
                    [&](Element a, Element b) { return index.at(masks[a] | masks[b]); },
                    [&](Element a, Element b) { return index.at(p.pointwise_implication(masks[a], masks[b])); });
  }
  return alg;
}

Poset subset_poset(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidN, "n must be at least 1");
  if ((std::size_t{1} << n) - 1 > kMaxElements) {
    throw Error(ErrorKind::CarrierTooLarge, "n = " + std::to_string(n) + " exceeds the poset width");
  }
  const std::size_t count = (std::size_t{1} << n) - 1;
  std::vector<std::string> names;
  std::vector<ElementSet> up(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t s = i + 1;
    std::string name = "{";
    for (std::size_t b = 0; b < n; ++b) {
      if ((s >> b) & 1U) {
        if (name.size() > 1) name += ',';
        name += std::to_string(b + 1);
      }
    }
    names.push_back(name + "}");
    // above s in the ⊇ order: its nonempty subsets
    for (std::size_t j = 0; j < count; ++j) {
      if (((j + 1) & ~s) == 0) up[i].set(j);
    }
  }
  return Poset::from_up_sets(std::move(names), std::move(up));
}

FiniteBrouwerAlgebra build_bn(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidN, "n must be at least 1");
  return upset_brouwer_algebra(subset_poset(n), cap, "bn:" + std::to_string(n));
}

FiniteBrouwerAlgebra interval_algebra(const FiniteBrouwerAlgebra& alg, Element x, Element y,
                                      std::size_t cap) {
  if (x >= alg.size() || y >= alg.size()) throw Error(ErrorKind::InvalidInput, "element out of range");
  if (!alg.leq(x, y)) {
    throw Error(ErrorKind::NotComparable, alg.label(x) + " is not below " + alg.label(y));
  }
  FiniteBrouwerAlgebra out;
  out.name_ = alg.name_ + "[" + alg.label(x) + "," + alg.label(y) + "]";
  if (alg.has_poset()) {
    // x ≤ z ≤ y means mask(y) ⊆ mask(z) ⊆ mask(x)
    out.poset_ = alg.poset_;
    const auto candidates = enumerate_upsets_between(*alg.poset_, alg.mask(y), alg.mask(x), cap);
    for (const auto& m : candidates) {
      if (auto idx = alg.find(m)) {
        out.masks_.push_back(m);
        out.parent_index_.push_back(*idx);
      }
    }
    out.imp_floor_ = alg.imp_floor_ & alg.mask(x);
    out.size_ = out.masks_.size();
    out.index_masks();
    out.bottom_ = *out.find(alg.mask(x));
    out.top_ = *out.find(alg.mask(y));
  } else {
    for (Element z = 0; z < alg.size(); ++z) {
      if (alg.leq(x, z) && alg.leq(z, y)) out.parent_index_.push_back(z);
    }
    if (out.parent_index_.size() > cap) {
      throw Error(ErrorKind::CarrierTooLarge, "interval exceeds the carrier cap");
    }
    out.size_ = out.parent_index_.size();
    for (Element z : out.parent_index_) out.labels_.push_back(alg.label(z));
  }
  std::unordered_map<Element, Element> local;
  for (Element i = 0; i < out.size_; ++i) {
    local.emplace(out.parent_index_[i], i);
    if (out.parent_index_[i] == x) out.bottom_ = i;
    if (out.parent_index_[i] == y) out.top_ = i;
  }
  out.index_labels();
  if (out.size_ <= kTableLimit) {
    const auto& pi = out.parent_index_;
    out.fill_tables([&](Element a, Element b) { return local.at(alg.join(pi[a], pi[b])); },
                    [&](Element a, Element b) { return local.at(alg.meet(pi[a], pi[b])); },
                    [&](Element a, Element b) { return local.at(alg.join(alg.imp(pi[a], pi[b]), x)); });
  } else if (!out.poset_) {
    throw Error(ErrorKind::CarrierTooLarge, "untabulated interval without up-set backing");
  }
  return out;
}

FiniteBrouwerAlgebra factor_algebra(const FiniteBrouwerAlgebra& alg, Element x) {
  return interval_algebra(alg, alg.bottom(), x);
}

FiniteBrouwerAlgebra sub_algebra(const FiniteBrouwerAlgebra& alg, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw Error(ErrorKind::NotSubalgebra, "empty carrier");
  if (elements.size() > kTableLimit) throw Error(ErrorKind::CarrierTooLarge, "sub-algebra too large");
  std::unordered_map<Element, Element> local;
  for (Element i = 0; i < elements.size(); ++i) {
    if (elements[i] >= alg.size()) throw Error(ErrorKind::InvalidInput, "element out of range");
    local.emplace(elements[i], i);
  }
  auto at = [&](Element v, const char* what) {
    auto it = local.find(v);
    if (it == local.end()) {
      throw Error(ErrorKind::NotSubalgebra, std::string(what) + " result " + alg.label(v) + " is missing");
    }
    return it->second;
  };
  FiniteBrouwerAlgebra out;
  out.name_ = "sub(" + alg.name_ + ")";
  out.size_ = elements.size();
  out.parent_index_ = elements;
  for (Element e : elements) out.labels_.push_back(alg.label(e));
  if (alg.has_poset()) {
    out.poset_ = alg.poset_;
    out.imp_floor_ = alg.imp_floor_;
    for (Element e : elements) out.masks_.push_back(alg.mask(e));
    out.index_masks();
  }
  out.index_labels();
  out.fill_tables([&](Element a, Element b) { return at(alg.join(elements[a], elements[b]), "join"); },
                  [&](Element a, Element b) { return at(alg.meet(elements[a], elements[b]), "meet"); },
                  [&](Element a, Element b) { return at(alg.imp(elements[a], elements[b]), "implication"); });
  // the least and greatest members; closure under ⊕ and ⊗ makes them unique
  out.bottom_ = 0;
  out.top_ = 0;
  for (Element i = 1; i < out.size_; ++i) {
    out.bottom_ = out.meet(out.bottom_, i);
    out.top_ = out.join(out.top_, i);
  }
  return out;
}

FiniteBrouwerAlgebra closure_subalgebra(const FiniteBrouwerAlgebra& alg, const std::vector<Element>& gens) {
  std::vector<Element> members;
  std::unordered_set<Element> seen;
  std::deque<Element> frontier;
  for (Element g : gens) {
    if (seen.insert(g).second) {
      members.push_back(g);
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    const Element u = frontier.front();
    frontier.pop_front();
    const std::size_t current = members.size();
    for (std::size_t i = 0; i < current; ++i) {
      const Element v = members[i];
      for (Element w : {alg.join(u, v), alg.meet(u, v), alg.imp(u, v), alg.imp(v, u)}) {
        if (seen.insert(w).second) {
          members.push_back(w);
          frontier.push_back(w);
        }
      }
    }
  }
  return sub_algebra(alg, std::move(members));
}

FiniteBrouwerAlgebra AlgebraBuilder::tabulate(std::string name, std::vector<std::string> labels,
                                              Element bottom, Element top, const BinaryOp& join,
                                              const BinaryOp& meet, const BinaryOp& imp) {
  if (labels.size() > kTableLimit) throw Error(ErrorKind::CarrierTooLarge, "tabulated carrier too large");
  FiniteBrouwerAlgebra out;
  out.name_ = std::move(name);
  out.size_ = labels.size();
  out.labels_ = std::move(labels);
  out.bottom_ = bottom;
  out.top_ = top;
  out.index_labels();
  out.fill_tables(join, meet, imp);
  return out;
}

LawReport check_brouwer_laws(const FiniteBrouwerAlgebra& alg) {
  LawReport report;
  const std::size_t n = alg.size();
  const Element zero = alg.bottom();
  const Element one = alg.top();
  auto fail = [&](const std::string& law, std::initializer_list<Element> xs) {
    report.ok = false;
    report.failure = law + " fails at";
    for (Element e : xs) report.failure += " " + alg.label(e);
  };
  for (Element a = 0; a < n && report.ok; ++a) {
    if (alg.join(a, a) != a || alg.meet(a, a) != a) fail("idempotence", {a});
    else if (alg.join(a, zero) != a || alg.meet(a, one) != a) fail("identity", {a});
    else if (alg.join(a, one) != one || alg.meet(a, zero) != zero) fail("bounds", {a});
    for (Element b = 0; b < n && report.ok; ++b) {
      const Element ab = alg.join(a, b);
      const Element mb = alg.meet(a, b);
      if (ab != alg.join(b, a) || mb != alg.meet(b, a)) fail("commutativity", {a, b});
      else if (alg.join(a, mb) != a || alg.meet(a, ab) != a) fail("absorption", {a, b});
      else if (alg.leq(a, b) != (mb == a)) fail("order agreement", {a, b});
      for (Element c = 0; c < n && report.ok; ++c) {
        ++report.triples_checked;
        if (alg.join(ab, c) != alg.join(a, alg.join(b, c))) fail("join associativity", {a, b, c});
        else if (alg.meet(mb, c) != alg.meet(a, alg.meet(b, c))) fail("meet associativity", {a, b, c});
        else if (alg.meet(a, alg.join(b, c)) != alg.join(mb, alg.meet(a, c))) fail("distributivity", {a, b, c});
        else if (alg.leq(alg.imp(a, b), c) != alg.leq(b, alg.join(a, c))) fail("adjunction", {a, b, c});
      }
    }
  }
  return report;
}

}  // namespace brouwer
