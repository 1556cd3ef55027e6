#include "brouwer/degrees/tagged_union.hpp"

#include <algorithm>
#include <deque>

#include "brouwer/core/error.hpp"
#include "brouwer/semantics/evaluate.hpp"

namespace brouwer {

TaggedUnion::TaggedUnion(std::vector<ElementSet> parts) {
  std::sort(parts.begin(), parts.end(), CanonicalLess{});
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool maximal = true;
    // only later (larger or equal-size) parts can contain parts[i]
    for (std::size_t j = i + 1; j < parts.size() && maximal; ++j) {
      if (parts[i].subset_of(parts[j])) maximal = false;
    }
    if (maximal) parts_.push_back(parts[i]);
  }
  if (parts_.empty()) parts_.push_back(ElementSet{});
}

ElementSet TaggedUnion::collapsed() const {
  ElementSet out;
  for (const auto& p : parts_) out |= p;
  return out;
}

std::size_t TaggedUnionHash::operator()(const TaggedUnion& t) const noexcept {
  std::size_t h = t.parts().size();
  for (const auto& p : t.parts()) h = h * 0x100000001B3ULL ^ std::hash<ElementSet>{}(p);
  return h;
}

TaggedUnion TaggedUnionSpace::join(const TaggedUnion& a, const TaggedUnion& b) const {
  std::vector<ElementSet> parts;
  parts.reserve(a.parts().size() * b.parts().size());
  for (const auto& u : a.parts()) {
    for (const auto& v : b.parts()) parts.push_back(u & v);
  }
  return TaggedUnion(std::move(parts));
}

TaggedUnion TaggedUnionSpace::meet(const TaggedUnion& a, const TaggedUnion& b) const {
  std::vector<ElementSet> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return TaggedUnion(std::move(parts));
}

TaggedUnion TaggedUnionSpace::imp(const TaggedUnion& a, const TaggedUnion& b) const {
  TaggedUnion out = bottom();
  for (const auto& u : a.parts()) {
    std::vector<ElementSet> parts;
    for (const auto& v : b.parts()) parts.push_back(poset_->pointwise_implication(u, v));
    out = join(out, TaggedUnion(std::move(parts)));
  }
  return out;
}

bool TaggedUnionSpace::leq(const TaggedUnion& a, const TaggedUnion& b) const {
  return std::all_of(b.parts().begin(), b.parts().end(), [&](const ElementSet& v) {
    return std::any_of(a.parts().begin(), a.parts().end(), [&](const ElementSet& u) { return v.subset_of(u); });
  });
}

std::string TaggedUnionSpace::format(const TaggedUnion& a) const {
  std::string out = "[";
  for (std::size_t i = 0; i < a.parts().size(); ++i) {
    if (i != 0) out += " + ";
    out += poset_->format(a.parts()[i]);
  }
  return out + "]";
}

std::vector<TaggedUnion> tagged_interval(const TaggedUnionSpace& space, const ElementSet& lower,
                                         const TaggedUnion& upper, std::size_t limit) {
  const auto candidates = enumerate_upsets_between(space.poset(), ElementSet{}, lower, limit);
  std::vector<TaggedUnion> out;
  std::vector<ElementSet> chosen;
  // antichains under ⊆, built in candidate order
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) {
      TaggedUnion t(chosen);
      if (space.leq(t, upper)) {
        if (out.size() >= limit) throw Error(ErrorKind::CarrierTooLarge, "tagged interval too large");
        out.push_back(std::move(t));
      }
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const auto& c = candidates[i];
      const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](const ElementSet& s) {
        return s.subset_of(c) || c.subset_of(s);
      });
      if (comparable) continue;
      chosen.push_back(c);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const TaggedUnion& a, const TaggedUnion& b) {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                        b.parts().end(), CanonicalLess{});
  });
  return out;
}

FiniteBrouwerAlgebra::Element TaggedAlgebra::at(const TaggedUnion& t) const {
  const auto it = index.find(t);
  if (it == index.end()) throw Error(ErrorKind::UnknownElement, "value outside the tabulated carrier");
  return it->second;
}

namespace {

template <class Ops>
TaggedAlgebra tabulate_with(const Ops& ops, const TaggedUnionSpace& space, std::vector<TaggedUnion> carrier,
                            std::unordered_map<TaggedUnion, std::size_t, TaggedUnionHash> index) {
  TaggedUnion least = carrier.front(), greatest = carrier.front();
  std::vector<std::string> labels;
  for (const auto& t : carrier) {
    least = ops.meet(least, t);
    greatest = ops.join(greatest, t);
    labels.push_back(space.format(t));
  }
  auto locate = [&](const TaggedUnion& t) {
    const auto it = index.find(t);
    if (it == index.end()) throw Error(ErrorKind::NotSubalgebra, space.format(t) + " leaves the carrier");
    return it->second;
  };
  auto algebra = AlgebraBuilder::tabulate(
      "hull", std::move(labels), locate(least), locate(greatest),
      [&](std::size_t a, std::size_t b) { return locate(ops.join(carrier[a], carrier[b])); },
      [&](std::size_t a, std::size_t b) { return locate(ops.meet(carrier[a], carrier[b])); },
      [&](std::size_t a, std::size_t b) { return locate(ops.imp(carrier[a], carrier[b])); });
  return TaggedAlgebra{std::move(algebra), std::move(carrier), std::move(index)};
}

template <class Ops>
TaggedAlgebra close_with(const Ops& ops, const TaggedUnionSpace& space, const std::vector<TaggedUnion>& seeds,
                         std::size_t budget) {
  std::vector<TaggedUnion> carrier;
  std::unordered_map<TaggedUnion, std::size_t, TaggedUnionHash> index;
  std::deque<std::size_t> frontier;
  auto add = [&](const TaggedUnion& t) {
    if (index.count(t) != 0) return;
    if (carrier.size() >= budget) {
      throw Error(ErrorKind::BudgetExceeded, "generated sub-algebra exceeds " + std::to_string(budget) + " elements");
    }
    index.emplace(t, carrier.size());
    carrier.push_back(t);
    frontier.push_back(carrier.size() - 1);
  };
  for (const auto& t : seeds) add(t);
  if (carrier.empty()) throw Error(ErrorKind::InvalidInput, "no seeds");
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (std::size_t j = 0; j <= i; ++j) {
      const TaggedUnion u = carrier[i], v = carrier[j];
      add(ops.join(u, v));
      add(ops.meet(u, v));
      add(ops.imp(u, v));
      add(ops.imp(v, u));
    }
  }
  return tabulate_with(ops, space, std::move(carrier), std::move(index));
}

}  // namespace

TaggedAlgebra close_tagged(const TaggedUnionSpace& space, const std::vector<TaggedUnion>& seeds,
                           std::size_t budget) {
  return close_with(space, space, seeds, budget);
}

TaggedAlgebra close_tagged_interval(const TaggedUnionSpace& space, const TaggedUnion& lo, const TaggedUnion& hi,
                                    const std::vector<TaggedUnion>& seeds, std::size_t budget) {
  std::vector<TaggedUnion> all{lo, hi};
  all.insert(all.end(), seeds.begin(), seeds.end());
  return close_with(IntervalView<TaggedUnionSpace>(space, lo, hi), space, all, budget);
}

TaggedAlgebra tabulate_tagged_interval(const TaggedUnionSpace& space, const TaggedUnion& lo, const TaggedUnion& hi,
                                       std::vector<TaggedUnion> carrier) {
  if (carrier.empty()) throw Error(ErrorKind::InvalidInput, "empty carrier");
  std::unordered_map<TaggedUnion, std::size_t, TaggedUnionHash> index;
  for (std::size_t i = 0; i < carrier.size(); ++i) index.emplace(carrier[i], i);
  return tabulate_with(IntervalView<TaggedUnionSpace>(space, lo, hi), space, std::move(carrier), std::move(index));
}

}  // namespace brouwer
