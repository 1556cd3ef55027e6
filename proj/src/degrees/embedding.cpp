#include "brouwer/degrees/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "brouwer/core/error.hpp"

namespace brouwer {

using Element = FiniteBrouwerAlgebra::Element;

std::string format_index_set(IndexSet x) {
  std::string out = "{";
  for (std::size_t i = 0; i < 32; ++i) {
    if ((x >> i) & 1U) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  }
  return out + "}";
}

bool is_strong_antichain(const DegreeStructure& d, const ElementSet& ambient, const std::vector<Degree>& fs) {
  if (!d.poset().is_downset(ambient)) throw Error(ErrorKind::NotDownwardClosed, "ambient set is not downward closed");
  for (Degree f : fs) {
    if (f >= d.size() || !ambient.test(f)) {
      throw Error(ErrorKind::MemberOutsideAmbient, (f < d.size() ? d.label(f) : std::to_string(f)) + " is not in the ambient set");
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (i != j && ambient.test(d.join(fs[i], fs[j]))) return false;
    }
  }
  return true;
}

ElementSet AlphaMap::operator()(IndexSet x) const {
  ElementSet out = outside_;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if ((x >> i) & 1U) out |= cones_[i];
  }
  return out;
}

AlphaMap alpha_map_unchecked(const DegreeStructure& d, const ElementSet& ambient, const std::vector<Degree>& fs) {
  std::vector<ElementSet> cones;
  for (Degree f : fs) cones.push_back(d.cone(f));
  return AlphaMap(d.all() - ambient, std::move(cones));
}

AlphaMap alpha_embedding(const DegreeStructure& d, const ElementSet& ambient, const std::vector<Degree>& fs) {
  if (fs.size() > 16) throw Error(ErrorKind::InvalidInput, "at most 16 antichain members are supported");
  if (!is_strong_antichain(d, ambient, fs)) {
    throw Error(ErrorKind::AntichainViolated, "some pairwise join stays inside the ambient set");
  }
  return alpha_map_unchecked(d, ambient, fs);
}

BetaMap beta_embedding(const DegreeStructure& d, const ElementSet& ambient, const std::vector<Degree>& fs,
                       const ElementSet& e_problem, const ElementSet& b_problem) {
  if (!e_problem.subset_of(d.all() - ambient)) {
    throw Error(ErrorKind::ENotInAmbientComplement, "E meets the ambient set");
  }
  if (e_problem.subset_of(b_problem)) throw Error(ErrorKind::EBelowBViolation, "E ≥ B");
  auto alpha = alpha_embedding(d, ambient, fs);
  return BetaMap(std::move(alpha), d.poset().pointwise_implication(e_problem, b_problem));
}

CanonicalReport is_canonical_subset(const FiniteBrouwerAlgebra& alg, const std::vector<Element>& subset) {
  CanonicalReport r;
  const std::set<Element> members(subset.begin(), subset.end());
  const std::size_t n = alg.size();
  auto note = [&](bool& flag, const std::string& what) {
    if (flag && r.detail.empty()) r.detail = what;
    flag = false;
  };
  for (Element a : members) {
    for (Element b = 0; b < n && r.meet_irreducible; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (alg.meet(b, c) == a && b != a && c != a) {
          note(r.meet_irreducible, alg.label(a) + " = " + alg.label(b) + " ⊗ " + alg.label(c));
          break;
        }
      }
    }
    for (Element b : members) {
      if (members.count(alg.join(a, b)) == 0) note(r.closed, "⊕ of " + alg.label(a) + ", " + alg.label(b));
      if (members.count(alg.imp(a, b)) == 0) note(r.closed, "→ of " + alg.label(a) + ", " + alg.label(b));
    }
    for (Element b = 0; b < n && r.distributive; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (alg.imp(a, alg.meet(b, c)) != alg.meet(alg.imp(a, b), alg.imp(a, c))) {
          note(r.distributive, "→ does not distribute at " + alg.label(a) + ", " + alg.label(b) + ", " +
                                   alg.label(c));
          break;
        }
      }
    }
  }
  return r;
}

FiniteBrouwerAlgebra generated_subalgebra(const FiniteBrouwerAlgebra& alg, const std::vector<Element>& gens) {
  const auto report = is_canonical_subset(alg, gens);
  if (!report.ok()) throw Error(ErrorKind::NotCanonical, report.detail);
  std::set<Element> products;
  for (Element g : gens) {
    std::vector<Element> next;
    for (Element p : products) next.push_back(alg.meet(p, g));
    products.insert(g);
    products.insert(next.begin(), next.end());
  }
  return sub_algebra(alg, std::vector<Element>(products.begin(), products.end()));
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteBrouwerAlgebra& a, const FiniteBrouwerAlgebra& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const FiniteBrouwerAlgebra& alg, Element x) {
    std::size_t below = 0, above = 0;
    for (Element y = 0; y < alg.size(); ++y) {
      below += alg.leq(y, x);
      above += alg.leq(x, y);
    }
    return std::pair{below, above};
  };
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::sort(order.begin(), order.end(), [&](Element x, Element y) { return signature(a, x) < signature(a, y); });
  std::vector<std::pair<std::size_t, std::size_t>> sig_b(n);
  for (Element y = 0; y < n; ++y) sig_b[y] = signature(b, y);

  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> to(n, kUnset), from(n, kUnset);
  auto consistent = [&](Element x) {
    for (Element w = 0; w < n; ++w) {
      if (to[w] == kUnset) continue;
      const Element fx = to[x], fw = to[w];
      for (auto [ra, rb] : {std::pair{a.join(x, w), b.join(fx, fw)}, std::pair{a.meet(x, w), b.meet(fx, fw)},
                            std::pair{a.imp(x, w), b.imp(fx, fw)}, std::pair{a.imp(w, x), b.imp(fw, fx)}}) {
        if (to[ra] != kUnset && to[ra] != rb) return false;
        if (from[rb] != kUnset && from[rb] != ra) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    const Element x = order[pos];
    const auto sx = signature(a, x);
    for (Element y = 0; y < n; ++y) {
      if (from[y] != kUnset || sig_b[y] != sx) continue;
      if ((x == a.bottom()) != (y == b.bottom()) || (x == a.top()) != (y == b.top())) continue;
      to[x] = y;
      from[y] = x;
      if (consistent(x) && self(self, pos + 1)) return true;
      to[x] = kUnset;
      from[y] = kUnset;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  for (Element x = 0; x < n; ++x) {
    for (Element w = 0; w < n; ++w) {
      if (b.join(to[x], to[w]) != to[a.join(x, w)] || b.meet(to[x], to[w]) != to[a.meet(x, w)] ||
          b.imp(to[x], to[w]) != to[a.imp(x, w)]) {
        return std::nullopt;
      }
    }
  }
  if (to[a.bottom()] != b.bottom() || to[a.top()] != b.top()) return std::nullopt;
  return to;
}

std::optional<std::vector<Element>> isomorphic_to_bn(const FiniteBrouwerAlgebra& sub, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidN, "n must be at least 1");
  return find_isomorphism(sub, build_bn(n));
}

}  // namespace brouwer
