#include "brouwer/degrees/degree_structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

#include "brouwer/core/error.hpp"

namespace brouwer {

std::uint64_t DegreeStructure::close(std::uint64_t s) const {
  std::uint64_t out = s;
  for (std::size_t i = 0; i < closure_.size(); ++i) {
    if ((s >> i) & 1U) out |= closure_[i];
  }
  return out;
}

bool DegreeStructure::jumps(std::uint64_t closed) const {
  if ((closed & collapsing_) != 0) return true;
  return std::any_of(triggers_.begin(), triggers_.end(),
                     [&](std::uint64_t t) { return (t & ~closed) == 0; });
}

DegreeStructure::Degree DegreeStructure::locate(std::uint64_t s) const {
  const std::uint64_t c = close(s);
  if (jumps(c)) return top();
  auto it = std::find(sets_.begin(), sets_.end(), c);
  return static_cast<Degree>(it - sets_.begin());
}

DegreeStructure::Degree DegreeStructure::of(const std::vector<std::string>& names) const {
  std::uint64_t s = 0;
  for (const auto& name : names) {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) throw Error(ErrorKind::UnknownElement, name);
    s |= std::uint64_t{1} << (it - generators_.begin());
  }
  return locate(s);
}

DegreeStructure DegreeStructure::from_presentation(const Presentation& p) {
  DegreeStructure d;
  const std::size_t g = p.generators.size();
  if (g > 64) throw Error(ErrorKind::CarrierTooLarge, "at most 64 generators are supported");
  d.generators_ = p.generators;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g; ++i) {
    if (p.generators[i] == kTopName) throw Error(ErrorKind::InvalidInput, "'top' is reserved");
    if (!index.emplace(p.generators[i], i).second) throw Error(ErrorKind::DuplicateElement, p.generators[i]);
  }
  auto bit_of = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorKind::UnknownElement, name);
    return std::uint64_t{1} << it->second;
  };
  auto mask_of = [&](const std::vector<std::string>& names) {
    std::uint64_t m = 0;
    for (const auto& n : names) m |= bit_of(n);
    return m;
  };

  d.closure_.assign(g, 0);
  for (std::size_t i = 0; i < g; ++i) d.closure_[i] = std::uint64_t{1} << i;
  for (const auto& [lo, hi] : p.below) {
    if (hi == kTopName) continue;  // everything is below top
    if (lo == kTopName) {
      d.collapsing_ |= bit_of(hi);
      continue;
    }
    d.closure_[std::countr_zero(bit_of(hi))] |= bit_of(lo);
  }
  // transitive closure of the preorder
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < g; ++i) {
      const std::uint64_t c = d.close(d.closure_[i]);
      if (c != d.closure_[i]) {
        d.closure_[i] = c;
        changed = true;
      }
    }
  }
  for (const auto& t : p.triggers) {
    if (t.empty()) throw Error(ErrorKind::InvalidInput, "empty jump trigger");
    d.triggers_.push_back(mask_of(t));
  }

  for (std::size_t i = 0; i < g; ++i) {
    if (d.jumps(d.closure_[i])) {
      throw Error(ErrorKind::InconsistentPresentation, "generator " + p.generators[i] + " is forced to top");
    }
  }
  for (const auto& k : p.keep) {
    if (d.jumps(d.close(mask_of(k)))) {
      std::string names;
      for (const auto& n : k) names += (names.empty() ? "" : " ") + n;
      throw Error(ErrorKind::InconsistentPresentation, "join of {" + names + "} is forced to top");
    }
  }

  // breadth-first over joins with single generators
  std::vector<std::uint64_t> found{0};
  std::deque<std::uint64_t> frontier{0};
  std::unordered_map<std::uint64_t, bool> seen{{0, true}};
  while (!frontier.empty()) {
    const std::uint64_t s = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < g; ++i) {
      const std::uint64_t t = s | d.closure_[i];
      if (seen.count(t) != 0 || d.jumps(t)) continue;
      seen.emplace(t, true);
      if (found.size() + 1 >= kMaxElements) {
        throw Error(ErrorKind::CarrierTooLarge, "more than " + std::to_string(kMaxElements) + " degrees");
      }
      found.push_back(t);
      frontier.push_back(t);
    }
  }
  std::sort(found.begin(), found.end(), [](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  d.sets_ = std::move(found);

  const std::size_t n = d.size();
  std::unordered_map<std::uint64_t, Degree> where;
  for (Degree i = 0; i < d.sets_.size(); ++i) where.emplace(d.sets_[i], i);
  d.join_.assign(n * n, d.top());
  for (Degree a = 0; a + 1 < n; ++a) {
    for (Degree b = 0; b + 1 < n; ++b) {
      const std::uint64_t u = d.sets_[a] | d.sets_[b];
      if (!d.jumps(u)) d.join_[a * n + b] = where.at(u);
    }
  }

  std::vector<std::string> names;
  std::vector<ElementSet> up(n);
  for (Degree a = 0; a + 1 < n; ++a) {
    std::string label = "{";
    for (std::size_t i = 0; i < g; ++i) {
      if ((d.sets_[a] >> i) & 1U) label += (label.size() > 1 ? "," : "") + p.generators[i];
    }
    names.push_back(label + "}");
  }
  names.emplace_back(kTopName);
  for (Degree a = 0; a < n; ++a) {
    for (Degree b = 0; b < n; ++b) {
      if (d.join_[a * n + b] == b) up[a].set(b);
    }
  }
  d.poset_ = Poset::from_up_sets(std::move(names), std::move(up));
  return d;
}

std::string DegreeStructure::check_invariants() const {
  const std::size_t n = size();
  for (Degree a = 0; a < n; ++a) {
    if (join(a, a) != a) return "join not idempotent at " + label(a);
    if (join(zero(), a) != a) return "zero is not an identity at " + label(a);
    if (join(top(), a) != top()) return "top does not absorb " + label(a);
    for (Degree b = 0; b < n; ++b) {
      if (join(a, b) != join(b, a)) return "join not commutative at " + label(a) + ", " + label(b);
      for (Degree c = 0; c < n; ++c) {
        if (join(join(a, b), c) != join(a, join(b, c))) {
          return "join not associative at " + label(a) + ", " + label(b) + ", " + label(c);
        }
      }
    }
  }
  return {};
}

FiniteBrouwerAlgebra muchnik_algebra(const DegreeStructure& d, std::size_t cap) {
  return upset_brouwer_algebra(d.poset(), cap, "muchnik");
}

}  // namespace brouwer
