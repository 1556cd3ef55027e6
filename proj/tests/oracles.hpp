#pragma once

// Brute-force reference computations used to cross-check the library.

#include <cstdint>
#include <vector>

#include "brouwer/core/poset.hpp"

namespace oracle {

/// Every subset of p's elements that is upward closed, found by filtering
/// the full power set.
inline std::vector<brouwer::ElementSet> upsets_by_filter(const brouwer::Poset& p) {
  std::vector<brouwer::ElementSet> out;
  const std::size_t n = p.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.leq(i, j) && !((mask >> j) & 1U)) closed = false;
      }
    }
    if (!closed) continue;
    brouwer::ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s |= brouwer::ElementSet::singleton(i);
    }
    out.push_back(s);
  }
  return out;
}

/// Largest up-set C with a ∩ C ⊆ b, by scanning every up-set.
inline brouwer::ElementSet implication_by_scan(const brouwer::Poset& p, const brouwer::ElementSet& a,
                                               const brouwer::ElementSet& b) {
  brouwer::ElementSet best;
  for (const auto& c : upsets_by_filter(p)) {
    if ((a & c).subset_of(b) && best.subset_of(c)) best = c;
  }
  return best;
}

}  // namespace oracle
