#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace brouwer {

/// Largest poset (or degree structure) an ElementSet can index.
inline constexpr std::size_t kMaxElements = 128;

/// Fixed-width membership mask over the elements of a finite poset.
///
/// Up-sets, mass problems and Kripke world-sets are all ElementSets.  Bit i is
/// element i of the backing poset.  The ordering used for canonical carrier
/// order is (cardinality, numeric value), see canonical_less().
class ElementSet {
  std::array<std::uint64_t, 2> words_{};

 public:
  constexpr ElementSet() = default;

  static constexpr ElementSet singleton(std::size_t i) {
    ElementSet s;
    s.set(i);
    return s;
  }

  /// The set {0, ..., n-1}.
  static constexpr ElementSet prefix(std::size_t n) {
    ElementSet s;
    if (n >= 64) {
      s.words_[0] = ~std::uint64_t{0};
      s.words_[1] = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else {
      s.words_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  [[nodiscard]] constexpr bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  constexpr void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  [[nodiscard]] constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  [[nodiscard]] constexpr int count() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  [[nodiscard]] constexpr bool subset_of(const ElementSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }
  [[nodiscard]] constexpr bool intersects(const ElementSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }

  constexpr ElementSet operator|(const ElementSet& o) const {
    ElementSet r;
    r.words_ = {words_[0] | o.words_[0], words_[1] | o.words_[1]};
    return r;
  }
  constexpr ElementSet operator&(const ElementSet& o) const {
    ElementSet r;
    r.words_ = {words_[0] & o.words_[0], words_[1] & o.words_[1]};
    return r;
  }
  constexpr ElementSet operator^(const ElementSet& o) const {
    ElementSet r;
    r.words_ = {words_[0] ^ o.words_[0], words_[1] ^ o.words_[1]};
    return r;
  }
  /// Set difference.
  constexpr ElementSet operator-(const ElementSet& o) const {
    ElementSet r;
    r.words_ = {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
    return r;
  }
  constexpr ElementSet& operator|=(const ElementSet& o) { return *this = *this | o; }
  constexpr ElementSet& operator&=(const ElementSet& o) { return *this = *this & o; }

  constexpr bool operator==(const ElementSet&) const = default;

  /// Numeric comparison, high word first.
  constexpr std::strong_ordering compare_value(const ElementSet& o) const {
    if (auto c = words_[1] <=> o.words_[1]; c != 0) return c;
    return words_[0] <=> o.words_[0];
  }

  /// Lowest member, or kMaxElements when empty.
  [[nodiscard]] constexpr std::size_t first() const {
    if (words_[0] != 0) return static_cast<std::size_t>(std::countr_zero(words_[0]));
    if (words_[1] != 0) return 64 + static_cast<std::size_t>(std::countr_zero(words_[1]));
    return kMaxElements;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  [[nodiscard]] std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  [[nodiscard]] constexpr std::uint64_t word(std::size_t w) const { return words_[w]; }
};

/// Canonical carrier order: by cardinality, then by mask value.
constexpr bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.compare_value(b) < 0;
}

struct CanonicalLess {
  constexpr bool operator()(const ElementSet& a, const ElementSet& b) const {
    return canonical_less(a, b);
  }
};

}  // namespace brouwer

template <>
struct std::hash<brouwer::ElementSet> {
  std::size_t operator()(const brouwer::ElementSet& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
    h ^= s.word(1) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
