#include "brouwer/degrees/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "brouwer/core/error.hpp"
#include "brouwer/core/poset.hpp"
#include "brouwer/logic/formula.hpp"

namespace brouwer {

Presentation Presentation::without_trigger(std::size_t index) const {
  Presentation out = *this;
  out.triggers.erase(out.triggers.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
  auto check_name = [&](const std::string& tok, bool allow_top) {
    if (tok == kTopName) {
      if (!allow_top) throw Error(ErrorKind::InvalidInput, where() + "'top' is reserved");
      return;
    }
    if (!is_identifier(tok)) throw Error(ErrorKind::InvalidInput, where() + "bad identifier '" + tok + "'");
  };
  bool saw_generators = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::InvalidInput, where() + "expected 'key:'");
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::istringstream tokens(line.substr(colon + 1));
    std::vector<std::string> toks;
    for (std::string t; tokens >> t;) toks.push_back(t);
    if (key == "generators") {
      saw_generators = true;
      for (const auto& t : toks) {
        check_name(t, false);
        p.generators.push_back(t);
      }
    } else if (key == "below") {
      for (const auto& t : toks) {
        const auto at = t.find("<=");
        if (at == std::string::npos || at == 0 || at + 2 == t.size()) {
          throw Error(ErrorKind::InvalidInput, where() + "expected g<=h, got '" + t + "'");
        }
        std::string lo = t.substr(0, at), hi = t.substr(at + 2);
        check_name(lo, true);
        check_name(hi, true);
        p.below.emplace_back(lo, hi);
      }
    } else if (key == "jump" || key == "keep") {
      if (toks.empty()) throw Error(ErrorKind::InvalidInput, where() + "empty generator set");
      for (const auto& t : toks) check_name(t, false);
      (key == "jump" ? p.triggers : p.keep).push_back(toks);
    } else {
      throw Error(ErrorKind::InvalidInput, where() + "unknown key '" + key + "'");
    }
  }
  if (!saw_generators) throw Error(ErrorKind::InvalidInput, "missing 'generators:' line");
  std::unordered_set<std::string> known(p.generators.begin(), p.generators.end());
  if (known.size() != p.generators.size()) throw Error(ErrorKind::DuplicateElement, "repeated generator");
  auto check_known = [&](const std::string& g) {
    if (g != kTopName && known.count(g) == 0) throw Error(ErrorKind::UnknownElement, g);
  };
  for (const auto& [lo, hi] : p.below) {
    check_known(lo);
    check_known(hi);
  }
  for (const auto& t : p.triggers) std::for_each(t.begin(), t.end(), check_known);
  for (const auto& t : p.keep) std::for_each(t.begin(), t.end(), check_known);
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  if (!p.below.empty()) {
    out += "below:";
    for (const auto& [lo, hi] : p.below) out += " " + lo + "<=" + hi;
    out += "\n";
  }
  for (const auto& t : p.triggers) {
    out += "jump:";
    for (const auto& g : t) out += " " + g;
    out += "\n";
  }
  for (const auto& t : p.keep) {
    out += "keep:";
    for (const auto& g : t) out += " " + g;
    out += "\n";
  }
  return out;
}

namespace {

// Down-sets of a small poset as bitmasks over its elements, ascending.
std::vector<std::uint32_t> downsets(const Poset& order) {
  std::vector<std::uint32_t> out;
  const std::size_t n = order.size();
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    ElementSet e;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1U) e.set(i);
    }
    if (order.is_downset(e)) out.push_back(s);
  }
  return out;
}

std::uint32_t permute(std::uint32_t s, const std::vector<std::size_t>& perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((s >> i) & 1U) out |= 1U << perm[i];
  }
  return out;
}

}  // namespace

std::vector<Presentation> enumerate_small_presentations(std::size_t max_generators) {
  if (max_generators > 5) throw Error(ErrorKind::InvalidInput, "at most 5 generators are enumerated");
  std::vector<Presentation> out;
  for (std::size_t g = 1; g <= max_generators; ++g) {
    for (const Poset& order : enumerate_posets(g)) {
      const auto downs = downsets(order);
      std::vector<std::size_t> down_index(1U << g, 0);
      for (std::size_t i = 0; i < downs.size(); ++i) down_index[downs[i]] = i;
      // always kept: the empty set and each principal down-set
      std::uint64_t required = 1;
      for (std::size_t i = 0; i < g; ++i) {
        std::uint32_t principal = 0;
        order.down(i).for_each([&](std::size_t j) { principal |= 1U << j; });
        required |= std::uint64_t{1} << down_index[principal];
      }
      std::vector<std::size_t> optional;
      for (std::size_t i = 0; i < downs.size(); ++i) {
        if (!((required >> i) & 1U)) optional.push_back(i);
      }
      std::vector<std::vector<std::size_t>> automorphisms;
      std::vector<std::size_t> perm(g);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      do {
        bool ok = true;
        for (std::size_t i = 0; i < g && ok; ++i) {
          for (std::size_t j = 0; j < g && ok; ++j) ok = order.leq(i, j) == order.leq(perm[i], perm[j]);
        }
        if (ok) automorphisms.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));

      std::set<std::uint64_t> seen;
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << optional.size()); ++pick) {
        std::uint64_t family = required;
        for (std::size_t b = 0; b < optional.size(); ++b) {
          if ((pick >> b) & 1U) family |= std::uint64_t{1} << optional[b];
        }
        // the kept family must be closed under taking smaller down-sets
        bool closed = true;
        for (std::size_t i = 0; i < downs.size() && closed; ++i) {
          if (!((family >> i) & 1U)) continue;
          for (std::size_t j = 0; j < downs.size() && closed; ++j) {
            if ((downs[j] & ~downs[i]) == 0 && !((family >> j) & 1U)) closed = false;
          }
        }
        if (!closed) continue;
        std::uint64_t canonical = family;
        for (const auto& a : automorphisms) {
          std::uint64_t image = 0;
          for (std::size_t i = 0; i < downs.size(); ++i) {
            if ((family >> i) & 1U) image |= std::uint64_t{1} << down_index[permute(downs[i], a)];
          }
          canonical = std::min(canonical, image);
        }
        if (!seen.insert(canonical).second) continue;

        Presentation p;
        for (std::size_t i = 0; i < g; ++i) p.generators.push_back("g" + std::to_string(i + 1));
        for (std::size_t i = 0; i < g; ++i) {
          for (std::size_t j = 0; j < g; ++j) {
            if (i != j && order.leq(i, j)) p.below.emplace_back(p.generators[i], p.generators[j]);
          }
        }
        // triggers: the minimal down-sets outside the family
        for (std::size_t i = 0; i < downs.size(); ++i) {
          if ((family >> i) & 1U) continue;
          bool minimal = true;
          for (std::size_t j = 0; j < downs.size() && minimal; ++j) {
            if (j != i && !((family >> j) & 1U) && (downs[j] & ~downs[i]) == 0) minimal = false;
          }
          if (!minimal) continue;
          std::vector<std::string> trigger;
          for (std::size_t b = 0; b < g; ++b) {
            if ((downs[i] >> b) & 1U) trigger.push_back(p.generators[b]);
          }
          p.triggers.push_back(std::move(trigger));
        }
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace brouwer
