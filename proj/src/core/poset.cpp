#include "brouwer/core/poset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "brouwer/core/error.hpp"

namespace brouwer {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxElements) {
    throw Error(ErrorKind::CarrierTooLarge,
                "poset has " + std::to_string(n) + " elements; at most " +
                    std::to_string(kMaxElements) + " are supported");
  }
}

void check_distinct(const std::vector<std::string>& names) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw Error(ErrorKind::DuplicateElement, n);
  }
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Poset::Poset(std::vector<std::string> names, std::vector<ElementSet> up)
    : names_(std::move(names)), up_(std::move(up)), down_(up_.size()) {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    up_[i].for_each([&](std::size_t j) { down_[j].set(i); });
  }
  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), std::size_t{0});
  // i < j strictly implies down(i) ⊊ down(j)
  std::stable_sort(linear_.begin(), linear_.end(), [&](std::size_t a, std::size_t b) {
    return down_[a].count() < down_[b].count();
  });
}

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  check_size(elements.size());
  check_distinct(elements);
  const std::size_t n = elements.size();
  auto lookup = [&](const std::string& name) {
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) throw Error(ErrorKind::UnknownElement, name);
    return static_cast<std::size_t>(it - elements.begin());
  };
  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : covers) {
    const std::size_t a = lookup(lo);
    const std::size_t b = lookup(hi);
    if (a == b) throw Error(ErrorKind::CyclicOrder, lo + " < " + hi);
    up[a].set(b);
  }
  // transitive closure (Warshall on rows)
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up[i].test(j) && up[j].test(i)) {
        throw Error(ErrorKind::CyclicOrder, elements[i] + " and " + elements[j] +
                                                " are mutually below each other");
      }
    }
  }
  return Poset(std::move(elements), std::move(up));
}

Poset Poset::from_up_sets(std::vector<std::string> elements, std::vector<ElementSet> up) {
  check_size(elements.size());
  check_distinct(elements);
  const std::size_t n = elements.size();
  if (up.size() != n) throw Error(ErrorKind::InvalidInput, "relation size mismatch");
  const ElementSet all = ElementSet::prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!up[i].subset_of(all)) throw Error(ErrorKind::UnknownElement, "relation index out of range");
    if (!up[i].test(i)) throw Error(ErrorKind::InvalidInput, "relation not reflexive at " + elements[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (!up[i].test(j)) continue;
      if (i != j && up[j].test(i)) throw Error(ErrorKind::CyclicOrder, elements[i] + ", " + elements[j]);
      if (!up[j].subset_of(up[i])) {
        throw Error(ErrorKind::InvalidInput, "relation not transitive through " + elements[j]);
      }
    }
  }
  return Poset(std::move(elements), std::move(up));
}

std::optional<std::size_t> Poset::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool Poset::is_upset(const ElementSet& s) const {
  bool ok = s.subset_of(all());
  s.for_each([&](std::size_t i) { ok = ok && up_[i].subset_of(s); });
  return ok;
}

bool Poset::is_downset(const ElementSet& s) const {
  bool ok = s.subset_of(all());
  s.for_each([&](std::size_t i) { ok = ok && down_[i].subset_of(s); });
  return ok;
}

ElementSet Poset::upward_closure(const ElementSet& s) const {
  ElementSet r;
  s.for_each([&](std::size_t i) { r |= up_[i]; });
  return r;
}

ElementSet Poset::downward_closure(const ElementSet& s) const {
  ElementSet r;
  s.for_each([&](std::size_t i) { r |= down_[i]; });
  return r;
}

ElementSet Poset::pointwise_implication(const ElementSet& a, const ElementSet& b) const {
  const ElementSet bad = a - b;
  if (bad.empty()) return all();
  // d fails exactly when some successor lies in a \ b
  return all() - downward_closure(bad);
}

std::size_t Poset::relation_size() const {
  std::size_t total = 0;
  for (const auto& u : up_) total += static_cast<std::size_t>(u.count());
  return total;
}

std::string Poset::format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += names_[i];
    first = false;
  });
  return out + "}";
}

Poset parse_poset(std::string_view text) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  bool saw_elements = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line_no) + ": expected 'key:'");
    }
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::istringstream tokens(line.substr(colon + 1));
    std::string tok;
    if (key == "elements") {
      saw_elements = true;
      while (tokens >> tok) {
        if (!is_identifier(tok)) {
          throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line_no) +
                                                   ": bad identifier '" + tok + "'");
        }
        elements.push_back(tok);
      }
    } else if (key == "covers") {
      while (tokens >> tok) {
        auto lt = tok.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == tok.size()) {
          throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line_no) +
                                                   ": expected a<b, got '" + tok + "'");
        }
        covers.emplace_back(tok.substr(0, lt), tok.substr(lt + 1));
      }
    } else {
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!saw_elements) throw Error(ErrorKind::InvalidInput, "missing 'elements:' line");
  return Poset::from_covers(std::move(elements), covers);
}

std::string format_poset(const Poset& p) {
  std::string out = "elements:";
  for (const auto& n : p.names()) out += " " + n;
  out += "\ncovers:";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ElementSet strict_up = p.up(i) - ElementSet::singleton(i);
    strict_up.for_each([&](std::size_t j) {
      // j covers i when nothing lies strictly between
      const ElementSet between = strict_up & (p.down(j) - ElementSet::singleton(j));
      if (between.empty()) out += " " + p.name(i) + "<" + p.name(j);
    });
  }
  return out + "\n";
}

std::vector<ElementSet> enumerate_upsets_between(const Poset& p, ElementSet lower, ElementSet upper,
                                                 std::size_t limit) {
  if (!p.is_upset(lower) || !p.is_upset(upper) || !lower.subset_of(upper)) {
    throw Error(ErrorKind::InvalidInput, "bounds must be nested up-sets");
  }
  // free elements, maximal ones first
  std::vector<std::size_t> order;
  for (auto it = p.linear_extension().rbegin(); it != p.linear_extension().rend(); ++it) {
    if (upper.test(*it) && !lower.test(*it)) order.push_back(*it);
  }
  std::vector<ElementSet> out;
  auto recurse = [&](auto&& self, std::size_t pos, ElementSet current) -> void {
    if (pos == order.size()) {
      if (out.size() >= limit) {
        throw Error(ErrorKind::CarrierTooLarge,
                    "more than " + std::to_string(limit) + " up-sets");
      }
      out.push_back(current);
      return;
    }
    const std::size_t x = order[pos];
    self(self, pos + 1, current);
    ElementSet with = current;
    with.set(x);
    if (p.up(x).subset_of(with)) self(self, pos + 1, with);
  };
  recurse(recurse, 0, lower);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<ElementSet> enumerate_upsets(const Poset& p, std::size_t limit) {
  return enumerate_upsets_between(p, ElementSet{}, p.all(), limit);
}

namespace {

using SmallRelation = std::vector<std::uint64_t>;  // up-set rows, n <= 8

std::uint64_t relation_code(const SmallRelation& up, const std::vector<std::size_t>& perm) {
  // pairs (i, j) with i > j come first so the minimum is naturally labelled
  const std::size_t n = up.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) code = (code << 1) | ((up[perm[i]] >> perm[j]) & 1U);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((up[perm[i]] >> perm[j]) & 1U);
  }
  return code;
}

std::pair<std::uint64_t, SmallRelation> canonical_form(const SmallRelation& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> best_perm = perm;
  do {
    const std::uint64_t c = relation_code(up, perm);
    if (c < best) {
      best = c;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  SmallRelation out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((up[best_perm[i]] >> best_perm[j]) & 1U) out[i] |= std::uint64_t{1} << j;
    }
  }
  return {best, out};
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n == 0 || n > 7) throw Error(ErrorKind::InvalidInput, "poset enumeration supports 1..7 elements");
  std::map<std::uint64_t, SmallRelation> level{{0, SmallRelation{1}}};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::uint64_t, SmallRelation> next;
    for (const auto& [code, up] : level) {
      const std::size_t m = up.size();
      // the new element m sits above a down-closed set of old elements
      for (std::uint64_t below = 0; below < (std::uint64_t{1} << m); ++below) {
        bool down_closed = true;
        for (std::size_t i = 0; i < m && down_closed; ++i) {
          if (!((below >> i) & 1U)) continue;
          for (std::size_t j = 0; j < m; ++j) {
            if (((up[j] >> i) & 1U) && !((below >> j) & 1U)) {
              down_closed = false;
              break;
            }
          }
        }
        if (!down_closed) continue;
        SmallRelation grown = up;
        for (std::size_t i = 0; i < m; ++i) {
          if ((below >> i) & 1U) grown[i] |= std::uint64_t{1} << m;
        }
        grown.push_back(std::uint64_t{1} << m);
        auto [c, canon] = canonical_form(grown);
        next.emplace(c, std::move(canon));
      }
    }
    level = std::move(next);
  }
  std::vector<Poset> out;
  out.reserve(level.size());
  for (const auto& [code, up] : level) {
    std::vector<std::string> names;
    std::vector<ElementSet> rows;
    for (std::size_t i = 0; i < up.size(); ++i) {
      names.push_back("w" + std::to_string(i));
      ElementSet row;
      for (std::size_t j = 0; j < up.size(); ++j) {
        if ((up[i] >> j) & 1U) row.set(j);
      }
      rows.push_back(row);
    }
    out.push_back(Poset::from_up_sets(std::move(names), std::move(rows)));
  }
  return out;
}

}  // namespace brouwer
