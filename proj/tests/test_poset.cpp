#include <doctest.h>

#include <random>

#include "brouwer/core/error.hpp"
#include "brouwer/core/poset.hpp"
#include "oracles.hpp"

using namespace brouwer;

namespace {

ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

Poset v_poset() { return Poset::from_covers({"r", "x", "y"}, {{"r", "x"}, {"r", "y"}}); }

Poset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(names[i - 1], names[i]);
  }
  return Poset::from_covers(names, covers);
}

}  // namespace

TEST_CASE("from_covers builds the closure") {
  const auto one = Poset::from_covers({"a"}, {});
  CHECK(one.size() == 1);
  CHECK(one.relation_size() == 1);
  CHECK(one.leq(0, 0));

  const auto v = v_poset();
  CHECK(v.relation_size() == 5);
  CHECK(v.leq(0, 1));
  CHECK(v.leq(0, 2));
  CHECK_FALSE(v.leq(1, 2));

  const auto c = chain(4);
  CHECK(c.relation_size() == 10);
  CHECK(c.leq(0, 3));
}

TEST_CASE("from_covers rejects bad input") {
  CHECK(kind_of([] { Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::CyclicOrder);
  CHECK(kind_of([] { Poset::from_covers({"a"}, {{"a", "a"}}); }) == ErrorKind::CyclicOrder);
  CHECK(kind_of([] { Poset::from_covers({"a", "a"}, {}); }) == ErrorKind::DuplicateElement);
  CHECK(kind_of([] { Poset::from_covers({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownElement);
}

TEST_CASE("from_up_sets validates the relation") {
  const auto bad = [] {
    Poset::from_up_sets({"a", "b"}, {ElementSet::prefix(2), ElementSet::prefix(2)});
  };
  CHECK_THROWS_AS(bad(), Error);
}

TEST_CASE("poset text format round trips") {
  const auto p = parse_poset("# a fork\nelements: r x y\ncovers: r<x r<y\n");
  CHECK(p == v_poset());
  CHECK(parse_poset(format_poset(p)) == p);
  CHECK_THROWS_AS(parse_poset("elements: a 1b\n"), Error);
  CHECK_THROWS_AS(parse_poset("elements: a\ncovers: a<b\n"), Error);
}

TEST_CASE("enumerate_upsets examples") {
  CHECK(enumerate_upsets(Poset::from_covers({"a"}, {})).size() == 2);
  CHECK(enumerate_upsets(v_poset()).size() == 5);
  CHECK(enumerate_upsets(chain(2)).size() == 3);
}

TEST_CASE("enumerate_upsets is sorted by cardinality then mask") {
  const auto ups = enumerate_upsets(v_poset());
  for (std::size_t i = 1; i < ups.size(); ++i) CHECK(canonical_less(ups[i - 1], ups[i]));
  CHECK(ups.front().empty());
  CHECK(ups.back() == v_poset().all());
}

TEST_CASE("enumerate_upsets agrees with power-set filtering on every poset up to 6 elements") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      auto expected = oracle::upsets_by_filter(p);
      std::sort(expected.begin(), expected.end(), CanonicalLess{});
      REQUIRE(enumerate_upsets(p) == expected);
    }
  }
}

TEST_CASE("enumerate_upsets agrees with filtering on random posets of 7 and 8 elements") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 7 + trial % 2;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng() % 4 == 0) covers.emplace_back(names[i], names[j]);
      }
    }
    const auto p = Poset::from_covers(names, covers);
    CHECK(enumerate_upsets(p).size() == oracle::upsets_by_filter(p).size());
  }
}

TEST_CASE("enumerate_upsets_between respects bounds and the limit") {
  const auto p = v_poset();
  const auto top_only = ElementSet::singleton(1);
  const auto ups = enumerate_upsets_between(p, top_only, p.all());
  CHECK(ups.size() == 3);
  for (const auto& u : ups) CHECK(top_only.subset_of(u));
  CHECK_THROWS_AS(enumerate_upsets_between(p, {}, p.all(), 2), Error);
}

TEST_CASE("enumerate_posets counts isomorphism classes") {
  const std::size_t expected[] = {1, 2, 5, 16, 63, 318};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_posets(n).size() == expected[n - 1]);
}

TEST_CASE("every enumerated poset is a partial order") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      for (std::size_t a = 0; a < n; ++a) {
        CHECK(p.leq(a, a));
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) CHECK_FALSE((p.leq(a, b) && p.leq(b, a)));
          for (std::size_t c = 0; c < n; ++c) {
            if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("pointwise implication is the largest up-set avoiding the difference") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const auto ups = enumerate_upsets(p);
      for (const auto& a : ups) {
        for (const auto& b : ups) REQUIRE(p.pointwise_implication(a, b) == oracle::implication_by_scan(p, a, b));
      }
    }
  }
}

TEST_CASE("closures and linear extension") {
  const auto p = v_poset();
  CHECK(p.upward_closure(ElementSet::singleton(0)) == p.all());
  CHECK(p.downward_closure(ElementSet::singleton(1)) == (ElementSet::singleton(0) | ElementSet::singleton(1)));
  CHECK(p.is_upset(ElementSet::singleton(2)));
  CHECK_FALSE(p.is_upset(ElementSet::singleton(0)));
  const auto& order = p.linear_extension();
  CHECK(order.front() == 0);
  CHECK(p.format(ElementSet::singleton(1) | ElementSet::singleton(2)) == "{x,y}");
}
