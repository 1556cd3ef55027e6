#include <doctest.h>

#include "brouwer/core/error.hpp"
#include "brouwer/logic/formula.hpp"

using namespace brouwer;

namespace {

Formula v(const char* name) { return Formula::var(name); }

bool has_kind(const Formula& f, Formula::Kind k) {
  if (f.kind() == k) return true;
  return f.is_binary() && (has_kind(f.left(), k) || has_kind(f.right(), k));
}

}  // namespace

TEST_CASE("parse examples") {
  const auto p = v("p");
  CHECK(parse_formula("~p | ~~p") == Formula::disj(Formula::neg(p), Formula::neg(Formula::neg(p))));
  CHECK(parse_formula("p -> q -> r") == Formula::implies(p, Formula::implies(v("q"), v("r"))));
  CHECK(parse_formula("p & q | r") == Formula::disj(Formula::conj(p, v("q")), v("r")));
  CHECK(parse_formula("~p & q") == Formula::conj(Formula::neg(p), v("q")));
  CHECK(parse_formula("F") == Formula::bottom());
  CHECK(parse_formula("(p -> q) -> r") == Formula::implies(Formula::implies(p, v("q")), v("r")));
  CHECK(parse_formula("p | q | r") == Formula::disj(Formula::disj(p, v("q")), v("r")));
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_formula("p & | q");
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_formula(""), SyntaxError);
  CHECK_THROWS_AS(parse_formula("(p"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p q"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p -> "), SyntaxError);
}

TEST_CASE("variables must be identifiers other than F") {
  CHECK_THROWS_AS(Formula::var("F"), Error);
  CHECK_THROWS_AS(Formula::var("1p"), Error);
  CHECK(is_identifier("x_1"));
  CHECK_FALSE(is_identifier("_x"));
}

TEST_CASE("printing uses minimal parentheses and negation sugar") {
  CHECK(to_string(parse_formula("~p | ~~p")) == "~p | ~~p");
  CHECK(to_string(parse_formula("(p -> q) -> p")) == "(p -> q) -> p");
  CHECK(to_string(parse_formula("p -> (q -> p)")) == "p -> q -> p");
  CHECK(to_string(parse_formula("(p | q) & r")) == "(p | q) & r");
  CHECK(to_string(parse_formula("~(p & q)")) == "~(p & q)");
  CHECK(to_string(parse_formula("F -> p")) == "F -> p");
}

TEST_CASE("parse after print is the identity on sampled trees") {
  const std::vector<std::string> vars{"p", "q", "r"};
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto f = sample_formula(seed, seed % 9, vars);
    REQUIRE(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("positify examples") {
  const auto phi = parse_formula("~p | ~~p");
  const auto expected = parse_formula("(p -> p & q) | ((p -> p & q) -> p & q)");
  CHECK(positify(phi, "q") == expected);
  CHECK(positify(parse_formula("p -> q"), "r") == parse_formula("p -> q"));
  CHECK(positify(Formula::bottom(), "x1") == v("x1"));
  CHECK_THROWS_AS(positify(phi, "p"), Error);
}

TEST_CASE("positify output is positive and adds exactly the fresh variable") {
  const std::vector<std::string> vars{"p", "q"};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto f = sample_formula(seed, 1 + seed % 7, vars);
    const auto fresh = fresh_variable(f);
    const auto g = positify(f, fresh);
    CHECK(is_positive(g));
    auto expected = variables(f);
    if (!is_positive(f)) expected.insert(fresh);
    CHECK(variables(g) == expected);
  }
}

TEST_CASE("is_positive") {
  CHECK(is_positive(parse_formula("p -> q | p")));
  CHECK_FALSE(is_positive(parse_formula("~p")));
}

TEST_CASE("fresh_variable avoids the formula's variables") {
  CHECK(fresh_variable(parse_formula("p")) == "q");
  CHECK(fresh_variable(parse_formula("p & q & r & s & t")) == "x1");
}

TEST_CASE("sample_formula") {
  const std::vector<std::string> p{"p"};
  const auto atom = sample_formula(7, 0, p);
  CHECK((atom == v("p") || atom == Formula::bottom()));
  CHECK(sample_formula(42, 5, {"p", "q"}) == sample_formula(42, 5, {"p", "q"}));
  for (std::uint64_t seed = 0; seed < 200; ++seed) CHECK(sample_formula(seed, 6, {"p", "q"}).connectives() == 6);

  bool seen_and = false, seen_or = false, seen_imp = false, seen_bottom = false;
  std::size_t connectives[3] = {0, 0, 0};
  auto count = [&](auto&& self, const Formula& f) -> void {
    if (!f.is_binary()) return;
    ++connectives[static_cast<int>(f.kind()) - static_cast<int>(Formula::Kind::And)];
    self(self, f.left());
    self(self, f.right());
  };
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto f = sample_formula(seed, 6, {"p", "q"});
    seen_and |= has_kind(f, Formula::Kind::And);
    seen_or |= has_kind(f, Formula::Kind::Or);
    seen_imp |= has_kind(f, Formula::Kind::Implies);
    seen_bottom |= has_kind(f, Formula::Kind::Bottom);
    count(count, f);
  }
  CHECK((seen_and && seen_or && seen_imp && seen_bottom));
  // uniform over three connectives: 20000 each in expectation
  for (std::size_t c : connectives) CHECK((c > 19000 && c < 21000));
}
