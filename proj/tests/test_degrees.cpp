#include <doctest.h>

#include <map>

#include "brouwer/core/error.hpp"
#include "brouwer/degrees/degree_structure.hpp"
#include "brouwer/degrees/embedding.hpp"
#include "brouwer/degrees/presentation.hpp"
#include "brouwer/degrees/tagged_union.hpp"
#include "brouwer/semantics/theory.hpp"

using namespace brouwer;
using Element = FiniteBrouwerAlgebra::Element;

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

DegreeStructure structure(const char* text) { return DegreeStructure::from_presentation(parse_presentation(text)); }

}  // namespace

TEST_CASE("presentation text round trips") {
  const char* text =
      "# two antichain generators\n"
      "generators: a1 a2 b1 b2\n"
      "below: a1<=b1\n"
      "jump: b1 b2\n"
      "jump: b1 a2\n";
  const auto p = parse_presentation(text);
  CHECK(p.generators.size() == 4);
  CHECK(p.below.size() == 1);
  CHECK(p.triggers.size() == 2);
  const auto again = parse_presentation(format_presentation(p));
  CHECK(again.generators == p.generators);
  CHECK(again.below == p.below);
  CHECK(again.triggers == p.triggers);
}

TEST_CASE("presentation errors") {
  CHECK(kind_of([] { parse_presentation("generators: a\njump: a z\n"); }) == ErrorKind::UnknownElement);
  CHECK(kind_of([] { parse_presentation("generators: a a\n"); }) == ErrorKind::DuplicateElement);
  CHECK(kind_of([] { parse_presentation("generators: top\n"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_presentation("jump: a\n"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_presentation("generators: a\nbelow: a<b\n"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("degree structure examples") {
  const auto single = structure("generators: a\n");
  CHECK(single.size() == 3);
  CHECK(single.label(single.zero()) == "{}");
  CHECK(single.label(single.generator("a")) == "{a}");
  CHECK(single.label(single.top()) == "top");

  const auto pair = structure("generators: b1 b2\njump: b1 b2\n");
  CHECK(pair.size() == 4);
  CHECK(pair.join(pair.generator("b1"), pair.generator("b2")) == pair.top());

  CHECK(kind_of([] { structure("generators: a\nbelow: top<=a\n"); }) == ErrorKind::InconsistentPresentation);
  CHECK(kind_of([] { structure("generators: a b\njump: a b\nkeep: a b\n"); }) ==
        ErrorKind::InconsistentPresentation);
}

TEST_CASE("below relations close generator sets") {
  const auto d = structure("generators: a b\nbelow: a<=b\n");
  // {}, {a}, {a,b}, top
  CHECK(d.size() == 4);
  CHECK(d.leq(d.generator("a"), d.generator("b")));
  CHECK(d.generator_set(d.generator("b")) == 3U);
}

TEST_CASE("every small presentation yields a valid join-semilattice") {
  const auto all = enumerate_small_presentations(4);
  CHECK(all.size() > 50);
  for (const auto& p : all) {
    const auto d = DegreeStructure::from_presentation(p);
    CHECK_MESSAGE(d.check_invariants().empty(), format_presentation(p));
    for (Degree a = 0; a < d.size(); ++a) {
      CHECK(d.leq(d.zero(), a));
      CHECK(d.leq(a, d.top()));
    }
  }
}

TEST_CASE("muchnik algebra examples") {
  const auto chain = structure("generators: a\n");
  const auto alg = muchnik_algebra(chain);
  CHECK(alg.size() == 4);
  CHECK(alg.find(chain.cone(chain.zero())) == alg.bottom());
  for (Degree g = 0; g < chain.size(); ++g) CHECK(alg.find(chain.cone(g)).has_value());
}

TEST_CASE("the weak excluded middle holds in every small muchnik algebra") {
  const auto wlem = parse_formula("~p | ~~p");
  for (const auto& p : enumerate_small_presentations(4)) {
    CHECK(in_theory(muchnik_algebra(DegreeStructure::from_presentation(p)), wlem));
  }
}

TEST_CASE("up-set space matches the muchnik algebra") {
  const auto d = structure("generators: a b c\njump: a b\nbelow: a<=c\n");
  const auto alg = muchnik_algebra(d);
  const UpSetSpace space(d.poset());
  for (Element x = 0; x < alg.size(); ++x) {
    for (Element y = 0; y < alg.size(); ++y) {
      CHECK(space.join(alg.mask(x), alg.mask(y)) == alg.mask(alg.join(x, y)));
      CHECK(space.meet(alg.mask(x), alg.mask(y)) == alg.mask(alg.meet(x, y)));
      CHECK(space.imp(alg.mask(x), alg.mask(y)) == alg.mask(alg.imp(x, y)));
    }
  }
}

TEST_CASE("is_strong_antichain") {
  const auto d = structure("generators: b1 b2 c\njump: b1 b2\n");
  const ElementSet ambient = d.all() - d.cone(d.top());
  const Degree b1 = d.generator("b1"), b2 = d.generator("b2"), c = d.generator("c");
  CHECK(is_strong_antichain(d, ambient, {b1, b2}));
  CHECK_FALSE(is_strong_antichain(d, ambient, {b1, c}));
  CHECK(is_strong_antichain(d, ambient, {c}));
  CHECK(kind_of([&] { is_strong_antichain(d, d.cone(b1), {b1}); }) == ErrorKind::NotDownwardClosed);
  CHECK(kind_of([&] { is_strong_antichain(d, ambient, {d.top()}); }) == ErrorKind::MemberOutsideAmbient);
}

TEST_CASE("alpha on a two-element antichain") {
  const auto d = structure("generators: b1 b2\njump: b1 b2\n");
  const ElementSet ambient = d.all() - d.cone(d.top());
  const std::vector<Degree> fs{d.generator("b1"), d.generator("b2")};
  const auto alpha = alpha_embedding(d, ambient, fs);
  CHECK(alpha(0) == d.all() - ambient);
  CHECK(alpha(3) == ((d.all() - ambient) | d.cone(fs[0]) | d.cone(fs[1])));

  const UpSetSpace space(d.poset());
  const IntervalView<UpSetSpace> interval(space, alpha(3), alpha(0));
  for (IndexSet x = 0; x < 4; ++x) {
    for (IndexSet y = 0; y < 4; ++y) CHECK(interval.imp(alpha(x), alpha(y)) == alpha((3 & ~x) | y));
  }
  const auto report = verify_usl_embedding(alpha, 2, space, alpha(3), alpha(0));
  CHECK(report.all());
  CHECK_FALSE(report.counterexample.has_value());

  const auto single = verify_usl_embedding(alpha_embedding(d, ambient, {fs[0]}), 1, space, alpha(1), alpha(0));
  CHECK(single.all());

  CHECK(kind_of([&] { alpha_embedding(d, d.all(), fs); }) == ErrorKind::AntichainViolated);
}

TEST_CASE("a failing embedding reports a reproducible counterexample") {
  const auto d = structure("generators: b1 b2\n");
  const ElementSet ambient = d.all() - d.cone(d.top());
  const auto alpha = alpha_map_unchecked(d, ambient, {d.generator("b1"), d.generator("b2")});
  const UpSetSpace space(d.poset());
  const auto report = verify_usl_embedding(alpha, 2, space, alpha(3), alpha(0));
  CHECK_FALSE(report.all());
  REQUIRE(report.counterexample.has_value());
  const auto [x, y, details] = *report.counterexample;
  CHECK_FALSE(report.preserves_join);
  CHECK_FALSE(details.empty());
  const IntervalView<UpSetSpace> interval(space, alpha(3), alpha(0));
  const bool reproduces = alpha(x & y) != space.join(alpha(x), alpha(y)) ||
                          alpha((3 & ~x) | y) != interval.imp(alpha(x), alpha(y)) ||
                          (x != y && alpha(x) == alpha(y));
  CHECK(reproduces);
}

TEST_CASE("beta preconditions") {
  const auto d = structure("generators: b1 b2 e1\njump: b1 b2\njump: b1 e1\njump: b2 e1\n");
  const ElementSet outside = d.cone(d.top()) | d.cone(d.generator("e1"));
  const ElementSet ambient = d.all() - outside;
  const std::vector<Degree> fs{d.generator("b1"), d.generator("b2")};
  const ElementSet e = d.cone(d.generator("e1")), b = d.cone(d.top());
  const auto beta = beta_embedding(d, ambient, fs, e, b);
  const UpSetSpace space(d.poset());
  for (IndexSet x = 0; x < 4; ++x) CHECK(beta.collapsed(x) == (beta.alpha()(x) | space.imp(e, b)));
  CHECK(kind_of([&] { beta_embedding(d, ambient, fs, b, e); }) == ErrorKind::EBelowBViolation);
  CHECK(kind_of([&] { beta_embedding(d, ambient, fs, d.cone(fs[0]), b); }) == ErrorKind::ENotInAmbientComplement);
}

TEST_CASE("canonical subsets") {
  const auto b2 = build_bn(2);
  const Element u1 = *b2.find_label("{{1}}"), u2 = *b2.find_label("{{2}}"), u3 = *b2.find_label("{{1},{2}}");
  // u3 = u1 ⊗ u2 is meet-reducible
  const auto reducible = is_canonical_subset(b2, {u3});
  CHECK_FALSE(reducible.meet_irreducible);
  const auto open = is_canonical_subset(b2, {u1});
  CHECK_FALSE(open.closed);
  const auto range = is_canonical_subset(b2, {b2.bottom(), u1, u2, b2.top()});
  CHECK(range.ok());
}

TEST_CASE("generated sub-algebras") {
  const auto b2 = build_bn(2);
  CHECK(generated_subalgebra(b2, {b2.bottom()}).size() == 1);
  const Element u1 = *b2.find_label("{{1}}"), u2 = *b2.find_label("{{2}}");
  const auto all = generated_subalgebra(b2, {b2.bottom(), u1, u2, b2.top()});
  CHECK(all.size() == 5);
  CHECK(kind_of([&] { generated_subalgebra(b2, {*b2.find_label("{{1},{2}}")}); }) == ErrorKind::NotCanonical);
}

TEST_CASE("isomorphism search") {
  const auto b1 = build_bn(1);
  const auto boolean = upset_brouwer_algebra(Poset::from_covers({"a"}, {}));
  const auto iso = isomorphic_to_bn(boolean, 1);
  REQUIRE(iso.has_value());
  CHECK((*iso)[boolean.bottom()] == b1.bottom());
  CHECK((*iso)[boolean.top()] == b1.top());

  const auto chain4 = upset_brouwer_algebra(Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  CHECK_FALSE(isomorphic_to_bn(chain4, 2).has_value());

  const auto v = upset_brouwer_algebra(Poset::from_covers({"r", "x", "y"}, {{"r", "x"}, {"r", "y"}}));
  const auto to_b2 = isomorphic_to_bn(v, 2);
  REQUIRE(to_b2.has_value());
  const auto b2 = build_bn(2);
  for (Element a = 0; a < v.size(); ++a) {
    for (Element b = 0; b < v.size(); ++b) {
      CHECK((*to_b2)[v.imp(a, b)] == b2.imp((*to_b2)[a], (*to_b2)[b]));
      CHECK((*to_b2)[v.meet(a, b)] == b2.meet((*to_b2)[a], (*to_b2)[b]));
    }
  }
  CHECK_THROWS_AS(isomorphic_to_bn(v, 0), Error);
}

TEST_CASE("tagged unions reduce to maximal parts") {
  const auto d = structure("generators: a b\n");
  const TaggedUnionSpace space(d.poset());
  const ElementSet ca = d.cone(d.generator("a")), cb = d.cone(d.generator("b")), top = d.cone(d.top());
  const TaggedUnion t({ca, top, cb, ca});
  CHECK(t.parts().size() == 2);
  CHECK(t.collapsed() == (ca | cb));
  CHECK(TaggedUnion(std::vector<ElementSet>{}) == space.top());
  CHECK(space.leq(space.bottom(), t));
  CHECK(space.leq(t, space.top()));
  CHECK(space.leq(TaggedUnion(ca | cb), t));
  CHECK_FALSE(space.leq(t, TaggedUnion(ca | cb)));
}

TEST_CASE("tagged unions form a Brouwer algebra on a closed sample") {
  const auto d = structure("generators: a b c\njump: a b\n");
  const TaggedUnionSpace space(d.poset());
  std::vector<TaggedUnion> seeds;
  for (Degree g = 0; g < d.size(); ++g) seeds.emplace_back(d.cone(g));
  const auto closed = close_tagged(space, seeds);
  CHECK(check_brouwer_laws(closed.algebra).ok);
  for (Element i = 0; i < closed.algebra.size(); ++i) {
    for (Element j = 0; j < closed.algebra.size(); ++j) {
      CHECK(closed.algebra.leq(i, j) == space.leq(closed.carrier[i], closed.carrier[j]));
    }
  }
  CHECK_THROWS_AS(close_tagged(space, seeds, 3), Error);
}

TEST_CASE("tagged intervals are closed") {
  const auto d = structure("generators: b1 b2\njump: b1 b2\n");
  const TaggedUnionSpace space(d.poset());
  const ElementSet ambient = d.all() - d.cone(d.top());
  const auto alpha = alpha_embedding(d, ambient, {d.generator("b1"), d.generator("b2")});
  const auto carrier = tagged_interval(space, alpha(3), alpha.tagged(0));
  const auto iv = tabulate_tagged_interval(space, alpha.tagged(3), alpha.tagged(0), carrier);
  CHECK(iv.algebra.size() == 5);
  CHECK(check_brouwer_laws(iv.algebra).ok);
}
