#include "tdn/trees.hpp"

#include "tdn/arrangements.hpp"

#include <doctest.h>

using namespace tdn;

namespace {

IndexSet S(std::initializer_list<int> l) { return from_labels(std::vector<int>(l)); }
Position at(int x, int y) { return {Rational(x), Rational(y)}; }
const Rational kEps(1, 1000);

// Left-hand tree of the reduction figure.
StableTree figure_tree() {
  WeightVector a(2, {1, Rational(1, 3) + kEps, Rational(1, 3) + kEps, 1, 1, 1});
  StableTree t{TreeKind::Rooted, a, {S({1, 2, 3, 4, 5}), S({1, 2, 3}), S({4, 5})}, {}, {}};
  t.screens[S({1, 2, 3})] = {{S({1}), at(0, 0)}, {S({2}), at(1, 0)}, {S({3}), at(1, 0)}};
  t.screens[S({4, 5})] = {{S({4}), at(0, 0)}, {S({5}), at(0, 1)}};
  t.screens[S({1, 2, 3, 4, 5})] = {{S({1, 2, 3}), at(0, 0)}, {S({4, 5}), at(2, 1)}};
  t.root = {{S({1, 2, 3, 4, 5}), at(0, 0)}, {S({6}), at(1, 1)}};
  return t;
}

WeightVector fifths() {
  std::vector<Rational> b(5, Rational(1, 5) + kEps);
  b.push_back(1);
  return WeightVector(2, b);
}

WeightVector sixths() {
  std::vector<Rational> c(5, Rational(1, 6) + kEps);
  c.push_back(1);
  return WeightVector(2, c);
}

// Chain X1 u X2 u X3 with marks 1,2 on the deepest component.
StableTree chain24() {
  StableTree x{TreeKind::Rooted, unit_weights(2, 4), {S({1, 2, 3}), S({1, 2})}, {}, {}};
  x.screens[S({1, 2})] = {{S({1}), at(0, 0)}, {S({2}), at(1, 0)}};
  x.screens[S({1, 2, 3})] = {{S({1, 2}), at(0, 0)}, {S({3}), at(0, 1)}};
  x.root = {{S({1, 2, 3}), at(0, 0)}, {S({4}), at(1, 1)}};
  return x;
}

}  // namespace

TEST_CASE("validation") {
  std::vector<Rational> w(4, Rational(1, 4) + kEps);
  w.push_back(Rational(1, 2) + kEps);
  w.push_back(Rational(1, 2) + kEps);
  StableTree t{TreeKind::Rooted, WeightVector(2, w), {S({1, 2, 3, 4}), S({5, 6})}, {}, {}};
  t.screens[S({1, 2, 3, 4})] = {{S({1}), at(0, 0)}, {S({2}), at(0, 0)}, {S({3}), at(1, 1)}, {S({4}), at(1, 1)}};
  t.screens[S({5, 6})] = {{S({5}), at(0, 0)}, {S({6}), at(3, 0)}};
  t.root = {{S({1, 2, 3, 4}), at(0, 0)}, {S({5, 6}), at(1, 0)}};
  CHECK(validate(t).accepted);

  StableTree flat = t;
  for (auto& [c, p] : flat.screens[S({1, 2, 3, 4})]) p = at(2, 2);
  auto r = validate(flat);
  CHECK_FALSE(r.accepted);
  CHECK(r.violations.front().find("[1,2,3,4]") != std::string::npos);

  StableTree heavy{TreeKind::Rooted, unit_weights(2, 4), {}, {}, {}};
  heavy.root = {{S({1}), at(0, 0)}, {S({2}), at(0, 0)}, {S({3}), at(1, 0)}, {S({4}), at(0, 1)}};
  CHECK_FALSE(validate(heavy).accepted);

  StableTree dangling = t;
  dangling.root[S({7})] = at(5, 5);
  CHECK_THROWS_AS(validate(dangling), StructuralError);
  StableTree wrong_dim = t;
  wrong_dim.root[S({5, 6})] = {Rational(1)};
  CHECK_THROWS_AS(validate(wrong_dim), StructuralError);
}

TEST_CASE("canonical screens") {
  StableTree t{TreeKind::Rooted, unit_weights(2, 2), {}, {}, {}};
  t.root = {{S({1}), at(3, 3)}, {S({2}), at(5, 7)}};
  auto c = canonicalize(t);
  CHECK(c.root.at(S({1})) == at(0, 0));
  CHECK(c.root.at(S({2})) == at(1, 2));
  CHECK(canonicalize(c) == c);

  StableTree f = figure_tree();
  StableTree g = f;
  for (auto& [k, p] : g.screens[S({1, 2, 3})]) p = {p[0] * -3 + 7, p[1] * -3 - 2};
  CHECK(canonicalize(g) == canonicalize(f));
}

TEST_CASE("reduction figure chain") {
  StableTree a = figure_tree();
  REQUIRE(validate(a).accepted);
  StableTree b = reduce(a, fifths());
  CHECK(b.collection == std::vector<IndexSet>{S({1, 2, 3, 4, 5})});
  const Screen& s = b.screens.at(S({1, 2, 3, 4, 5}));
  CHECK(s.at(S({1})) == s.at(S({2})));
  CHECK(s.at(S({1})) == s.at(S({3})));
  CHECK(s.at(S({4})) == s.at(S({5})));
  CHECK(s.at(S({1})) != s.at(S({4})));
  StableTree c = reduce(b, sixths());
  CHECK(c.collection.empty());
  for (int i = 2; i <= 5; ++i) CHECK(c.root.at(S({i})) == c.root.at(S({1})));
  CHECK(c.root.at(S({6})) != c.root.at(S({1})));
  CHECK(canonicalize(reduce(a, sixths())) == canonicalize(c));
  CHECK(canonicalize(reduce(a, a.weights)) == canonicalize(a));
  CHECK_THROWS_AS(reduce(b, a.weights), DomainError);
}

TEST_CASE("forgetful maps on the chain") {
  StableTree x = chain24();
  REQUIRE(validate(x).accepted);
  StableTree f = forget(x, S({1, 2, 3}));
  CHECK(f.n() == 3);
  CHECK(f.collection == std::vector<IndexSet>{S({1, 2})});
  CHECK(f.root.count(S({3})) == 1);
  StableTree g = forget(x, S({2, 3, 4}));
  CHECK(g.collection == std::vector<IndexSet>{S({1, 2})});
  CHECK(g.root.count(S({3})) == 1);
  CHECK(forget(x, S({1, 2, 3, 4})) == x);
  CHECK(canonicalize(forget(forget(x, S({1, 2, 3})), S({1, 3}))) == canonicalize(forget(x, S({1, 3}))));
}

TEST_CASE("profiles") {
  std::mt19937_64 rng(11);
  StableTree t = random_rooted_tree(unit_weights(2, 4), rng);
  auto p = forgetful_profile(t, 3);
  CHECK(p.size() == 4);
  CHECK(forgetful_profile(canonicalize(t), 3) == p);
  // three collinear points: sliding the middle one keeps every pair profile
  StableTree a{TreeKind::Rooted, unit_weights(2, 3), {}, {}, {}};
  a.root = {{S({1}), at(0, 0)}, {S({2}), at(1, 1)}, {S({3}), at(3, 3)}};
  StableTree b = a;
  b.root[S({2})] = at(2, 2);
  CHECK(canonicalize(a) != canonicalize(b));
  CHECK(forgetful_profile(a, 2) == forgetful_profile(b, 2));
  CHECK(forgetful_profile(a, 3) != forgetful_profile(b, 3));
}

TEST_CASE("random trees carry nested heavy collections") {
  std::mt19937_64 rng(5);
  auto a = unit_weights(2, 5);
  auto heavy = heavy_family(a, Ambient(AmbientKind::TSpace, 2, 5));
  for (int k = 0; k < 20; ++k) {
    StableTree t = random_rooted_tree(a, rng);
    CHECK(validate(t).accepted);
    CHECK(is_nested(t.collection));
    for (IndexSet s : t.collection) CHECK(std::find(heavy.begin(), heavy.end(), s) != heavy.end());
  }
}

TEST_CASE("framed trees") {
  auto pt = [](std::initializer_list<int> l) {
    Position p;
    for (int x : l) p.push_back(Rational(x));
    return p;
  };
  StableTree t{TreeKind::Framed, unit_weights(2, 6), {S({4, 5})}, {}, {}};
  t.screens[S({4, 5})] = {{S({4}), at(0, 0)}, {S({5}), at(1, 0)}};
  t.root = {{S({1}), pt({1, 0, 0})}, {S({2}), pt({0, 1, 0})}, {S({3}), pt({0, 0, 1})},
            {S({4, 5}), pt({1, 1, 1})}, {S({6}), pt({2, 3, 1})}};
  REQUIRE(validate(t).accepted);
  StableTree moved = t;
  // t under the linear map (x, y, z) -> (2x+z, y, 5z)
  moved.root[S({1})] = pt({2, 0, 0});
  moved.root[S({3})] = pt({1, 0, 5});
  moved.root[S({4, 5})] = pt({3, 1, 5});
  moved.root[S({6})] = pt({5, 3, 5});
  CHECK(canonicalize(moved) == canonicalize(t));
  StableTree f = forget(t, S({1, 2, 3, 5, 6}));
  CHECK(f.collection.empty());
  CHECK_THROWS_AS(forget(t, S({2, 3, 4, 5, 6})), DomainError);
  StableTree bad = t;
  bad.root[S({6})] = pt({1, 1, 0});
  CHECK_FALSE(validate(bad).accepted);
}
