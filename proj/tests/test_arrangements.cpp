#include "tdn/arrangements.hpp"

#include <doctest.h>

using namespace tdn;

namespace {
IndexSet S(std::initializer_list<int> l) { return from_labels(std::vector<int>(l)); }
}  // namespace

TEST_CASE("ambient descriptors") {
  Ambient t(AmbientKind::TSpace, 2, 4);
  CHECK(t.dimension() == 5);
  CHECK(t.universe() == S({1, 2, 3, 4}));
  Ambient p(AmbientKind::PSpace, 2, 5);
  CHECK(p.dimension() == 2);
  CHECK(p.universe() == S({3, 4, 5}));
  CHECK(Ambient(AmbientKind::FMSpace, 2, 3).dimension() == 6);
  CHECK_THROWS(Ambient(AmbientKind::PSpace, 2, 3));
}

TEST_CASE("heavy sets") {
  auto b = heavy_sets(unit_weights(2, 4), Ambient(AmbientKind::TSpace, 2, 4));
  CHECK(b.elements.size() == 10);
  CHECK(b.elements.front() == S({1, 2, 3}));
  CHECK(b.elements.back() == S({3, 4}));

  Rational e(1, 100);
  WeightVector lm(3, {Rational(1, 3) + e, Rational(1, 3) + e, Rational(1, 3) + e, 1});
  auto c = heavy_sets(lm, Ambient(AmbientKind::TSpace, 3, 4));
  CHECK(c.elements == std::vector<IndexSet>{S({1, 2, 3}), S({1, 2, 4}), S({1, 3, 4}), S({2, 3, 4}), S({1, 4}), S({2, 4}), S({3, 4})});

  WeightVector pw(2, {1, 1, 1, Rational(1, 2), Rational(1, 2)});
  auto d = heavy_sets(pw, Ambient(AmbientKind::PSpace, 2, 5));
  CHECK(d.elements == std::vector<IndexSet>{S({3, 4}), S({3, 5})});

  WeightVector light(1, std::vector<Rational>(4, Rational(1, 4)));
  CHECK_THROWS_AS(heavy_sets(light, Ambient(AmbientKind::TSpace, 1, 4)), DomainError);
}

TEST_CASE("heavy sets are monotone in the weights") {
  Ambient amb(AmbientKind::TSpace, 2, 5);
  WeightVector small(2, {Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(2, 3), 1});
  auto lo = heavy_sets(small, amb).elements;
  auto hi = heavy_sets(unit_weights(2, 5), amb).elements;
  for (IndexSet s : lo) CHECK(std::find(hi.begin(), hi.end(), s) != hi.end());
}

TEST_CASE("factors") {
  Ambient t5(AmbientKind::TSpace, 2, 5);
  auto f = factors({S({1, 2}), S({2, 3}), S({4, 5})}, t5);
  CHECK(f.blocks == std::vector<IndexSet>{S({1, 2, 3}), S({4, 5})});
  CHECK_FALSE(f.empty_locus);
  Ambient t4(AmbientKind::TSpace, 2, 4);
  auto g = factors({S({1, 2}), S({3, 4})}, t4);
  CHECK(g.blocks.size() == 2);
  CHECK_FALSE(g.empty_locus);
  CHECK(factors({S({1, 2, 3}), S({3, 4})}, t4).empty_locus);
  CHECK(factors({S({4, 5}), S({2, 3}), S({1, 2})}, t5) == f);
  CHECK(factors(f.blocks, t5) == f);
}

TEST_CASE("relative order classes") {
  auto b = heavy_sets(unit_weights(1, 5), Ambient(AmbientKind::TSpace, 1, 5));
  auto r = relative_order(b, S({1, 2}));
  CHECK(r.classes[0].size() == 6);
  CHECK(r.classes[1].size() == 4);
  CHECK(r.classes[2].size() == 14);
  CHECK(r.classes[3].size() == 1);
  CHECK(r.flattened().size() == 25);
  CHECK(relative_class(S({1, 2, 3}), S({1, 2})) == 1);
  CHECK(relative_class(S({2, 3}), S({1, 2})) == 3);
  CHECK(relative_class(S({3, 4}), S({1, 2})) == 2);
  CHECK(relative_class(S({1, 2}), S({1, 2})) == 4);
}

TEST_CASE("dimensions") {
  Ambient t(AmbientKind::TSpace, 2, 4);
  CHECK(dims(t, S({1, 2, 3})).dimension == 1);
  CHECK(dims(t, S({1, 2, 3})).codimension == 4);
  Ambient p(AmbientKind::PSpace, 2, 5);
  CHECK(dims(p, S({3, 4})).dimension == 0);
  CHECK(dims(p, S({3, 4})).codimension == 2);
  PartialPartition pp{{S({1, 2}), S({3, 4})}, false};
  CHECK(dims(t, pp).codimension == 4);
  CHECK(dims(t, pp).dimension == 1);
}

TEST_CASE("nested collections") {
  CHECK(is_nested({S({1, 2, 3}), S({1, 2}), S({4, 5})}));
  CHECK_FALSE(is_nested({S({1, 2}), S({2, 3})}));
  CHECK(is_nested({S({1, 2, 3, 4, 5, 6}), S({1, 2, 3, 4}), S({5, 6})}));
}

TEST_CASE("order admissibility") {
  CHECK(containment_compatible({S({1, 2, 3}), S({1, 2}), S({2, 3})}));
  CHECK_FALSE(containment_compatible({S({1, 2}), S({1, 2, 3})}));
  CHECK_FALSE(order_violation({S({1, 2, 3}), S({1, 2}), S({2, 3})}).has_value());
  // {1,2} and {2,3} overlap and their union is a later center
  CHECK(order_violation({S({1, 2}), S({2, 3}), S({1, 2, 3})}).has_value());
}

TEST_CASE("hyperplane-arrangement dimensions") {
  auto a = sha_dimensions(6, 2);
  CHECK(a.dim_strict_transform == 2);
  CHECK(a.dim_pair_locus == 2);
  CHECK(a.inequality_holds);
  CHECK(a.equal);
  auto b = sha_dimensions(7, 3);
  CHECK(b.dim_strict_transform == 2);
  CHECK(b.dim_pair_locus == 3);
  CHECK_FALSE(b.equal);
  auto c = sha_dimensions(6, 3);
  CHECK(c.dim_strict_transform == 0);
  CHECK(c.dim_pair_locus == 1);
  CHECK_THROWS(sha_dimensions(6, 4));
}
