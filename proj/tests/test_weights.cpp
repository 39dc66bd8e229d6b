#include "tdn/weights.hpp"

#include <doctest.h>

using namespace tdn;

TEST_CASE("weight vectors reject malformed entries") {
  CHECK_THROWS_AS(WeightVector(2, {Rational(1), Rational(0)}), StructuralError);
  CHECK_THROWS_AS(WeightVector(2, {Rational(1), Rational(3, 2)}), StructuralError);
  CHECK_THROWS_AS(WeightVector(2, {Rational(1)}), StructuralError);
  CHECK_THROWS_AS(WeightVector(0, {Rational(1), Rational(1)}), StructuralError);
  WeightVector a(2, {Rational(1, 2), Rational(1, 3), Rational(1)});
  CHECK(a.sum() == Rational(11, 6));
  CHECK(a.sum(from_labels({1, 2})) == Rational(5, 6));
  CHECK_FALSE(a.heavy(from_labels({1, 2})));
  CHECK(a.heavy(from_labels({1, 3})));
}

TEST_CASE("T domain needs a strict total above one") {
  WeightVector q(1, std::vector<Rational>(4, Rational(1, 4)));
  auto r = validate_domain(q, DomainKind::T);
  CHECK_FALSE(r.accepted);
  CHECK(r.violations.size() == 1);
  CHECK(validate_domain(q, DomainKind::FM).accepted);
  CHECK(validate_domain(unit_weights(1, 4), DomainKind::T).accepted);
}

TEST_CASE("P domain lower bounds") {
  auto g = git_weights(2, 5);
  CHECK(g.w == std::vector<Rational>{Rational(8, 9), Rational(8, 9), Rational(5, 9), Rational(1, 3), Rational(1, 3)});
  CHECK(validate_domain(unit_weights(2, 5), DomainKind::P).accepted);
  WeightVector low(2, {Rational(8, 9), Rational(8, 9), Rational(1, 2), Rational(1, 3), Rational(1, 3)});
  auto r = validate_domain(low, DomainKind::P);
  CHECK_FALSE(r.accepted);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].find("a_3") != std::string::npos);
  CHECK_THROWS_AS(validate_domain(unit_weights(2, 4), DomainKind::P), StructuralError);
}

TEST_CASE("GIT weights sum to d+1") {
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 3; n <= d + 8; ++n) CHECK(git_weights(d, n).sum() == d + 1);
  auto g = git_weights(1, 4);
  CHECK(g.epsilon == Rational(1, 3));
  CHECK(g.epsilon_hat == Rational(1, 6));
  CHECK(g.w == std::vector<Rational>{Rational(5, 6), Rational(1, 2), Rational(1, 3), Rational(1, 3)});
  CHECK_THROWS_AS(git_weights(2, 4), StructuralError);
}

TEST_CASE("derived weights") {
  auto [in, out] = derived_weights(unit_weights(2, 4), from_labels({3, 4}));
  CHECK(in == std::vector<Rational>{1, 1});
  CHECK(out == std::vector<Rational>{1, 1, 1});
  std::vector<Rational> w(5, Rational(1, 5));
  w.push_back(1);
  auto [a, b] = derived_weights(WeightVector(2, w), from_labels({1, 2, 3}));
  CHECK(a == std::vector<Rational>(3, Rational(1, 5)));
  CHECK(b == std::vector<Rational>{Rational(1, 5), Rational(1, 5), 1, 1});
  CHECK_THROWS_AS(derived_weights(unit_weights(2, 4), 0), StructuralError);
  CHECK_THROWS_AS(derived_weights(unit_weights(2, 4), from_labels({5})), StructuralError);
}

TEST_CASE("Losev-Manin weights") {
  auto t = lm_weights_T(2, 4);
  CHECK(t.entries() == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3), 1});
  auto p = lm_weights_P(2, 5);
  CHECK(p.entries() == std::vector<Rational>{1, 1, 1, Rational(1, 2), Rational(1, 2)});
  CHECK(validate_domain(p, DomainKind::P).accepted);
}
