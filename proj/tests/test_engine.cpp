#include "tdn/engine.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tdn;

namespace {
IndexSet S(std::initializer_list<int> l) { return from_labels(std::vector<int>(l)); }
Ambient T(int d, int n) { return Ambient(AmbientKind::TSpace, d, n); }
Ambient P(int d, int n) { return Ambient(AmbientKind::PSpace, d, n); }
}  // namespace

TEST_CASE("ambient Poincare polynomials") {
  CHECK(ambient_poincare(T(2, 3)) == Poly{1, 1, 1, 1});
  CHECK(ambient_poincare(P(2, 5)) == Poly{1, 2, 1});
  CHECK(ambient_poincare(T(1, 4)) == Poly{1, 1, 1});
}

TEST_CASE("small T spaces") {
  auto r = run(T(2, 3), unit_weights(2, 3));
  CHECK(r.total == Poly{1, 4, 4, 1});
  CHECK(r.euler == 10);
  CHECK(r.b2 == 4);
  REQUIRE(r.per_center.size() == 3);
  for (const auto& c : r.per_center) {
    CHECK(c.codim == 2);
    CHECK(c.p_cur == Poly{1, 1});
  }
  CHECK(run(T(2, 2), unit_weights(2, 2)).total == Poly{1, 1});
  CHECK(run(T(1, 4), unit_weights(1, 4)).total == Poly{1, 5, 1});
  auto r24 = run(T(2, 4), unit_weights(2, 4));
  CHECK(r24.total == Poly{1, 11, 30, 30, 11, 1});
  CHECK(r24.euler == 84);
  CHECK(run(T(2, 5), unit_weights(2, 5)).total == Poly{1, 26, 146, 321, 321, 146, 26, 1});
  CHECK(run(T(1, 6), unit_weights(1, 6)).total == Poly{1, 42, 127, 42, 1});
}

TEST_CASE("P spaces") {
  auto r = run(P(2, 5), unit_weights(2, 5));
  CHECK(r.total == Poly{1, 5, 1});
  CHECK(r.per_center.size() == 3);
  CHECK(run(P(2, 5), lm_weights_P(2, 5)).total == Poly{1, 4, 1});
  CHECK_THROWS_AS(run(P(2, 5), WeightVector(2, {Rational(8, 9), Rational(8, 9), Rational(1, 2), 1, 1})), DomainError);
}

TEST_CASE("Losev-Manin T space") {
  auto r = run(T(2, 3), lm_weights_T(2, 3));
  CHECK(r.total == Poly{1, 3, 3, 1});
  CHECK(r.per_center.size() == 2);
}

TEST_CASE("orders") {
  auto b = heavy_sets(unit_weights(2, 4), T(2, 4));
  Poly expected{1, 11, 30, 30, 11, 1};
  for (IndexSet i : b.elements) {
    auto order = relative_order(b, i).flattened();
    auto r = run(T(2, 4), unit_weights(2, 4), order);
    CHECK(r.total == expected);
    CHECK(r.center(i).twist == static_cast<int>(relative_order(b, i).classes[0].size()));
  }
  std::vector<IndexSet> bad = b.elements;
  std::reverse(bad.begin(), bad.end());
  CHECK_THROWS_AS(run(T(2, 4), unit_weights(2, 4), bad), StructuralError);
  std::vector<IndexSet> missing(b.elements.begin() + 1, b.elements.end());
  CHECK_THROWS_AS(run(T(2, 4), unit_weights(2, 4), missing), StructuralError);
}

TEST_CASE("ledger and strata agree on containment-compatible orders") {
  auto b = heavy_sets(unit_weights(2, 5), T(2, 5));
  auto l = run_ledger(T(2, 5), b.elements);
  auto s = run_strata(T(2, 5), b.elements);
  CHECK(l.total == s.total);
  for (std::size_t k = 0; k < l.per_center.size(); ++k) CHECK(l.per_center[k].p_cur == s.per_center[k].p_cur);
}

TEST_CASE("boundary divisors") {
  CHECK(divisor_poincare(T(2, 3), unit_weights(2, 3), S({1, 2})) == Poly{1, 2, 1});
  CHECK(divisor_poincare(T(2, 4), unit_weights(2, 4), S({1, 2, 3})) == Poly{1, 4, 4, 1} * Poly{1, 1});
  CHECK(divisor_poincare(T(3, 4), unit_weights(3, 4), S({1, 2})).coeffs().size() == 8);
  CHECK_THROWS(divisor_poincare(T(2, 4), unit_weights(2, 4), S({1, 2, 3, 4})));
}

TEST_CASE("twist counts") {
  CHECK(twist_report(T(2, 4), unit_weights(2, 4), S({1, 2})) == 2);
  CHECK(twist_report(T(2, 4), unit_weights(2, 4), S({1, 2, 3})) == 0);
  CHECK(twist_report(T(1, 5), unit_weights(1, 5), S({1, 2})) == 6);
}

TEST_CASE("Euler oracle") {
  CHECK(euler_oracle(2, 3) == 10);
  CHECK(euler_oracle(2, 4) == 84);
  CHECK(euler_oracle(1, 4) == 7);
  CHECK(euler_oracle(2, 3, S({1, 2})) == 4);
  CHECK(affine_configurations(2, 2) == Poly{1, 1});
  CHECK(affine_configurations(2, 3).at_one() == -2);
}
