#include "tdn/engine.hpp"
#include "tdn/toric.hpp"

#include <doctest.h>

using namespace tdn;

TEST_CASE("ray lists") {
  CHECK(lm_rays(FanKind::T, 2, 3).size() == 6);
  CHECK(lm_rays(FanKind::T, 1, 4).size() == 6);
  CHECK(lm_rays(FanKind::P, 2, 5).size() == 6);
  for (const auto& r : lm_rays(FanKind::T, 2, 4)) CHECK(r.size() == 5);
}

TEST_CASE("stellar subdivisions") {
  Fan t = build_fan(FanKind::T, 2, 3);
  CHECK(t.rays.size() == 6);
  CHECK(t.max_cones.size() == 8);
  Fan p = build_fan(FanKind::P, 2, 5);
  CHECK(p.rays.size() == 6);
  CHECK(p.max_cones.size() == 6);
  Fan line = build_fan(FanKind::T, 1, 3);
  CHECK(line.rays.size() == 2);
  CHECK(line.max_cones.size() == 2);
}

TEST_CASE("smoothness and completeness") {
  auto p3 = check_fan(projective_space_fan(3));
  CHECK(p3.smooth);
  CHECK(p3.complete);
  auto t = check_fan(build_fan(FanKind::T, 2, 3));
  CHECK(t.smooth);
  CHECK(t.complete);
  Fan cone;
  cone.lattice_rank = 2;
  cone.rays = {{1, 0}, {1, 2}};
  cone.max_cones = {{0, 1}};
  auto c = check_fan(cone);
  CHECK_FALSE(c.smooth);
  CHECK_FALSE(c.complete);
  Fan half = projective_space_fan(2);
  half.max_cones.pop_back();
  CHECK_FALSE(check_fan(half).complete);
}

TEST_CASE("h-polynomials") {
  Fan p1p1 = product_fan(projective_space_fan(1), projective_space_fan(1));
  CHECK(h_polynomial(p1p1) == Poly{1, 2, 1});
  CHECK(h_polynomial(build_fan(FanKind::T, 2, 3)) == Poly{1, 3, 3, 1});
  CHECK(h_polynomial(build_fan(FanKind::P, 2, 5)) == Poly{1, 4, 1});
  CHECK(h_polynomial(build_fan(FanKind::T, 2, 4)) ==
        run(Ambient(AmbientKind::TSpace, 2, 4), lm_weights_T(2, 4)).total);
  CHECK(f_vector(build_fan(FanKind::T, 2, 3)) == std::vector<std::int64_t>{1, 6, 12, 8});
}
