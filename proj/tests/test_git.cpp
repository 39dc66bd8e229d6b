#include "tdn/git.hpp"

#include <doctest.h>

using namespace tdn;

namespace {
IndexSet S(std::initializer_list<int> l) { return from_labels(std::vector<int>(l)); }
HomPoint pt(std::initializer_list<int> l) {
  HomPoint p;
  for (int x : l) p.push_back(Rational(x));
  return p;
}
}  // namespace

TEST_CASE("points are normalized") {
  CHECK(normalize_point({0, 2, 4}) == HomPoint{0, 1, 2});
  CHECK_THROWS_AS(normalize_point({0, 0, 0}), StructuralError);
  CHECK_THROWS_AS(PointConfiguration(2, {pt({1, 0})}), StructuralError);
}

TEST_CASE("stability for the GIT weights") {
  auto w = git_weights(2, 5).w;
  PointConfiguration good(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1}), pt({1, 2, 3})});
  auto r = is_stable(good, w);
  CHECK(r.stable);
  CHECK_FALSE(r.integer_sum_seen);
  CHECK(frame_conditions(good));

  PointConfiguration triple(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({0, 0, 1}), pt({0, 0, 1})});
  auto t = is_stable(triple, w);
  CHECK_FALSE(t.stable);
  CHECK(t.witness == S({3, 4, 5}));
  CHECK(t.witness_dim == 0);
  CHECK(t.witness_weight == Rational(11, 9));
  CHECK_FALSE(frame_conditions(triple));

  PointConfiguration online(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 0}), pt({1, 2, 3})});
  auto o = is_stable(online, w);
  CHECK_FALSE(o.stable);
  CHECK(o.witness == S({1, 2, 4}));
  CHECK(o.witness_dim == 1);
  CHECK(o.witness_weight == Rational(19, 9));
  CHECK_FALSE(frame_conditions(online));
}

TEST_CASE("normalize reads the chart coordinates") {
  PointConfiguration c(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1}), pt({2, 3, 1})});
  auto qp = normalize(c);
  REQUIRE(qp.rows.size() == 2);
  CHECK(qp.rows[0] == std::vector<Rational>{1, 2});
  CHECK(qp.rows[1] == std::vector<Rational>{1, 3});
  MatQ m(3, 3);
  m << 2, 1, 0, 0, 1, 3, 1, 0, 1;
  CHECK(normalize(c.transformed(m)) == qp);
  PointConfiguration bad(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({0, 0, 1}), pt({0, 0, 1})});
  CHECK_THROWS_AS(normalize(bad), DomainError);
}

TEST_CASE("coincidence classification") {
  auto a = unit_weights(2, 5);
  CHECK(classify_coincidence(QuotientPoint{{{0, 1}, {0, 1}}}, a) == std::vector<IndexSet>{S({3, 4})});
  CHECK(classify_coincidence(QuotientPoint{{{1, 1}, {1, 1}}}, a) == std::vector<IndexSet>{S({4, 5})});
  CHECK(classify_coincidence(QuotientPoint{{{1, 2}, {1, 3}}}, a).empty());
  PointConfiguration c(2, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({2, 3, 1}), pt({4, 6, 2})});
  CHECK(classify_coincidence(normalize(c), a) == literal_coincidences(c, a));
  CHECK(literal_coincidences(c, a) == std::vector<IndexSet>{S({4, 5})});
}
