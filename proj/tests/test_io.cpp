#include "tdn/io.hpp"

#include <doctest.h>

using namespace tdn;

namespace {
IndexSet S(std::initializer_list<int> l) { return from_labels(std::vector<int>(l)); }
}  // namespace

TEST_CASE("engine result JSON") {
  auto r = run(Ambient(AmbientKind::TSpace, 2, 4), unit_weights(2, 4));
  Json j = to_json(r);
  CHECK(j["poincare"] == Json({1, 11, 30, 30, 11, 1}));
  CHECK(j["euler"] == 84);
  CHECK(j["b2"] == 11);
  CHECK(j["centers"][0]["I"] == Json({1, 2, 3}));
  CHECK(j["centers"][0]["codim"] == 4);
  CHECK(engine_csv(r).rfind("total,,,\"1 11 30 30 11 1\"") != std::string::npos);
}

TEST_CASE("tree JSON round trip") {
  Rational e(1, 1000);
  WeightVector a(2, {1, Rational(1, 3) + e, Rational(1, 3) + e, 1, 1, 1});
  StableTree t{TreeKind::Rooted, a, {S({1, 2, 3}), S({4, 5}), S({1, 2, 3, 4, 5})}, {}, {}};
  sort_collection(t.collection);
  auto at = [](int x, int y) { return Position{Rational(x), Rational(y, 3)}; };
  t.screens[S({1, 2, 3})] = {{S({1}), at(0, 0)}, {S({2}), at(1, 0)}, {S({3}), at(1, 0)}};
  t.screens[S({4, 5})] = {{S({4}), at(0, 0)}, {S({5}), at(0, 1)}};
  t.screens[S({1, 2, 3, 4, 5})] = {{S({1, 2, 3}), at(0, 0)}, {S({4, 5}), at(2, 1)}};
  t.root = {{S({1, 2, 3, 4, 5}), at(0, 0)}, {S({6}), at(1, 1)}};
  Json j = to_json(t);
  CHECK(j["screens"]["[1,2,3]"]["2"] == Json({"1", "0"}));
  StableTree back = tree_from_json(j);
  CHECK(back == t);
  StableTree c = canonicalize(t);
  CHECK(to_json(tree_from_json(Json::parse(to_json(c).dump()))).dump() == to_json(c).dump());
}

TEST_CASE("tree JSON with the full set in the collection") {
  Json j = Json::parse(R"({"kind":"rooted","d":1,"weights":["1","1","1"],
    "collection":[[1,2,3],[1,2]],
    "screens":{"[1,2,3]":{"[1,2]":["0"],"3":["1"]},"[1,2]":{"1":["0"],"2":["1/2"]}}})");
  StableTree t = tree_from_json(j);
  CHECK(t.collection == std::vector<IndexSet>{S({1, 2})});
  CHECK(t.root.size() == 2);
  CHECK(validate(t).accepted);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"kind":"rooted","d":1,"weights":["1","1"]})")), StructuralError);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"kind":"bushy","d":1,"weights":["1","1"],"root":{}})")), StructuralError);
}

TEST_CASE("fan export") {
  Fan f = build_fan(FanKind::P, 2, 5);
  std::string text = fan_text(f);
  CHECK(text.rfind("RAYS 6x2\n", 0) == 0);
  CHECK(text.find("CONES 6\n") != std::string::npos);
  Json j = to_json(f);
  CHECK(j["rays"].size() == 6);
  CHECK(j["max_cones"].size() == 6);
}

TEST_CASE("building set JSON") {
  auto b = heavy_sets(unit_weights(2, 5), Ambient(AmbientKind::PSpace, 2, 5));
  Json j = to_json(b);
  CHECK(j["elements"].size() == 3);
  CHECK(j["elements"][0]["I"] == Json({3, 4}));
  CHECK(j["weights"][0] == "1");
}
