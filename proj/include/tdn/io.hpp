#pragma once

#include "tdn/arrangements.hpp"
#include "tdn/engine.hpp"
#include "tdn/git.hpp"
#include "tdn/toric.hpp"
#include "tdn/trees.hpp"

#include <json.hpp>

#include <string>

namespace tdn {

using Json = nlohmann::ordered_json;

Json to_json(const Poly& p);
Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json set_json(IndexSet s);
Json to_json(const EngineResult& r);
Json to_json(const ValidationReport& r);
Json to_json(const BuildingSet& b);
Json to_json(const RelativeClasses& r);
Json to_json(const GitWeightVector& g);
Json to_json(const QuotientPoint& q);
Json to_json(const StabilityResult& s);
Json to_json(const Fan& f);
Json to_json(const FanCheck& c);
Json to_json(const StableTree& t);

// Reads the tree schema; a rooted collection may list the full mark set, whose screen then
// serves as the root. Throws StructuralError on malformed input.
StableTree tree_from_json(const Json& j, const Rational& epsilon = Rational(1, 1000));

std::string engine_csv(const EngineResult& r);
std::string engine_text(const EngineResult& r);
std::string fan_text(const Fan& f);

}  // namespace tdn
