#include "tdn/io.hpp"

#include <sstream>

namespace tdn {

Json to_json(const Poly& p) { return Json(p.coeffs()); }

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json set_json(IndexSet s) { return Json(labels(s)); }

namespace {

std::string method_name(EngineMethod m) { return m == EngineMethod::Ledger ? "ledger" : "strata"; }

std::string labels_text(IndexSet s) {
  std::string out;
  for (int i : labels(s)) out += (out.empty() ? "" : " ") + std::to_string(i);
  return out;
}

std::string coeffs_text(const Poly& p, char sep) {
  std::string out;
  for (auto c : p.coeffs()) out += (out.empty() ? "" : std::string(1, sep)) + std::to_string(c);
  return out;
}

}  // namespace

Json to_json(const EngineResult& r) {
  Json j;
  j["poincare"] = to_json(r.total);
  j["euler"] = r.euler;
  j["b2"] = r.b2;
  j["method"] = method_name(r.method);
  Json centers = Json::array();
  for (const auto& c : r.per_center) {
    Json e;
    e["I"] = set_json(c.set);
    e["codim"] = c.codim;
    e["p_cur"] = to_json(c.p_cur);
    e["twist"] = c.twist;
    centers.push_back(e);
  }
  j["centers"] = centers;
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["accepted"] = r.accepted;
  j["violations"] = r.violations;
  return j;
}

Json to_json(const BuildingSet& b) {
  Json j;
  j["ambient"] = to_string(b.ambient.kind);
  j["d"] = b.ambient.d;
  j["n"] = b.ambient.n;
  j["weights"] = to_json(b.weights.entries());
  Json el = Json::array();
  for (IndexSet s : b.elements) {
    Json e;
    e["I"] = set_json(s);
    Dims dm = dims(b.ambient, s);
    e["dim"] = dm.dimension;
    e["codim"] = dm.codimension;
    el.push_back(e);
  }
  j["elements"] = el;
  return j;
}

Json to_json(const RelativeClasses& r) {
  Json j;
  for (int k = 0; k < 4; ++k) {
    Json c = Json::array();
    for (IndexSet s : r.classes[static_cast<std::size_t>(k)]) c.push_back(set_json(s));
    j["H" + std::to_string(k + 1)] = c;
  }
  Json flat = Json::array();
  for (IndexSet s : r.flattened()) flat.push_back(set_json(s));
  j["order"] = flat;
  return j;
}

Json to_json(const GitWeightVector& g) {
  Json j;
  j["d"] = g.d;
  j["n"] = g.n;
  j["epsilon"] = to_string(g.epsilon);
  j["epsilon_hat"] = to_string(g.epsilon_hat);
  j["weights"] = to_json(g.w);
  j["sum"] = to_string(g.sum());
  return j;
}

Json to_json(const QuotientPoint& q) {
  Json rows = Json::array();
  for (const auto& r : q.rows) rows.push_back(to_json(r));
  Json j;
  j["rows"] = rows;
  return j;
}

Json to_json(const StabilityResult& s) {
  Json j;
  j["stable"] = s.stable;
  if (!s.stable) {
    j["witness"] = set_json(s.witness);
    j["witness_dim"] = s.witness_dim;
    j["witness_weight"] = to_string(s.witness_weight);
  }
  j["integer_sum_seen"] = s.integer_sum_seen;
  return j;
}

Json to_json(const Fan& f) {
  Json j;
  j["lattice_rank"] = f.lattice_rank;
  j["rays"] = f.rays;
  j["max_cones"] = f.max_cones;
  return j;
}

Json to_json(const FanCheck& c) {
  Json j;
  j["smooth"] = c.smooth;
  j["complete"] = c.complete;
  j["probes"] = c.probes;
  j["uncovered_probes"] = c.uncovered_probes;
  j["bad_ridges"] = c.bad_ridges;
  return j;
}

namespace {

std::string child_key(IndexSet c) { return size_of(c) == 1 ? std::to_string(min_label(c)) : set_key(c); }

Json screen_json(const Screen& s) {
  std::vector<std::pair<IndexSet, Position>> kids(s.begin(), s.end());
  std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return min_label(a.first) < min_label(b.first); });
  Json j = Json::object();
  for (const auto& [c, p] : kids) j[child_key(c)] = to_json(p);
  return j;
}

Screen screen_from_json(const Json& j, const Rational& eps) {
  if (!j.is_object()) throw StructuralError("screen must be an object");
  Screen s;
  for (const auto& [key, val] : j.items()) {
    IndexSet c = parse_set(key);
    if (!val.is_array()) throw StructuralError("position of " + key + " must be an array");
    Position p;
    for (const auto& x : val) {
      if (x.is_string()) {
        p.push_back(parse_rational(x.get<std::string>(), eps));
      } else if (x.is_number_integer()) {
        p.push_back(Rational(x.get<long long>()));
      } else {
        throw StructuralError("coordinates must be strings or integers");
      }
    }
    if (!s.emplace(c, p).second) throw StructuralError("child " + key + " listed twice");
  }
  return s;
}

}  // namespace

Json to_json(const StableTree& t) {
  Json j;
  j["kind"] = to_string(t.kind);
  j["d"] = t.d();
  j["n"] = t.n();
  j["weights"] = to_json(t.weights.entries());
  std::vector<IndexSet> coll = t.collection;
  sort_collection(coll);
  Json c = Json::array();
  for (IndexSet s : coll) c.push_back(set_json(s));
  j["collection"] = c;
  Json screens = Json::object();
  for (IndexSet s : coll) screens[set_key(s)] = screen_json(t.screens.at(s));
  j["screens"] = screens;
  j["root"] = screen_json(t.root);
  return j;
}

StableTree tree_from_json(const Json& j, const Rational& eps) {
  try {
    TreeKind kind = parse_tree_kind(j.at("kind").get<std::string>());
    int d = j.at("d").get<int>();
    std::vector<Rational> w;
    for (const auto& x : j.at("weights"))
      w.push_back(x.is_string() ? parse_rational(x.get<std::string>(), eps) : Rational(x.get<long long>()));
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(w.size()))
      throw StructuralError("n does not match the number of weights");
    StableTree t{kind, WeightVector(d, w), {}, {}, {}};
    const IndexSet all = range_set(1, t.n());
    std::map<IndexSet, Screen> screens;
    if (j.contains("screens"))
      for (const auto& [key, val] : j.at("screens").items()) screens[parse_set(key)] = screen_from_json(val, eps);
    bool root_from_collection = false;
    for (const auto& x : j.value("collection", Json::array())) {
      IndexSet s = from_labels(x.get<std::vector<int>>());
      if (s == all) {
        root_from_collection = true;
        continue;
      }
      t.collection.push_back(s);
    }
    if (j.contains("root")) {
      t.root = screen_from_json(j.at("root"), eps);
    } else if (root_from_collection && screens.count(all)) {
      t.root = screens.at(all);
    } else {
      throw StructuralError("tree has no root placement");
    }
    screens.erase(all);
    t.screens = std::move(screens);
    sort_collection(t.collection);
    return t;
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("malformed tree JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw StructuralError(std::string("malformed tree JSON: ") + e.what());
  }
}

std::string engine_csv(const EngineResult& r) {
  std::ostringstream out;
  out << "center,codim,twist,p_cur\n";
  for (const auto& c : r.per_center)
    out << '"' << labels_text(c.set) << "\"," << c.codim << ',' << c.twist << ",\"" << coeffs_text(c.p_cur, ' ')
        << "\"\n";
  out << "total,,,\"" << coeffs_text(r.total, ' ') << "\"\n";
  return out.str();
}

std::string engine_text(const EngineResult& r) {
  std::ostringstream out;
  out << "poincare: " << r.total.str() << '\n';
  out << "betti: " << coeffs_text(r.total, ' ') << '\n';
  out << "euler: " << r.euler << '\n';
  out << "b2: " << r.b2 << '\n';
  out << "method: " << method_name(r.method) << '\n';
  out << "centers: " << r.per_center.size() << '\n';
  for (const auto& c : r.per_center)
    out << "  " << set_key(c.set) << " codim " << c.codim << " twist " << c.twist << " p_cur " << c.p_cur.str()
        << '\n';
  return out.str();
}

std::string fan_text(const Fan& f) {
  std::ostringstream out;
  out << "RAYS " << f.rays.size() << 'x' << f.lattice_rank << '\n';
  for (const auto& r : f.rays) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? " " : "") << r[k];
    out << '\n';
  }
  out << "CONES " << f.max_cones.size() << '\n';
  for (const auto& c : f.max_cones) {
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
    out << '\n';
  }
  return out.str();
}

}  // namespace tdn
