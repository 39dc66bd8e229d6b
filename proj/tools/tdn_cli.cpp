#include "tdn/arrangements.hpp"
#include "tdn/engine.hpp"
#include "tdn/git.hpp"
#include "tdn/io.hpp"
#include "tdn/toric.hpp"
#include "tdn/trees.hpp"
#include "tdn/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tdn;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitStructural = 2;
constexpr int kExitUsage = 64;

// Rejection carrying a report to print before exiting with the domain status.
struct Rejected {
  Json report;
};

struct Options {
  std::string format = "json";
  std::string epsilon_text = "1/1000";
  std::uint64_t seed = 1;
  std::string kind = "T";
  int d = 0;
  int n = 0;
  std::string weights;
  std::string set;
  std::string order;
  std::string in;
  std::string to;
  std::string keep;
  std::string points;
  int k = 3;
  int m = 0;
  bool oracle = false;

  Rational epsilon() const { return parse_rational(epsilon_text, Rational(0)); }
};

WeightVector weights_of(const Options& o) {
  if (o.d < 1) throw StructuralError("-d is required");
  if (o.weights.empty() || o.weights == "ones") {
    if (o.n < 2) throw StructuralError("-n is required for the all-ones weights");
    return unit_weights(o.d, o.n);
  }
  if (o.weights == "lm") {
    if (o.n < 2) throw StructuralError("-n is required for the LM weights");
    return o.kind == "P" ? lm_weights_P(o.d, o.n) : lm_weights_T(o.d, o.n);
  }
  WeightVector w(o.d, parse_rational_list(o.weights, o.epsilon()));
  if (o.n != 0 && o.n != w.n()) throw StructuralError("-n does not match the number of weights");
  return w;
}

Ambient ambient_of(const Options& o, const WeightVector& w) {
  return Ambient(parse_ambient_kind(o.kind), w.d(), w.n());
}

// Groups are separated by ';' or '|'; the latter avoids shell and CMake list quoting.
std::vector<std::string> split_groups(std::string text) {
  std::replace(text.begin(), text.end(), '|', ';');
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<IndexSet> parse_order(const std::string& text) {
  std::vector<IndexSet> out;
  for (const auto& item : split_groups(text)) out.push_back(parse_set(item));
  return out;
}

PointConfiguration points_of(const Options& o) {
  if (o.d < 1) throw StructuralError("-d is required");
  std::vector<HomPoint> pts;
  for (const auto& item : split_groups(o.points))
    pts.push_back(parse_rational_list(item, o.epsilon()));
  if (pts.empty()) throw StructuralError("--points is required");
  return PointConfiguration(o.d, pts);
}

StableTree tree_of(const Options& o) {
  if (o.in.empty()) throw StructuralError("--in is required");
  std::ifstream f(o.in);
  if (!f) throw StructuralError("cannot open " + o.in);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("cannot parse ") + o.in + ": " + e.what());
  }
  return tree_from_json(j, o.epsilon());
}

std::string poly_csv(const Poly& p) {
  std::string out = "degree,coefficient\n";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    out += std::to_string(k) + "," + std::to_string(p.coeffs()[k]) + "\n";
  return out;
}

// Prints a JSON payload in the selected format; csv and text fall back to a flat rendering.
void emit(const Options& o, const Json& j, const std::string& text = "", const std::string& csv = "") {
  if (o.format == "text" && !text.empty()) {
    std::cout << text;
  } else if (o.format == "csv" && !csv.empty()) {
    std::cout << csv;
  } else {
    std::cout << j.dump() << '\n';
  }
}

void emit_report(const Options& o, const ValidationReport& r) {
  if (!r.accepted) throw Rejected{to_json(r)};
  std::string text = "accepted\n";
  emit(o, to_json(r), text);
}

std::string set_list_text(const std::vector<IndexSet>& v) {
  std::string out;
  for (IndexSet s : v) out += set_key(s) + "\n";
  return out;
}

void add_weight_opts(CLI::App* c, Options& o, bool with_kind = true) {
  if (with_kind) c->add_option("--kind", o.kind, "ambient kind: T, P or FM")->check(CLI::IsMember({"T", "P", "FM"}));
  c->add_option("-d", o.d, "dimension d")->required();
  c->add_option("-n", o.n, "number of marks");
  c->add_option("--weights", o.weights, "comma list of rationals, or 'ones' / 'lm'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tdn: exact invariants of weighted configuration compactifications"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--epsilon", o.epsilon_text, "value of e in weights such as 1/3+e");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  std::function<void()> action;

  auto* weights = app.add_subcommand("weights", "weight vector checks");
  weights->require_subcommand(1);
  auto* w_check = weights->add_subcommand("check", "check a weight vector against a domain");
  add_weight_opts(w_check, o);
  w_check->callback([&] {
    action = [&] {
      WeightVector w = weights_of(o);
      emit_report(o, validate_domain(w, parse_domain_kind(o.kind)));
    };
  });
  auto* w_git = weights->add_subcommand("git", "GIT weights for (d, n)");
  w_git->add_option("-d", o.d)->required();
  w_git->add_option("-n", o.n)->required();
  w_git->callback([&] {
    action = [&] {
      auto g = git_weights(o.d, o.n);
      std::string text;
      for (const auto& x : g.w) text += to_string(x) + "\n";
      emit(o, to_json(g), text);
    };
  });

  auto* bs = app.add_subcommand("building-set", "heavy index sets");
  bs->require_subcommand(1);
  auto* bs_list = bs->add_subcommand("list", "list the building set in ascending-dimension order");
  add_weight_opts(bs_list, o);
  bs_list->callback([&] {
    action = [&] {
      WeightVector w = weights_of(o);
      auto b = heavy_sets(w, ambient_of(o, w));
      emit(o, to_json(b), set_list_text(b.elements));
    };
  });
  auto* bs_order = bs->add_subcommand("order", "relative blowup order for a heavy set");
  add_weight_opts(bs_order, o);
  bs_order->add_option("--relative", o.set, "the heavy set I")->required();
  bs_order->callback([&] {
    action = [&] {
      WeightVector w = weights_of(o);
      auto b = heavy_sets(w, ambient_of(o, w));
      auto rel = relative_order(b, parse_set(o.set));
      emit(o, to_json(rel), set_list_text(rel.flattened()));
    };
  });

  auto* betti = app.add_subcommand("betti", "Poincare polynomial by iterated blowup");
  add_weight_opts(betti, o);
  betti->add_option("--order", o.order, "blowup order as sets separated by ';' or '|'");
  betti->callback([&] {
    action = [&] {
      WeightVector w = weights_of(o);
      auto r = run(ambient_of(o, w), w, parse_order(o.order));
      emit(o, to_json(r), engine_text(r), engine_csv(r));
    };
  });

  auto* divisor = app.add_subcommand("divisor", "Poincare polynomial of a boundary divisor");
  add_weight_opts(divisor, o);
  divisor->add_option("--set", o.set, "the heavy set I")->required();
  divisor->callback([&] {
    action = [&] {
      WeightVector w = weights_of(o);
      Poly p = divisor_poincare(ambient_of(o, w), w, parse_set(o.set));
      Json j;
      j["I"] = set_json(parse_set(o.set));
      j["poincare"] = to_json(p);
      j["euler"] = p.at_one();
      emit(o, j, p.str() + "\n", poly_csv(p));
    };
  });

  auto* euler = app.add_subcommand("euler", "Euler number of T_{d,n} with all-ones weights");
  euler->add_option("-d", o.d)->required();
  euler->add_option("-n", o.n)->required();
  euler->add_flag("--oracle", o.oracle, "use the nested-collection count instead of the engine");
  euler->add_option("--set", o.set, "restrict to collections containing this set (oracle only)");
  euler->callback([&] {
    action = [&] {
      Json j;
      std::int64_t e;
      if (o.oracle) {
        std::optional<IndexSet> c;
        if (!o.set.empty()) c = parse_set(o.set);
        e = euler_oracle(o.d, o.n, c);
        j["method"] = "oracle";
      } else {
        if (!o.set.empty()) throw StructuralError("--set needs --oracle");
        e = run(Ambient(AmbientKind::TSpace, o.d, o.n), unit_weights(o.d, o.n)).euler;
        j["method"] = "engine";
      }
      j["euler"] = e;
      emit(o, j, std::to_string(e) + "\n");
    };
  });

  auto* twist = app.add_subcommand("twist", "number of earlier centers containing a heavy set");
  add_weight_opts(twist, o);
  twist->add_option("--set", o.set, "the heavy set I")->required();
  twist->callback([&] {
    action = [&] {
      WeightVector w = weights_of(o);
      Ambient amb = ambient_of(o, w);
      IndexSet i = parse_set(o.set);
      int t = twist_report(amb, w, i);
      Json j;
      j["I"] = set_json(i);
      j["twist"] = t;
      j["H1"] = relative_order(heavy_sets(w, amb), i).classes[0].size();
      emit(o, j, std::to_string(t) + "\n");
    };
  });

  auto* tree = app.add_subcommand("tree", "weighted stable trees (JSON input)");
  tree->require_subcommand(1);
  auto* t_validate = tree->add_subcommand("validate", "check the tree invariants");
  auto* t_canon = tree->add_subcommand("canon", "canonical form");
  auto* t_reduce = tree->add_subcommand("reduce", "reduction to smaller weights");
  auto* t_forget = tree->add_subcommand("forget", "forget the marks outside a set");
  auto* t_profile = tree->add_subcommand("profile", "canonical forgetful images for all k-subsets");
  for (auto* c : {t_validate, t_canon, t_reduce, t_forget, t_profile})
    c->add_option("--in", o.in, "tree JSON file")->required();
  t_reduce->add_option("--to", o.to, "target weights")->required();
  t_forget->add_option("--keep", o.keep, "marks to keep")->required();
  t_profile->add_option("-k", o.k, "subset size");
  t_validate->callback([&] { action = [&] { emit_report(o, validate(tree_of(o))); }; });
  t_canon->callback([&] { action = [&] { emit(o, to_json(canonicalize(tree_of(o)))); }; });
  t_reduce->callback([&] {
    action = [&] {
      StableTree t = tree_of(o);
      emit(o, to_json(reduce(t, WeightVector(t.d(), parse_rational_list(o.to, o.epsilon())))));
    };
  });
  t_forget->callback([&] { action = [&] { emit(o, to_json(canonicalize(forget(tree_of(o), parse_set(o.keep))))); }; });
  t_profile->callback([&] {
    action = [&] {
      Json j = Json::object();
      for (const auto& [s, t] : forgetful_profile(tree_of(o), o.k)) j[set_key(s)] = to_json(t);
      emit(o, j);
    };
  });

  auto* git = app.add_subcommand("git", "GIT stability of point configurations in P^d");
  git->require_subcommand(1);
  auto* g_check = git->add_subcommand("check", "stability for the GIT weights");
  auto* g_norm = git->add_subcommand("normalize", "quotient coordinates");
  auto* g_class = git->add_subcommand("classify", "heavy coincidence loci containing the point");
  for (auto* c : {g_check, g_norm, g_class}) {
    c->add_option("-d", o.d)->required();
    c->add_option("--points", o.points, "homogeneous points, coordinates by ',' and points by ';' or '|'")->required();
  }
  g_class->add_option("--weights", o.weights, "weights in the P domain")->required();
  g_check->callback([&] {
    action = [&] {
      auto c = points_of(o);
      auto r = is_stable(c, git_weights(o.d, c.n()).w);
      Json j = to_json(r);
      j["frame_conditions"] = frame_conditions(c);
      if (!r.stable) throw Rejected{j};
      emit(o, j, "stable\n");
    };
  });
  g_norm->callback([&] {
    action = [&] {
      auto qp = normalize(points_of(o));
      std::string text;
      for (const auto& row : qp.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) text += (k ? " " : "") + to_string(row[k]);
        text += "\n";
      }
      emit(o, to_json(qp), text);
    };
  });
  g_class->callback([&] {
    action = [&] {
      auto c = points_of(o);
      o.n = c.n();
      WeightVector w = weights_of(o);
      auto rep = validate_domain(w, DomainKind::P);
      if (!rep.accepted) throw Rejected{to_json(rep)};
      auto sets = classify_coincidence(normalize(c), w);
      Json j = Json::array();
      for (IndexSet s : sets) j.push_back(set_json(s));
      emit(o, j, set_list_text(sets));
    };
  });

  auto* toric = app.add_subcommand("toric", "fans of the Losev-Manin models");
  toric->require_subcommand(1);
  auto* r_rays = toric->add_subcommand("rays", "ray list");
  auto* r_fan = toric->add_subcommand("fan", "fan by stellar subdivision");
  auto* r_check = toric->add_subcommand("check", "smoothness and completeness");
  auto* r_h = toric->add_subcommand("h-poly", "h-polynomial of the fan");
  for (auto* c : {r_rays, r_fan, r_check, r_h}) {
    c->add_option("--kind", o.kind, "T or P")->check(CLI::IsMember({"T", "P"}));
    c->add_option("-d", o.d)->required();
    c->add_option("-n", o.n)->required();
  }
  r_rays->callback([&] {
    action = [&] {
      auto rays = lm_rays(parse_fan_kind(o.kind), o.d, o.n);
      std::string text;
      for (const auto& r : rays) {
        for (std::size_t k = 0; k < r.size(); ++k) text += (k ? " " : "") + std::to_string(r[k]);
        text += "\n";
      }
      emit(o, Json(rays), text);
    };
  });
  r_fan->callback([&] {
    action = [&] {
      Fan f = build_fan(parse_fan_kind(o.kind), o.d, o.n);
      emit(o, to_json(f), fan_text(f));
    };
  });
  r_check->callback([&] {
    action = [&] {
      auto c = check_fan(build_fan(parse_fan_kind(o.kind), o.d, o.n), o.seed);
      std::string text = std::string("smooth: ") + (c.smooth ? "yes" : "no") + "\ncomplete: " + (c.complete ? "yes" : "no") + "\n";
      emit(o, to_json(c), text);
    };
  });
  r_h->callback([&] {
    action = [&] {
      Poly h = h_polynomial(build_fan(parse_fan_kind(o.kind), o.d, o.n));
      Json j;
      j["h"] = to_json(h);
      emit(o, j, h.str() + "\n", poly_csv(h));
    };
  });

  auto* sha = app.add_subcommand("sha-dims", "dimension comparison for the hyperplane-arrangement loci");
  sha->add_option("-n", o.n)->required();
  sha->add_option("-m", o.m)->required();
  sha->callback([&] {
    action = [&] {
      auto s = sha_dimensions(o.n, o.m);
      Json j;
      j["dim_strict_transform"] = s.dim_strict_transform;
      j["dim_pair_locus"] = s.dim_pair_locus;
      j["inequality_holds"] = s.inequality_holds;
      j["equal"] = s.equal;
      emit(o, j);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (action) action();
    return 0;
  } catch (const Rejected& r) {
    std::cout << r.report.dump() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain rejection: " << e.what() << '\n';
    return kExitDomain;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return kExitStructural;
  } catch (const std::invalid_argument& e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return kExitStructural;
  } catch (const std::out_of_range& e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return kExitStructural;
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitStructural;
  }
}
