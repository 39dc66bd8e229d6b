// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include "tdn/arrangements.hpp"
#include "tdn/engine.hpp"
#include "tdn/git.hpp"
#include "tdn/io.hpp"
#include "tdn/toric.hpp"
#include "tdn/trees.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace tdn;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int checks = 0;

  // Records a check; the first few failures are kept in the detail text.
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

Ambient T(int d, int n) { return Ambient(AmbientKind::TSpace, d, n); }
Ambient P(int d, int n) { return Ambient(AmbientKind::PSpace, d, n); }
IndexSet S(std::initializer_list<int> l) { return from_labels(std::vector<int>(l)); }

std::string tag(const Ambient& a, const WeightVector& w) {
  std::string s = to_string(a.kind) + "(" + std::to_string(a.d) + "," + std::to_string(a.n) + ") A=(";
  for (int i = 1; i <= w.n(); ++i) s += (i > 1 ? "," : "") + to_string(w[i]);
  return s + ")";
}

bool pairwise_separated(const Ambient& amb, const std::vector<CenterRecord>& cs) {
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b)
      if (!factors({cs[a].set, cs[b].set}, amb).empty_locus) return false;
  return true;
}

// 1. Structure of the small examples.
void structure(Outcome& o) {
  auto t22 = run(T(2, 2), unit_weights(2, 2));
  o.expect(t22.total == Poly{1, 1} && t22.per_center.empty(), "T_{2,2} is P^1");

  auto t23 = run(T(2, 3), unit_weights(2, 3));
  o.expect(ambient_poincare(T(2, 3)) == Poly{1, 1, 1, 1}, "T_{2,3} ambient is P^3");
  o.expect(t23.per_center.size() == 3, "T_{2,3} has three centers");
  for (const auto& c : t23.per_center) {
    o.expect(c.codim == 2, "T_{2,3} center codim 2");
    o.expect(dims(T(2, 3), c.set).dimension == 1, "T_{2,3} centers are lines");
  }
  o.expect(pairwise_separated(T(2, 3), t23.per_center), "T_{2,3} centers pairwise separated");
  o.expect(t23.total == Poly{1, 4, 4, 1}, "T_{2,3} total");

  auto p25 = run(P(2, 5), unit_weights(2, 5));
  o.expect(ambient_poincare(P(2, 5)) == Poly{1, 2, 1}, "P_{2,5} ambient is P^1 x P^1");
  o.expect(p25.per_center.size() == 3, "P_{2,5} has three centers");
  for (const auto& c : p25.per_center) {
    o.expect(c.codim == 2, "P_{2,5} center codim 2");
    o.expect(dims(P(2, 5), c.set).dimension == 0, "P_{2,5} centers are points");
  }
  o.expect(pairwise_separated(P(2, 5), p25.per_center), "P_{2,5} centers pairwise separated");
  o.expect(p25.total == Poly{1, 5, 1}, "P_{2,5} total");

  auto lm = run(T(2, 3), lm_weights_T(2, 3));
  o.expect(lm.per_center.size() == 2, "T^LM_{2,3} has two centers");
  o.expect(lm.per_center.size() == 2 && lm.per_center[0].set == S({1, 3}) && lm.per_center[1].set == S({2, 3}),
           "T^LM_{2,3} centers are L13 and L23");
  for (const auto& c : lm.per_center) o.expect(c.codim == 2, "T^LM_{2,3} center codim 2");
  o.expect(pairwise_separated(T(2, 3), lm.per_center), "T^LM_{2,3} centers disjoint");
  o.expect(lm.total == Poly{1, 3, 3, 1}, "T^LM_{2,3} total");
  o.detail << "T22=" << t22.total.str() << ", T23=" << t23.total.str() << ", P25=" << p25.total.str()
           << ", TLM23=" << lm.total.str();
}

// Weight samples for the Betti laws: all-ones, LM and a seeded grid draw.
std::vector<WeightVector> samples(const Ambient& amb, std::mt19937_64& rng, int grid_draws) {
  const int d = amb.d, n = amb.n;
  std::vector<WeightVector> out{unit_weights(d, n)};
  if (amb.kind == AmbientKind::TSpace && n >= 2) out.push_back(lm_weights_T(d, n));
  if (amb.kind == AmbientKind::PSpace) out.push_back(lm_weights_P(d, n));
  const std::vector<Rational> grid{Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4), 1};
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  std::vector<Rational> lower(static_cast<std::size_t>(n), Rational(0));
  if (amb.kind == AmbientKind::PSpace) lower = git_weights(d, n).w;
  for (int k = 0, tries = 0; k < grid_draws && tries < 1000; ++tries) {
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) {
      Rational x = grid[pick(rng)];
      w.push_back(std::max(x, lower[static_cast<std::size_t>(i)]));
    }
    WeightVector a(d, w);
    if (!validate_domain(a, amb.domain()).accepted) continue;
    out.push_back(a);
    ++k;
  }
  return out;
}

// A componentwise smaller vector still in the domain, if one of the grid steps allows it.
std::optional<WeightVector> lowered(const Ambient& amb, const WeightVector& a, std::mt19937_64& rng) {
  std::vector<Rational> lower(static_cast<std::size_t>(a.n()), Rational(0));
  if (amb.kind == AmbientKind::PSpace) lower = git_weights(a.d(), a.n()).w;
  std::uniform_int_distribution<int> pick(1, a.n());
  for (int tries = 0; tries < 20; ++tries) {
    std::vector<Rational> w = a.entries();
    int i = pick(rng);
    Rational x = w[static_cast<std::size_t>(i - 1)] * Rational(2, 3);
    x = std::max(x, lower[static_cast<std::size_t>(i - 1)]);
    if (x == w[static_cast<std::size_t>(i - 1)]) continue;
    w[static_cast<std::size_t>(i - 1)] = x;
    WeightVector b(a.d(), w);
    if (validate_domain(b, amb.domain()).accepted) return b;
  }
  return std::nullopt;
}

// 2. b2 law, palindromy and monotonicity under weight reduction.
void betti_laws(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  int instances = 0, reductions = 0;
  std::vector<Ambient> ambients;
  for (int d = 1; d <= 3; ++d)
    for (int n = 2; n <= 6; ++n) {
      ambients.push_back(T(d, n));
      if (n >= d + 3) ambients.push_back(P(d, n));
    }
  for (const auto& amb : ambients) {
    int draws = amb.d == 3 && amb.n == 6 ? 2 : 6;
    for (const auto& a : samples(amb, rng, draws)) {
      auto r = run(amb, a);
      ++instances;
      int big = 0;
      for (const auto& c : r.per_center) big += c.codim >= 2;
      int base = amb.kind == AmbientKind::TSpace ? (amb.dimension() >= 1 ? 1 : 0) : amb.d;
      o.expect(r.b2 == base + big || (amb.dimension() == 0 && r.total == Poly{1}), "b2 law for " + tag(amb, a));
      o.expect(r.total.palindromic(), "palindromic for " + tag(amb, a));
      o.expect(r.total.degree() == amb.dimension(), "degree for " + tag(amb, a));
      if (auto b = lowered(amb, a, rng)) {
        ++reductions;
        o.expect(coefficientwise_leq(run(amb, *b).total, r.total), "monotone for " + tag(amb, a) + " -> " + tag(amb, *b));
      }
    }
  }
  o.detail << instances << " instances, " << reductions << " reductions";
}

// 3. Order independence.
void order_independence(Outcome& o) {
  std::mt19937_64 rng(kSeed + 3);
  int instances = 0, orders = 0;
  std::vector<Ambient> ambients;
  for (int d = 1; d <= 2; ++d)
    for (int n = 3; n <= 5; ++n) {
      ambients.push_back(T(d, n));
      if (n >= d + 3) ambients.push_back(P(d, n));
    }
  for (const auto& amb : ambients)
    for (const auto& a : samples(amb, rng, 3)) {
      auto b = heavy_sets(a, amb);
      if (b.elements.empty()) continue;
      ++instances;
      Poly ref = run(amb, a).total;
      int here = 1;
      // tie-break permutations inside each size class
      for (int k = 0; k < 5; ++k) {
        std::vector<IndexSet> ord = b.elements;
        auto lo = ord.begin();
        while (lo != ord.end()) {
          auto hi = std::find_if(lo, ord.end(), [&](IndexSet s) { return size_of(s) != size_of(*lo); });
          std::shuffle(lo, hi, rng);
          lo = hi;
        }
        o.expect(run(amb, a, ord).total == ref, "tie-break order for " + tag(amb, a));
        ++here;
      }
      for (IndexSet i : b.elements) {
        o.expect(run(amb, a, relative_order(b, i).flattened()).total == ref,
                 "relative order of " + set_key(i) + " for " + tag(amb, a));
        ++here;
      }
      o.expect(here >= 5, "at least five orders for " + tag(amb, a));
      orders += here;
    }
  o.detail << instances << " instances, " << orders << " orders";
}

// 4. Euler oracle.
void euler(Outcome& o) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}) {
    std::int64_t e = run(T(d, n), unit_weights(d, n)).euler;
    std::int64_t oracle = euler_oracle(d, n);
    o.expect(e == oracle, "oracle for T(" + std::to_string(d) + "," + std::to_string(n) + ")");
    o.detail << "T" << d << n << "=" << oracle << " ";
  }
  o.expect(euler_oracle(2, 3) == 10, "T_{2,3} gives 10");
  o.expect(euler_oracle(2, 4) == 84, "T_{2,4} gives 84");
}

// 5. Toric cross-validation.
void toric(Outcome& o) {
  std::vector<std::tuple<FanKind, int, int>> cases;
  for (int d = 1; d <= 2; ++d)
    for (int n = 3; n <= 6; ++n) cases.emplace_back(FanKind::T, d, n);
  for (int n = 5; n <= 7; ++n) cases.emplace_back(FanKind::P, 2, n);
  for (auto [kind, d, n] : cases) {
    std::string name = std::string(kind == FanKind::T ? "T" : "P") + "(" + std::to_string(d) + "," + std::to_string(n) + ")";
    Fan f = build_fan(kind, d, n);
    auto c = check_fan(f, kSeed);
    o.expect(c.smooth, name + " smooth");
    o.expect(c.complete, name + " complete");
    Ambient amb = kind == FanKind::T ? T(d, n) : P(d, n);
    auto r = run(amb, kind == FanKind::T ? lm_weights_T(d, n) : lm_weights_P(d, n));
    o.expect(h_polynomial(f) == r.total, name + " h-polynomial equals engine total");
    o.expect(static_cast<std::int64_t>(f.max_cones.size()) == r.euler, name + " cone count equals Euler number");
    o.expect(f.rays.size() == lm_rays(kind, d, n).size(), name + " ray count");
  }
  o.expect(build_fan(FanKind::T, 2, 3).max_cones.size() == 8, "8 cones for T^LM_{2,3}");
  o.expect(build_fan(FanKind::P, 2, 5).max_cones.size() == 6, "6 cones for P^LM_{2,5}");
  o.detail << cases.size() << " fans";
}

// 6. Boundary divisors.
void boundary(Outcome& o) {
  int divisors = 0;
  for (int d = 1; d <= 2; ++d)
    for (int n = 3; n <= 5; ++n) {
      for (const auto& a : {unit_weights(d, n), lm_weights_T(d, n)}) {
        Ambient amb = T(d, n);
        bool ones = a == unit_weights(d, n);
        for (IndexSet i : heavy_sets(a, amb).elements) {
          Poly p = divisor_poincare(amb, a, i);
          ++divisors;
          o.expect(p.palindromic(), "palindromic divisor " + set_key(i) + " of " + tag(amb, a));
          o.expect(p.degree() == amb.dimension() - 1, "divisor degree " + set_key(i) + " of " + tag(amb, a));
          if (ones) o.expect(p.at_one() == euler_oracle(d, n, i), "divisor Euler number " + set_key(i) + " of " + tag(amb, a));
        }
      }
      if (n >= d + 3) {
        Ambient amb = P(d, n);
        for (IndexSet i : heavy_sets(unit_weights(d, n), amb).elements) {
          Poly p = divisor_poincare(amb, unit_weights(d, n), i);
          ++divisors;
          o.expect(p.palindromic() && p.degree() == amb.dimension() - 1, "P divisor " + set_key(i));
        }
      }
    }
  o.detail << divisors << " divisors";
}

// 7. GIT stability corpus.
void git(Outcome& o) {
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_int_distribution<int> coord(-2, 2);
  std::uniform_int_distribution<int> coin(0, 9);
  std::uniform_int_distribution<int> entry(-3, 3);
  const std::vector<std::pair<int, int>> shapes{{1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}};
  int total = 0, stable = 0, transforms = 0;
  for (auto [d, n] : shapes) {
    auto w = git_weights(d, n).w;
    for (int k = 0; k < 2000; ++k) {
      std::vector<HomPoint> pts;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && coin(rng) < 2) {
          std::uniform_int_distribution<int> prev(0, i - 1);
          pts.push_back(pts[static_cast<std::size_t>(prev(rng))]);
          continue;
        }
        HomPoint p;
        do {
          p.clear();
          for (int j = 0; j <= d; ++j) p.push_back(Rational(coord(rng)));
        } while (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; }));
        pts.push_back(p);
      }
      PointConfiguration c(d, pts);
      ++total;
      auto r = is_stable(c, w);
      o.expect(!r.integer_sum_seen, "integer weight sum seen");
      o.expect(r.stable == frame_conditions(c), "subset-span criterion agrees with the four conditions");
      if (!r.stable) continue;
      ++stable;
      QuotientPoint ref = normalize(c);
      for (int t = 0; t < 100; ++t) {
        MatQ m(d + 1, d + 1);
        do {
          for (int a = 0; a <= d; ++a)
            for (int b = 0; b <= d; ++b) m(a, b) = entry(rng);
        } while (determinant(m) == 0);
        ++transforms;
        o.expect(normalize(c.transformed(m)) == ref, "normalize invariant under a projective transformation");
      }
    }
  }
  o.detail << total << " configurations, " << stable << " stable, " << transforms << " transformations";
}

// 8. Trees: reduction chain, composition law, forgetful profiles.
void trees(Outcome& o) {
  const Rational eps(1, 1000);
  auto at = [](int x, int y) { return Position{Rational(x), Rational(y)}; };
  WeightVector a(2, {1, Rational(1, 3) + eps, Rational(1, 3) + eps, 1, 1, 1});
  StableTree t{TreeKind::Rooted, a, {S({1, 2, 3, 4, 5}), S({1, 2, 3}), S({4, 5})}, {}, {}};
  t.screens[S({1, 2, 3})] = {{S({1}), at(0, 0)}, {S({2}), at(1, 0)}, {S({3}), at(1, 0)}};
  t.screens[S({4, 5})] = {{S({4}), at(0, 0)}, {S({5}), at(0, 1)}};
  t.screens[S({1, 2, 3, 4, 5})] = {{S({1, 2, 3}), at(0, 0)}, {S({4, 5}), at(2, 1)}};
  t.root = {{S({1, 2, 3, 4, 5}), at(0, 0)}, {S({6}), at(1, 1)}};
  std::vector<Rational> bw(5, Rational(1, 5) + eps), cw(5, Rational(1, 6) + eps);
  bw.push_back(1);
  cw.push_back(1);
  WeightVector b(2, bw), c(2, cw);
  o.expect(validate(t).accepted, "figure tree is valid");
  StableTree tb = reduce(t, b);
  StableTree tc = reduce(tb, c);
  o.expect(tb.collection == std::vector<IndexSet>{S({1, 2, 3, 4, 5})}, "A -> B keeps only {1..5}");
  const Screen& sb = tb.screens.at(S({1, 2, 3, 4, 5}));
  o.expect(sb.at(S({1})) == sb.at(S({2})) && sb.at(S({2})) == sb.at(S({3})) && sb.at(S({4})) == sb.at(S({5})) &&
               sb.at(S({1})) != sb.at(S({4})),
           "B screen has 1,2,3 together and 4,5 together");
  o.expect(tc.collection.empty(), "B -> C removes every node");
  bool together = true;
  for (int i = 2; i <= 5; ++i) together = together && tc.root.at(S({i})) == tc.root.at(S({1}));
  o.expect(together && tc.root.at(S({6})) != tc.root.at(S({1})), "C root has marks 1-5 coincident and 6 apart");
  o.expect(canonicalize(reduce(t, c)) == canonicalize(tc), "figure chain composes");

  // composition law on a random corpus
  std::mt19937_64 rng(kSeed + 8);
  const std::vector<Rational> grid{Rational(1, 5), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), 1};
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  auto below = [&](const WeightVector& w) -> std::optional<WeightVector> {
    for (int tries = 0; tries < 50; ++tries) {
      std::vector<Rational> x;
      for (int i = 1; i <= w.n(); ++i) x.push_back(std::min(w[i], grid[pick(rng)]));
      WeightVector v(w.d(), x);
      if (validate_domain(v, DomainKind::T).accepted) return v;
    }
    return std::nullopt;
  };
  int corpus = 0, changed = 0;
  while (corpus < 100) {
    int d = 1 + corpus % 2, n = 5 + corpus % 2;
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) x.push_back(grid[pick(rng)]);
    WeightVector wa(d, x);
    if (!validate_domain(wa, DomainKind::T).accepted) continue;
    auto wb = below(wa);
    if (!wb) continue;
    auto wc = below(*wb);
    if (!wc) continue;
    StableTree tr = random_rooted_tree(wa, rng);
    StableTree two = reduce(reduce(tr, *wb), *wc);
    StableTree one = reduce(tr, *wc);
    o.expect(canonicalize(two) == canonicalize(one), "composition law");
    changed += one.collection.size() != tr.collection.size();
    ++corpus;
  }

  // injectivity of the k = 3 profile
  int trees_seen = 0;
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {2, 4}, {3, 3}}) {
    std::map<std::string, std::string> image;
    for (int k = 0; k < 100; ++k) {
      StableTree tr = random_rooted_tree(unit_weights(d, n), rng);
      std::string canon = to_json(canonicalize(tr)).dump();
      Json prof = Json::object();
      for (const auto& [s, img] : forgetful_profile(tr, 3)) prof[set_key(s)] = to_json(img);
      auto [it, fresh] = image.emplace(prof.dump(), canon);
      o.expect(fresh || it->second == canon, "k=3 profile injective on T(" + std::to_string(d) + "," + std::to_string(n) + ")");
      ++trees_seen;
    }
  }

  // collinear family collapsed by the k = 2 profile
  std::vector<StableTree> family;
  for (int mid : {1, 2, -1}) {
    StableTree x{TreeKind::Rooted, unit_weights(2, 3), {}, {}, {}};
    x.root = {{S({1}), at(0, 0)}, {S({2}), at(mid, mid)}, {S({3}), at(3, 3)}};
    family.push_back(x);
  }
  int distinct = 0;
  for (std::size_t i = 1; i < family.size(); ++i) {
    o.expect(forgetful_profile(family[i], 2) == forgetful_profile(family[0], 2), "collinear k=2 profiles agree");
    distinct += canonicalize(family[i]) != canonicalize(family[0]);
  }
  o.expect(distinct >= 1, "collinear family has distinct trees");
  o.detail << "composition corpus " << corpus << " (" << changed << " with collapsed nodes), profile corpus "
           << trees_seen << ", collinear family " << family.size();
}

// 9. Twist counters against the H1 class.
void twists(Outcome& o) {
  int sets = 0;
  for (int d = 1; d <= 2; ++d)
    for (int n = 3; n <= 5; ++n) {
      std::vector<std::pair<Ambient, WeightVector>> inst{{T(d, n), unit_weights(d, n)}, {T(d, n), lm_weights_T(d, n)}};
      if (n >= d + 3) inst.push_back({P(d, n), unit_weights(d, n)});
      for (const auto& [amb, a] : inst) {
        auto b = heavy_sets(a, amb);
        for (IndexSet i : b.elements) {
          int h1 = static_cast<int>(relative_order(b, i).classes[0].size());
          o.expect(twist_report(amb, a, i) == h1, "twist of " + set_key(i) + " in " + tag(amb, a));
          auto r = run(amb, a, relative_order(b, i).flattened());
          o.expect(r.center(i).twist == h1, "relative-order twist of " + set_key(i) + " in " + tag(amb, a));
          ++sets;
        }
      }
    }
  o.detail << sets << " heavy sets";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"structure of the small examples", structure},
      {"Betti laws", betti_laws},
      {"order independence", order_independence},
      {"Euler oracle", euler},
      {"toric cross-validation", toric},
      {"boundary products", boundary},
      {"GIT stability and normalization", git},
      {"stable trees", trees},
      {"twist counters", twists},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ["
              << o.checks << " checks, " << o.detail.str() << ", " << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s]" << std::endl;
  }
  return all ? 0 : 1;
}
