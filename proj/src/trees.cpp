#include "tdn/trees.hpp"

#include "tdn/arrangements.hpp"
#include "tdn/git.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tdn {

std::string to_string(TreeKind k) { return k == TreeKind::Rooted ? "rooted" : "framed"; }

TreeKind parse_tree_kind(const std::string& s) {
  if (s == "rooted") return TreeKind::Rooted;
  if (s == "framed") return TreeKind::Framed;
  throw StructuralError("unknown tree kind: " + s);
}

void sort_collection(std::vector<IndexSet>& c) {
  std::sort(c.begin(), c.end(), [](IndexSet a, IndexSet b) {
    if (size_of(a) != size_of(b)) return size_of(a) > size_of(b);
    return lex_less(a, b);
  });
}

std::vector<IndexSet> component_children(const StableTree& t, IndexSet x) {
  std::vector<IndexSet> kids;
  IndexSet covered = 0;
  for (IndexSet s : t.collection) {
    if (!proper_subset_of(s, x)) continue;
    bool maximal = std::none_of(t.collection.begin(), t.collection.end(), [&](IndexSet u) {
      return proper_subset_of(s, u) && proper_subset_of(u, x);
    });
    if (maximal) {
      kids.push_back(s);
      covered |= s;
    }
  }
  for (int i : labels(x & ~covered)) kids.push_back(singleton(i));
  std::sort(kids.begin(), kids.end(), [](IndexSet a, IndexSet b) { return min_label(a) < min_label(b); });
  return kids;
}

namespace {

std::string child_name(IndexSet c) {
  return size_of(c) == 1 ? std::to_string(min_label(c)) : set_key(c);
}

bool same_position(const StableTree& t, bool root, const Position& a, const Position& b) {
  if (root && t.kind == TreeKind::Framed) return normalize_point(a) == normalize_point(b);
  return a == b;
}

void check_screen_shape(const StableTree& t, IndexSet x, const Screen& s, bool root) {
  const std::string where = root ? std::string("root") : "screen " + set_key(x);
  auto kids = component_children(t, x);
  std::set<IndexSet> expected(kids.begin(), kids.end());
  for (const auto& [c, p] : s) {
    if (!expected.count(c)) throw StructuralError(where + ": unexpected child " + child_name(c));
    std::size_t want = static_cast<std::size_t>(t.d()) + ((root && t.kind == TreeKind::Framed) ? 1 : 0);
    if (p.size() != want)
      throw StructuralError(where + ": child " + child_name(c) + " has " + std::to_string(p.size()) +
                            " coordinates, expected " + std::to_string(want));
  }
  for (IndexSet c : kids)
    if (!s.count(c)) throw StructuralError(where + ": missing child " + child_name(c));
}

// Screen conditions shared by all components; returns the first violation.
std::optional<std::string> check_component(const StableTree& t, IndexSet x, const Screen& s, bool root) {
  const std::string where = root ? std::string("root") : "screen " + set_key(x);
  std::vector<std::pair<IndexSet, Position>> kids(s.begin(), s.end());
  bool two_positions = false;
  for (std::size_t a = 1; a < kids.size(); ++a)
    if (!same_position(t, root, kids[0].second, kids[a].second)) two_positions = true;
  if (!two_positions) return where + ": all children share one position";
  std::vector<bool> grouped(kids.size(), false);
  for (std::size_t a = 0; a < kids.size(); ++a) {
    if (grouped[a]) continue;
    IndexSet group = kids[a].first;
    bool has_node = size_of(kids[a].first) > 1;
    std::size_t members = 1;
    for (std::size_t b = a + 1; b < kids.size(); ++b)
      if (same_position(t, root, kids[a].second, kids[b].second)) {
        grouped[b] = true;
        group |= kids[b].first;
        has_node = has_node || size_of(kids[b].first) > 1;
        ++members;
      }
    if (members == 1) continue;
    if (has_node) return where + ": a node child shares its position with another child";
    if (t.weights.heavy(group))
      return where + ": marks " + set_key(group) + " share a position with weight sum " +
             to_string(t.weights.sum(group)) + " > 1";
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate(const StableTree& t) {
  ValidationReport r;
  const int n = t.n();
  const IndexSet all = range_set(1, n);
  auto fail = [&](const std::string& msg) {
    r.accepted = false;
    r.violations.push_back(msg);
    return r;
  };
  // collection
  for (IndexSet s : t.collection) {
    if (s == 0 || !subset_of(s, all)) throw StructuralError("collection member " + set_key(s) + " is out of range");
    if (s == all) throw StructuralError("the full mark set is the root, not a collection member");
  }
  for (std::size_t a = 0; a < t.collection.size(); ++a)
    for (std::size_t b = a + 1; b < t.collection.size(); ++b) {
      if (t.collection[a] == t.collection[b])
        throw StructuralError("collection member " + set_key(t.collection[a]) + " is repeated");
    }
  for (const auto& [key, screen] : t.screens)
    if (std::find(t.collection.begin(), t.collection.end(), key) == t.collection.end())
      throw StructuralError("screen " + set_key(key) + " has no collection member");
  if (!is_nested(t.collection)) return fail("collection is not nested");
  for (IndexSet s : t.collection) {
    if (!t.screens.count(s)) throw StructuralError("collection member " + set_key(s) + " has no screen");
    check_screen_shape(t, s, t.screens.at(s), false);
  }
  check_screen_shape(t, all, t.root, true);
  if (t.kind == TreeKind::Rooted) {
    if (!validate_domain(t.weights, DomainKind::T).accepted) return fail("weights are outside the T domain");
  } else {
    if (n < t.d() + 3) throw StructuralError("framed trees need n > d+2");
    auto rep = validate_domain(t.weights, DomainKind::P);
    if (!rep.accepted) return fail("weights are outside the P domain: " + rep.violations.front());
  }
  for (IndexSet s : t.collection) {
    if (size_of(s) < 2 || !t.weights.heavy(s))
      return fail("collection member " + set_key(s) + " has weight sum " + to_string(t.weights.sum(s)) + " <= 1");
    if (t.kind == TreeKind::Framed && !subset_of(s, range_set(t.d() + 1, n)))
      return fail("collection member " + set_key(s) + " meets the frame marks 1.." + std::to_string(t.d()));
  }
  for (IndexSet s : t.collection)
    if (auto v = check_component(t, s, t.screens.at(s), false)) return fail(*v);
  if (auto v = check_component(t, all, t.root, true)) return fail(*v);
  if (t.kind == TreeKind::Framed) {
    std::vector<HomPoint> pts(static_cast<std::size_t>(n));
    for (const auto& [c, p] : t.root)
      for (int i : labels(c)) pts[static_cast<std::size_t>(i - 1)] = p;
    for (const auto& p : pts)
      if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; }))
        throw StructuralError("root position is the zero vector");
    PointConfiguration cfg(t.d(), pts);
    auto st = is_stable(cfg, git_weights(t.d(), n).w);
    if (!st.stable)
      return fail("root: collapsed configuration is not GIT-stable (points " + set_key(st.witness) +
                  " span a subspace of dimension " + std::to_string(st.witness_dim) + ")");
  }
  return r;
}

namespace {

Screen canonical_screen(const Screen& s) {
  std::vector<std::pair<IndexSet, Position>> kids(s.begin(), s.end());
  std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return min_label(a.first) < min_label(b.first); });
  Position origin = kids.front().second;
  for (auto& [c, p] : kids)
    for (std::size_t k = 0; k < p.size(); ++k) p[k] -= origin[k];
  Rational scale = 0;
  for (const auto& [c, p] : kids) {
    for (const auto& x : p)
      if (x != 0) {
        scale = x;
        break;
      }
    if (scale != 0) break;
  }
  Screen out;
  for (auto& [c, p] : kids) {
    for (auto& x : p) x /= scale;
    out[c] = p;
  }
  return out;
}

Screen canonical_framed_root(const StableTree& t) {
  const int d = t.d(), n = t.n();
  std::vector<HomPoint> pts(static_cast<std::size_t>(n));
  for (const auto& [c, p] : t.root)
    for (int i : labels(c)) pts[static_cast<std::size_t>(i - 1)] = p;
  QuotientPoint qp = normalize(PointConfiguration(d, pts));
  Screen out;
  for (const auto& [c, p] : t.root) {
    int m = min_label(c);
    Position x(static_cast<std::size_t>(d) + 1, Rational(0));
    if (m <= d + 1) {
      x[static_cast<std::size_t>(m - 1)] = 1;
    } else {
      for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] = qp.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(m - d - 2)];
      x[static_cast<std::size_t>(d)] = 1;
    }
    out[c] = normalize_point(x);
  }
  return out;
}

// Explicit component tree used while restabilizing.
struct Kid {
  int node = -1;  // component index, or -1 for a mark
  int mark = 0;
  Position pos;
};

struct Component {
  std::vector<Kid> kids;
};

struct Work {
  std::vector<Component> comps;

  int build(const StableTree& t, IndexSet x, const Screen& s) {
    int id = static_cast<int>(comps.size());
    comps.emplace_back();
    for (const auto& [c, p] : s) {
      Kid k;
      k.pos = p;
      if (size_of(c) == 1) {
        k.mark = min_label(c);
      } else {
        k.node = build(t, c, t.screens.at(c));
      }
      comps[static_cast<std::size_t>(id)].kids.push_back(k);
    }
    (void)x;
    return id;
  }

  IndexSet marks(int id) const {
    IndexSet m = 0;
    for (const auto& k : comps[static_cast<std::size_t>(id)].kids)
      m |= k.node < 0 ? singleton(k.mark) : marks(k.node);
    return m;
  }

  int distinct_positions(int id) const {
    std::vector<Position> seen;
    for (const auto& k : comps[static_cast<std::size_t>(id)].kids)
      if (std::find(seen.begin(), seen.end(), k.pos) == seen.end()) seen.push_back(k.pos);
    return static_cast<int>(seen.size());
  }

  // Restabilizes the subtree below `id` for the marks in r and the weights w; returns the
  // kids that stand in for this component inside its parent.
  std::vector<Kid> process(int id, IndexSet r, const std::vector<Rational>& w, bool is_root) {
    std::vector<Kid> next;
    for (const auto& k : comps[static_cast<std::size_t>(id)].kids) {
      if (k.node < 0) {
        if (contains(r, k.mark)) next.push_back(k);
        continue;
      }
      for (Kid rep : process(k.node, r, w, false)) {
        rep.pos = k.pos;
        next.push_back(rep);
      }
    }
    comps[static_cast<std::size_t>(id)].kids = next;
    if (is_root) return {};
    IndexSet m = marks(id);
    Rational sum = 0;
    for (int i : labels(m)) sum += w[static_cast<std::size_t>(i - 1)];
    if (sum <= 1) {
      std::vector<Kid> flat;
      for (int i : labels(m)) flat.push_back(Kid{-1, i, {}});
      return flat;
    }
    if (distinct_positions(id) < 2) return next;
    return {Kid{id, 0, {}}};
  }
};

StableTree rebuild(const Work& w, int root_id, const StableTree& src, IndexSet r,
                   const WeightVector& weights) {
  std::vector<int> relabel(static_cast<std::size_t>(kMaxLabels) + 1, 0);
  int next = 0;
  for (int i : labels(r)) relabel[static_cast<std::size_t>(i)] = ++next;
  auto map_set = [&](IndexSet s) {
    IndexSet out = 0;
    for (int i : labels(s)) out |= singleton(relabel[static_cast<std::size_t>(i)]);
    return out;
  };
  StableTree t{src.kind, weights, {}, {}, {}};
  std::function<Screen(int)> screen_of = [&](int id) {
    Screen s;
    for (const auto& k : w.comps[static_cast<std::size_t>(id)].kids) {
      if (k.node < 0) {
        s[singleton(relabel[static_cast<std::size_t>(k.mark)])] = k.pos;
      } else {
        IndexSet key = map_set(w.marks(k.node));
        t.collection.push_back(key);
        t.screens[key] = screen_of(k.node);
        s[key] = k.pos;
      }
    }
    return s;
  };
  t.root = screen_of(root_id);
  sort_collection(t.collection);
  return t;
}

StableTree restabilize(const StableTree& t, IndexSet r, const WeightVector& out_weights,
                       const std::vector<Rational>& w_full) {
  Work w;
  int root = w.build(t, range_set(1, t.n()), t.root);
  w.process(root, r, w_full, true);
  // a rooted root left with one position either is a single node, promoted, or fails
  while (t.kind == TreeKind::Rooted && w.distinct_positions(root) < 2) {
    const auto& kids = w.comps[static_cast<std::size_t>(root)].kids;
    if (kids.size() == 1 && kids.front().node >= 0) {
      root = kids.front().node;
      continue;
    }
    throw DomainError("all remaining marks coincide, which leaves the T domain");
  }
  StableTree out = rebuild(w, root, t, r, out_weights);
  auto rep = validate(out);
  if (!rep.accepted) throw DomainError("restabilized tree is invalid: " + rep.violations.front());
  return out;
}

void require_valid(const StableTree& t) {
  auto rep = validate(t);
  if (!rep.accepted) throw DomainError("invalid tree: " + rep.violations.front());
}

}  // namespace

StableTree canonicalize(const StableTree& t) {
  require_valid(t);
  StableTree out = t;
  sort_collection(out.collection);
  for (auto& [key, s] : out.screens) s = canonical_screen(s);
  out.root = t.kind == TreeKind::Rooted ? canonical_screen(t.root) : canonical_framed_root(t);
  return out;
}

StableTree reduce(const StableTree& t, const WeightVector& b) {
  require_valid(t);
  if (b.n() != t.n() || b.d() != t.d()) throw StructuralError("target weights have the wrong shape");
  for (int i = 1; i <= t.n(); ++i)
    if (b[i] > t.weights[i])
      throw DomainError("b_" + std::to_string(i) + " = " + to_string(b[i]) + " exceeds a_" + std::to_string(i));
  auto rep = validate_domain(b, t.kind == TreeKind::Rooted ? DomainKind::T : DomainKind::P);
  if (!rep.accepted) throw DomainError("target weights are outside the domain: " + rep.violations.front());
  return restabilize(t, range_set(1, t.n()), b, b.entries());
}

StableTree forget(const StableTree& t, IndexSet r) {
  require_valid(t);
  const int n = t.n(), d = t.d();
  if (!subset_of(r, range_set(1, n))) throw StructuralError("forgotten-to set is out of range");
  if (size_of(r) < 2) throw StructuralError("need at least two surviving marks");
  if (t.kind == TreeKind::Framed) {
    if (!subset_of(range_set(1, d + 1), r)) throw DomainError("framed forget must keep marks 1..d+1");
    if (size_of(r) < d + 3) throw DomainError("framed forget needs more than d+2 surviving marks");
  }
  std::vector<Rational> kept;
  for (int i : labels(r)) kept.push_back(t.weights[i]);
  WeightVector wr(d, kept);
  if (t.kind == TreeKind::Rooted && !validate_domain(wr, DomainKind::T).accepted)
    throw DomainError("restricted weights are outside the T domain");
  return restabilize(t, r, wr, t.weights.entries());
}

std::map<IndexSet, StableTree> forgetful_profile(const StableTree& t, int k) {
  if (t.kind != TreeKind::Rooted) throw StructuralError("profiles are defined for rooted trees");
  if (k < 2 || k > t.n()) throw StructuralError("profile size k out of range");
  std::map<IndexSet, StableTree> out;
  const IndexSet all = range_set(1, t.n());
  for (IndexSet s = all;; s = (s - 1) & all) {
    if (size_of(s) == k) out.emplace(s, canonicalize(forget(t, s)));
    if (s == 0) break;
  }
  return out;
}

StableTree random_rooted_tree(const WeightVector& a, std::mt19937_64& rng) {
  const int n = a.n(), d = a.d();
  Ambient amb(AmbientKind::TSpace, d, n);
  std::vector<IndexSet> heavy;
  for (IndexSet s : heavy_family(a, amb))
    if (s != range_set(1, n)) heavy.push_back(s);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(heavy.begin(), heavy.end(), rng);
    std::vector<IndexSet> chosen;
    for (IndexSet s : heavy) {
      if (coin(rng) == 0) continue;
      bool ok = std::none_of(chosen.begin(), chosen.end(), [&](IndexSet c) { return overlaps(c, s); });
      if (ok) chosen.push_back(s);
    }
    StableTree t{TreeKind::Rooted, a, chosen, {}, {}};
    sort_collection(t.collection);
    auto place = [&](IndexSet x) {
      Screen s;
      std::vector<IndexSet> marks_placed;
      for (IndexSet c : component_children(t, x)) {
        // marks sometimes reuse the position of an earlier mark
        if (size_of(c) == 1 && !marks_placed.empty() && coin(rng) == 0) {
          std::uniform_int_distribution<std::size_t> pick(0, marks_placed.size() - 1);
          s[c] = s[marks_placed[pick(rng)]];
        } else {
          Position p;
          for (int k = 0; k < d; ++k) p.push_back(Rational(coord(rng)));
          s[c] = p;
        }
        if (size_of(c) == 1) marks_placed.push_back(c);
      }
      return s;
    };
    for (IndexSet c : t.collection) t.screens[c] = place(c);
    t.root = place(range_set(1, n));
    if (validate(t).accepted) return t;
  }
  throw DomainError("could not sample a valid tree for these weights");
}

}  // namespace tdn
