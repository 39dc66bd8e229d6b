#include "tdn/toric.hpp"

#include "tdn/linalg.hpp"
#include "tdn/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

namespace tdn {

FanKind parse_fan_kind(const std::string& s) {
  if (s == "T") return FanKind::T;
  if (s == "P") return FanKind::P;
  throw StructuralError("unknown fan kind: " + s);
}

namespace {

struct Lattice {
  int factors;       // number of independent relations (1 for T, d for P)
  int per_factor;    // basis vectors per factor before the relation
  int rank() const { return factors * (per_factor - 1); }
  // realize a formal combination (indexed factor-major) in the quotient lattice
  Ray realize(const std::vector<std::int64_t>& formal) const {
    Ray out;
    for (int f = 0; f < factors; ++f) {
      std::int64_t last = formal[static_cast<std::size_t>(f * per_factor + per_factor - 1)];
      for (int j = 0; j < per_factor - 1; ++j)
        out.push_back(formal[static_cast<std::size_t>(f * per_factor + j)] - last);
    }
    return out;
  }
};

void check_params(FanKind kind, int d, int n) {
  if (d < 1) throw StructuralError("d must be positive");
  if (kind == FanKind::T && n < 2) throw StructuralError("T-kind fan needs n >= 2");
  if (kind == FanKind::P && n < d + 3) throw StructuralError("P-kind fan needs n > d+2");
  if (n > kMaxLabels) throw StructuralError("n too large");
}

// Formal basis index of e^k_i.
int basis_index(FanKind kind, int d, int n, int i, int k) {
  if (kind == FanKind::T) return (k - 1) * (n - 1) + (i - 1);
  return (k - 1) * (n - d - 1) + (i - d - 2);
}

Lattice lattice_for(FanKind kind, int d, int n) {
  if (kind == FanKind::T) return Lattice{1, d * (n - 1)};
  return Lattice{d, n - d - 1};
}

}  // namespace

std::vector<ToricCenter> lm_centers(FanKind kind, int d, int n) {
  check_params(kind, d, n);
  WeightVector w = kind == FanKind::T ? lm_weights_T(d, n) : lm_weights_P(d, n);
  int special = kind == FanKind::T ? n : d + 1;
  IndexSet u = kind == FanKind::T ? range_set(1, n) : range_set(d + 1, n);
  std::vector<IndexSet> centers;
  for (IndexSet s = u;; s = (s - 1) & u) {
    if (s != u && size_of(s) >= 2 && w.heavy(s)) centers.push_back(s);
    if (s == 0) break;
  }
  std::sort(centers.begin(), centers.end(), [](IndexSet a, IndexSet b) {
    if (size_of(a) != size_of(b)) return size_of(a) > size_of(b);
    return lex_less(a, b);
  });
  std::vector<ToricCenter> out;
  for (IndexSet s : centers) out.push_back(ToricCenter{s, s & ~singleton(special)});
  return out;
}

Fan projective_space_fan(int r) {
  Fan f;
  f.lattice_rank = r;
  for (int j = 0; j < r; ++j) {
    Ray e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(j)] = 1;
    f.rays.push_back(e);
  }
  f.rays.push_back(Ray(static_cast<std::size_t>(r), -1));
  for (int skip = 0; skip <= r; ++skip) {
    std::vector<int> cone;
    for (int j = 0; j <= r; ++j)
      if (j != skip) cone.push_back(j);
    f.max_cones.push_back(cone);
  }
  return f;
}

Fan product_fan(const Fan& a, const Fan& b) {
  Fan f;
  f.lattice_rank = a.lattice_rank + b.lattice_rank;
  for (const auto& r : a.rays) {
    Ray x = r;
    x.resize(static_cast<std::size_t>(f.lattice_rank), 0);
    f.rays.push_back(x);
  }
  for (const auto& r : b.rays) {
    Ray x(static_cast<std::size_t>(a.lattice_rank), 0);
    x.insert(x.end(), r.begin(), r.end());
    f.rays.push_back(x);
  }
  int off = static_cast<int>(a.rays.size());
  for (const auto& ca : a.max_cones)
    for (const auto& cb : b.max_cones) {
      std::vector<int> c = ca;
      for (int j : cb) c.push_back(j + off);
      f.max_cones.push_back(c);
    }
  return f;
}

namespace {

// Base fan in the realized lattice, with a map from (i, k) to the ray index.
Fan base_fan(FanKind kind, int d, int n, std::map<std::pair<int, int>, int>& index_of) {
  Lattice lat = lattice_for(kind, d, n);
  Fan f;
  f.lattice_rank = lat.rank();
  int first = kind == FanKind::T ? 1 : d + 2;
  int last = kind == FanKind::T ? n - 1 : n;
  // rays factor by factor, in formal basis order
  std::vector<std::pair<int, int>> formal_order(static_cast<std::size_t>(lat.factors * lat.per_factor));
  for (int k = 1; k <= d; ++k)
    for (int i = first; i <= last; ++i)
      formal_order[static_cast<std::size_t>(basis_index(kind, d, n, i, k))] = {i, k};
  for (std::size_t idx = 0; idx < formal_order.size(); ++idx) {
    std::vector<std::int64_t> formal(formal_order.size(), 0);
    formal[idx] = 1;
    index_of[formal_order[idx]] = static_cast<int>(f.rays.size());
    f.rays.push_back(lat.realize(formal));
  }
  // maximal cones: omit one ray from each factor
  std::vector<std::vector<int>> cones{{}};
  for (int fct = 0; fct < lat.factors; ++fct) {
    std::vector<std::vector<int>> next;
    for (const auto& c : cones)
      for (int skip = 0; skip < lat.per_factor; ++skip) {
        std::vector<int> x = c;
        for (int j = 0; j < lat.per_factor; ++j)
          if (j != skip) x.push_back(fct * lat.per_factor + j);
        next.push_back(x);
      }
    cones = std::move(next);
  }
  for (auto& c : cones) std::sort(c.begin(), c.end());
  f.max_cones = std::move(cones);
  return f;
}

Ray sum_of(const Fan& f, const std::vector<int>& idx) {
  Ray s(static_cast<std::size_t>(f.lattice_rank), 0);
  for (int i : idx)
    for (int j = 0; j < f.lattice_rank; ++j) s[static_cast<std::size_t>(j)] += f.rays[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return s;
}

}  // namespace

std::vector<Ray> lm_rays(FanKind kind, int d, int n) {
  std::map<std::pair<int, int>, int> index_of;
  Fan f = base_fan(kind, d, n, index_of);
  std::vector<Ray> rays = f.rays;
  for (const auto& c : lm_centers(kind, d, n)) {
    std::vector<int> idx;
    for (int i : labels(c.cone_labels))
      for (int k = 1; k <= d; ++k) idx.push_back(index_of.at({i, k}));
    Ray r = sum_of(f, idx);
    if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
  }
  return rays;
}

Fan build_fan(FanKind kind, int d, int n) {
  std::map<std::pair<int, int>, int> index_of;
  Fan f = base_fan(kind, d, n, index_of);
  for (const auto& c : lm_centers(kind, d, n)) {
    std::vector<int> sigma;
    for (int i : labels(c.cone_labels))
      for (int k = 1; k <= d; ++k) sigma.push_back(index_of.at({i, k}));
    std::sort(sigma.begin(), sigma.end());
    if (sigma.size() < 2) continue;  // a ray is its own subdivision
    Ray v = sum_of(f, sigma);
    std::vector<std::vector<int>> next;
    bool found = false;
    int vi = static_cast<int>(f.rays.size());
    for (const auto& tau : f.max_cones) {
      if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) {
        next.push_back(tau);
        continue;
      }
      found = true;
      for (int u : sigma) {
        std::vector<int> x;
        for (int j : tau)
          if (j != u) x.push_back(j);
        x.push_back(vi);
        std::sort(x.begin(), x.end());
        next.push_back(x);
      }
    }
    if (!found) throw StructuralError("subdivision target cone for " + set_key(c.center) + " is absent");
    f.rays.push_back(v);
    f.max_cones = std::move(next);
  }
  return f;
}

namespace {

MatZ cone_matrix(const Fan& f, const std::vector<int>& cone) {
  MatZ m(f.lattice_rank, static_cast<Eigen::Index>(cone.size()));
  for (std::size_t c = 0; c < cone.size(); ++c)
    for (int r = 0; r < f.lattice_rank; ++r)
      m(r, static_cast<Eigen::Index>(c)) = f.rays[static_cast<std::size_t>(cone[c])][static_cast<std::size_t>(r)];
  return m;
}

// Integer matrix adj = det * M^{-1}, kept with det so membership needs no division.
struct ConeTest {
  MatZ adj;
  std::int64_t det;
  bool contains(const VecZ& v) const {
    for (Eigen::Index i = 0; i < adj.rows(); ++i) {
      __int128 s = 0;
      for (Eigen::Index j = 0; j < adj.cols(); ++j) s += static_cast<__int128>(adj(i, j)) * v(j);
      if ((det > 0 && s < 0) || (det < 0 && s > 0)) return false;
    }
    return true;
  }
};

}  // namespace

FanCheck check_fan(const Fan& f, std::uint64_t seed, int random_probes) {
  FanCheck res;
  const int r = f.lattice_rank;
  bool simplicial = true;
  for (const auto& c : f.max_cones)
    if (static_cast<int>(c.size()) != r) simplicial = false;
  if (!simplicial) throw StructuralError("check_fan expects full-dimensional simplicial cones");
  std::vector<ConeTest> tests;
  res.smooth = true;
  bool degenerate = false;
  for (const auto& c : f.max_cones) {
    MatZ m = cone_matrix(f, c);
    std::int64_t det = determinant<std::int64_t>(m);
    if (det != 1 && det != -1) res.smooth = false;
    if (det == 0) {
      degenerate = true;
      continue;
    }
    MatQ inv = *inverse(to_rational(m));
    MatZ adj(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Rational x = inv(i, j) * det;
        adj(i, j) = static_cast<std::int64_t>(boost::multiprecision::numerator(x));
      }
    tests.push_back(ConeTest{adj, det});
  }
  // ridges: each facet of a maximal cone lies in exactly two maximal cones, with the two
  // opposite rays on opposite sides of the facet hyperplane
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>> ridges;
  for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    const auto& c = f.max_cones[ci];
    for (int drop : c) {
      std::vector<int> facet;
      for (int j : c)
        if (j != drop) facet.push_back(j);
      ridges[facet].push_back({ci, drop});
    }
  }
  for (const auto& [facet, owners] : ridges) {
    if (owners.size() != 2) {
      ++res.bad_ridges;
      continue;
    }
    // sign of det([facet | opposite ray]) must differ
    auto side = [&](int opposite) {
      std::vector<int> cols = facet;
      cols.push_back(opposite);
      std::int64_t det = determinant<std::int64_t>(cone_matrix(f, cols));
      return (det > 0) - (det < 0);
    };
    if (side(owners[0].second) * side(owners[1].second) != -1) ++res.bad_ridges;
  }
  // probes: all sign vectors plus seeded random integer directions
  std::vector<VecZ> probes;
  if (r <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      VecZ v(r);
      for (int j = 0; j < r; ++j) v(j) = (mask >> j) & 1u ? 1 : -1;
      probes.push_back(v);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (int p = 0; p < random_probes; ++p) {
    VecZ v(r);
    for (int j = 0; j < r; ++j) v(j) = coord(rng);
    probes.push_back(v);
  }
  for (const auto& v : probes) {
    ++res.probes;
    bool covered = std::any_of(tests.begin(), tests.end(), [&](const ConeTest& t) { return t.contains(v); });
    if (!covered) ++res.uncovered_probes;
  }
  res.complete = !degenerate && res.bad_ridges == 0 && res.uncovered_probes == 0;
  return res;
}

std::vector<std::int64_t> f_vector(const Fan& f) {
  if (f.rays.size() > 64) throw StructuralError("f-vector supports at most 64 rays");
  const int r = f.lattice_rank;
  std::vector<std::unordered_set<std::uint64_t>> faces(static_cast<std::size_t>(r) + 1);
  for (const auto& c : f.max_cones) {
    const std::size_t k = c.size();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < k; ++j)
        if ((sub >> j) & 1u) key |= std::uint64_t{1} << c[j];
      faces[static_cast<std::size_t>(std::popcount(sub))].insert(key);
    }
  }
  std::vector<std::int64_t> out;
  for (const auto& s : faces) out.push_back(static_cast<std::int64_t>(s.size()));
  return out;
}

Poly h_polynomial(const Fan& f) {
  auto fv = f_vector(f);
  const int r = f.lattice_rank;
  auto binom = [](int a, int b) {
    std::int64_t x = 1;
    for (int i = 1; i <= b; ++i) x = x * (a - b + i) / i;
    return x;
  };
  std::vector<std::int64_t> h(static_cast<std::size_t>(r) + 1, 0);
  for (int k = 0; k <= r; ++k) {
    std::int64_t s = 0;
    for (int j = k; j <= r; ++j) {
      std::int64_t term = binom(j, k) * fv[static_cast<std::size_t>(r - j)];
      s += ((j - k) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = s;
  }
  return Poly(h);
}

}  // namespace tdn
