#include "tdn/git.hpp"

#include <algorithm>

namespace tdn {

HomPoint normalize_point(HomPoint p) {
  auto it = std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; });
  if (it == p.end()) throw StructuralError("zero vector is not a projective point");
  Rational lead = *it;
  for (auto& x : p) x /= lead;
  return p;
}

PointConfiguration::PointConfiguration(int d, std::vector<HomPoint> points) : d_(d) {
  if (d < 1) throw StructuralError("d must be positive");
  for (auto& p : points) {
    if (static_cast<int>(p.size()) != d + 1)
      throw StructuralError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                            std::to_string(d + 1));
    points_.push_back(normalize_point(std::move(p)));
  }
}

PointConfiguration PointConfiguration::transformed(const MatQ& m) const {
  std::vector<HomPoint> out;
  for (const auto& p : points_) {
    VecQ v(d_ + 1);
    for (int i = 0; i <= d_; ++i) v(i) = p[static_cast<std::size_t>(i)];
    VecQ r = m * v;
    out.emplace_back(r.data(), r.data() + r.size());
  }
  return PointConfiguration(d_, std::move(out));
}

namespace {

MatQ matrix_of(const PointConfiguration& c, IndexSet s) {
  auto ls = labels(s);
  MatQ m(static_cast<Eigen::Index>(ls.size()), c.d() + 1);
  for (std::size_t r = 0; r < ls.size(); ++r)
    for (int k = 0; k <= c.d(); ++k) m(static_cast<Eigen::Index>(r), k) = c[ls[r]][static_cast<std::size_t>(k)];
  return m;
}

bool same_point(const HomPoint& a, const HomPoint& b) { return a == b; }

}  // namespace

StabilityResult is_stable(const PointConfiguration& c, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != c.n()) throw StructuralError("weight count does not match points");
  const int n = c.n(), d = c.d();
  StabilityResult res;
  IndexSet all = range_set(1, n);
  std::vector<int> ranks(static_cast<std::size_t>(all) + 1, 0);
  for (IndexSet s = 1; s <= all; ++s) ranks[s] = rank(matrix_of(c, s));
  for (IndexSet s = 1; s <= all; ++s) {
    int r = ranks[s];
    int dim = r - 1;
    if (dim >= d) continue;  // not a proper subspace
    // closure: every point lying in the span of s
    IndexSet closure = s;
    for (int i = 1; i <= n; ++i)
      if (ranks[s | singleton(i)] == r) closure |= singleton(i);
    if (closure != s) continue;  // visit each span once, through its full point set
    Rational sum = 0;
    for (int i : labels(closure)) sum += w[static_cast<std::size_t>(i - 1)];
    if (sum == dim + 1) res.integer_sum_seen = true;
    if (sum >= dim + 1 && res.stable) {
      res.stable = false;
      res.witness = closure;
      res.witness_dim = dim;
      res.witness_weight = sum;
    }
  }
  return res;
}

bool frame_conditions(const PointConfiguration& c) {
  const int d = c.d(), n = c.n();
  // (1) frame in general position
  if (rank(matrix_of(c, range_set(1, d + 1))) != d + 1) return false;
  // (2) no later point in the span of p_1..p_d
  for (int i = d + 2; i <= n; ++i)
    if (rank(matrix_of(c, range_set(1, d) | singleton(i))) == d) return false;
  // (3) p_{d+1} = ... = p_n is forbidden
  bool all_equal = true;
  for (int i = d + 2; i <= n; ++i)
    if (!same_point(c[i], c[d + 1])) all_equal = false;
  if (all_equal) return false;
  // (4) the later points are not all on the hyperplane spanned by the frame minus p_k
  for (int k = 1; k <= d; ++k) {
    IndexSet hyper = range_set(1, d + 1) & ~singleton(k);
    bool all_on = true;
    for (int i = d + 2; i <= n; ++i)
      if (rank(matrix_of(c, hyper | singleton(i))) != d) all_on = false;
    if (all_on) return false;
  }
  return true;
}

QuotientPoint normalize(const PointConfiguration& c) {
  const int d = c.d(), n = c.n();
  GitWeightVector g = git_weights(d, n);
  if (!is_stable(c, g.w).stable) throw DomainError("configuration is not GIT-stable");
  MatQ frame(d + 1, d + 1);
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k) frame(k, j) = c[j + 1][static_cast<std::size_t>(k)];
  auto inv = inverse(frame);
  if (!inv) throw DomainError("frame points are not in general position");
  QuotientPoint qp;
  qp.rows.assign(static_cast<std::size_t>(d), {});
  for (int i = d + 2; i <= n; ++i) {
    VecQ v(d + 1);
    for (int k = 0; k <= d; ++k) v(k) = c[i][static_cast<std::size_t>(k)];
    VecQ b = (*inv) * v;
    if (b(d) == 0) throw DomainError("point lies in the span of p_1..p_d");
    for (int k = 0; k < d; ++k) qp.rows[static_cast<std::size_t>(k)].push_back(b(k) / b(d));
  }
  for (auto& row : qp.rows) row = normalize_point(row);
  return qp;
}

std::vector<IndexSet> classify_coincidence(const QuotientPoint& qp, const WeightVector& a) {
  const int d = a.d(), n = a.n();
  if (static_cast<int>(qp.rows.size()) != d) throw StructuralError("quotient point has wrong number of rows");
  for (const auto& row : qp.rows)
    if (static_cast<int>(row.size()) != n - d - 1) throw StructuralError("quotient row has wrong length");
  auto b = [&](int k, int i) -> const Rational& { return qp.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - d - 2)]; };
  Ambient amb(AmbientKind::PSpace, d, n);
  std::vector<IndexSet> out;
  for (IndexSet s : heavy_family(a, amb)) {
    bool holds = true;
    auto ls = labels(s);
    if (contains(s, d + 1)) {
      for (int i : ls)
        if (i != d + 1)
          for (int k = 0; k < d; ++k)
            if (b(k, i) != 0) holds = false;
    } else {
      for (std::size_t x = 1; x < ls.size(); ++x)
        for (int k = 0; k < d; ++k)
          if (b(k, ls[x]) != b(k, ls[0])) holds = false;
    }
    if (holds) out.push_back(s);
  }
  return out;
}

std::vector<IndexSet> literal_coincidences(const PointConfiguration& c, const WeightVector& a) {
  Ambient amb(AmbientKind::PSpace, a.d(), a.n());
  std::vector<IndexSet> out;
  for (IndexSet s : heavy_family(a, amb)) {
    auto ls = labels(s);
    bool same = true;
    for (int i : ls)
      if (!same_point(c[i], c[ls[0]])) same = false;
    if (same) out.push_back(s);
  }
  return out;
}

}  // namespace tdn
