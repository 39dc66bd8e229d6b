#pragma once

#include "tdn/arrangements.hpp"
#include "tdn/linalg.hpp"
#include "tdn/weights.hpp"

#include <vector>

namespace tdn {

// A point of P^d; normalized so the first nonzero coordinate is 1.
using HomPoint = std::vector<Rational>;

HomPoint normalize_point(HomPoint p);

class PointConfiguration {
 public:
  PointConfiguration(int d, std::vector<HomPoint> points);
  int d() const { return d_; }
  int n() const { return static_cast<int>(points_.size()); }
  const std::vector<HomPoint>& points() const { return points_; }
  const HomPoint& operator[](int label) const { return points_.at(static_cast<std::size_t>(label - 1)); }
  // Applies x -> M x to every point.
  PointConfiguration transformed(const MatQ& m) const;

 private:
  int d_;
  std::vector<HomPoint> points_;
};

struct StabilityResult {
  bool stable = true;
  IndexSet witness = 0;  // all points lying in the violating subspace
  int witness_dim = -1;
  Rational witness_weight;
  // true when some subspace weight sum hit dim W + 1 exactly (semistable boundary)
  bool integer_sum_seen = false;
};

StabilityResult is_stable(const PointConfiguration& c, const std::vector<Rational>& w);

// Direct check of the four conditions listed for the GIT weights: frame in general
// position, no later point in the span of p_1..p_d, not all of p_{d+1}..p_n equal, and
// the later points not all on one coordinate hyperplane of the frame.
bool frame_conditions(const PointConfiguration& c);

struct QuotientPoint {
  std::vector<std::vector<Rational>> rows;  // d rows, each a normalized point of P^{n-d-2}
  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
};

// Sends p_1..p_{d+1} to the standard frame, reads off the chart coordinates of the later
// points and removes the residual torus by normalizing each row. Throws DomainError for
// configurations that are not stable for git_weights(d, n).
QuotientPoint normalize(const PointConfiguration& c);

// Heavy I inside {d+1..n} whose coincidence equations vanish at qp.
std::vector<IndexSet> classify_coincidence(const QuotientPoint& qp, const WeightVector& a);

// Index sets of points that literally coincide in c (projectively), restricted to heavy
// subsets of {d+1..n}.
std::vector<IndexSet> literal_coincidences(const PointConfiguration& c, const WeightVector& a);

}  // namespace tdn
