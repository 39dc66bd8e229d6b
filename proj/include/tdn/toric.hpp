#pragma once

#include "tdn/index_set.hpp"
#include "tdn/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tdn {

enum class FanKind { T, P };

FanKind parse_fan_kind(const std::string& s);

using Ray = std::vector<std::int64_t>;

struct Fan {
  int lattice_rank = 0;
  std::vector<Ray> rays;
  std::vector<std::vector<int>> max_cones;  // sorted ray indices
};

struct FanCheck {
  bool smooth = false;
  bool complete = false;
  int probes = 0;
  int uncovered_probes = 0;
  int bad_ridges = 0;
};

// Centers of the Losev-Manin building set in blowup order, with the base-ray label sets
// they subdivide (I minus n for T, I minus d+1 for P).
struct ToricCenter {
  IndexSet center;
  IndexSet cone_labels;
};
std::vector<ToricCenter> lm_centers(FanKind kind, int d, int n);

std::vector<Ray> lm_rays(FanKind kind, int d, int n);
Fan build_fan(FanKind kind, int d, int n);
// Complete fan of P^r, product fans of projective spaces.
Fan projective_space_fan(int r);
Fan product_fan(const Fan& a, const Fan& b);

FanCheck check_fan(const Fan& f, std::uint64_t seed = 1, int random_probes = 1000);
std::vector<std::int64_t> f_vector(const Fan& f);  // f_k = number of k-dimensional cones
Poly h_polynomial(const Fan& f);

}  // namespace tdn
