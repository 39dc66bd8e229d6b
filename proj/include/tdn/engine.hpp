#pragma once

#include "tdn/arrangements.hpp"
#include "tdn/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tdn {

enum class EngineMethod { Ledger, Strata };

struct CenterRecord {
  IndexSet set = 0;
  int codim = 0;  // codimension of the dominant transform when it is blown up
  Poly p_cur;     // its Poincare polynomial at that time
  int twist = 0;  // earlier centers strictly containing the set
};

struct EngineResult {
  Poly total;
  std::vector<CenterRecord> per_center;  // in blowup order
  std::int64_t euler = 0;
  std::int64_t b2 = 0;
  EngineMethod method = EngineMethod::Ledger;

  const CenterRecord& center(IndexSet s) const;
};

Poly ambient_poincare(const Ambient& ambient);

// Full run with domain validation. An empty order means ascending dimension with
// lexicographic tie-break. Containment-compatible orders replay the ledger; other
// admissible orders count dominant transforms stratum by stratum.
EngineResult run(const Ambient& ambient, const WeightVector& a,
                 const std::vector<IndexSet>& order = {});

// Lower-level entry points on an explicit center family (no weight validation).
EngineResult run_ledger(const Ambient& ambient, const std::vector<IndexSet>& order);
EngineResult run_strata(const Ambient& ambient, const std::vector<IndexSet>& order);

// Point count of the wonderful model of the building set `family`; with `dominant` set,
// the count of the dominant transform of that locus instead. `family` must be closed under
// unions of overlapping members that are centers.
Poly stratum_count(const Ambient& ambient, const std::vector<IndexSet>& family,
                   std::optional<IndexSet> dominant = std::nullopt);

// Boundary divisor of a heavy set as the product of its two factor spaces.
Poly divisor_poincare(const Ambient& ambient, const WeightVector& a, IndexSet i);

int twist_report(const Ambient& ambient, const WeightVector& a, IndexSet i);

// Euler number of T_{d,n} (unit weights) by summing over nested collections of proper
// subsets of size >= 2, each component contributing m_d(k) at q = 1. With `containing`
// set, only collections containing that set are counted.
std::int64_t euler_oracle(int d, int n, std::optional<IndexSet> containing = std::nullopt);

// Number of configurations of k distinct labeled points in affine d-space modulo
// translation and homothety, as a polynomial in q.
Poly affine_configurations(int d, int k);

}  // namespace tdn
