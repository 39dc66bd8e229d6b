#include "tdn/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tdn {

namespace {

using Blocks = std::vector<IndexSet>;

int codim_of(const Ambient& amb, const Blocks& pi) {
  int c = 0;
  for (IndexSet b : pi) c += amb.d * (size_of(b) - 1);
  return c;
}

int classes_of(const Ambient& amb, const Blocks& pi) {
  int m = size_of(amb.universe());
  for (IndexSet b : pi) m -= size_of(b) - 1;
  return m;
}

class Ledger {
 public:
  Ledger(const Ambient& amb, const std::vector<IndexSet>& order) : amb_(amb), order_(order) {}

  // Poincare polynomial of the transform of Z_pi after the first t centers.
  const Poly& poincare(const Blocks& pi, std::size_t t) {
    auto key = std::make_pair(pi, t);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Poly value = compute(pi, t);
    return memo_.emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  Poly compute(const Blocks& pi, std::size_t t) {
    if (t == 0) return amb_.class_poincare(classes_of(amb_, pi));
    IndexSet j = order_[t - 1];
    Poly prev = poincare(pi, t - 1);
    // separated: the transforms no longer meet
    for (IndexSet b : pi)
      if (overlaps(b, j)) return prev;
    // the locus lies inside the center: full preimage
    for (IndexSet b : pi)
      if (subset_of(j, b)) return prev * Poly::qint(amb_.d * (size_of(j) - 1));
    Blocks sigma;
    for (IndexSet b : pi)
      if ((b & j) == 0) sigma.push_back(b);
    sigma.push_back(j);
    std::sort(sigma.begin(), sigma.end());
    if (sigma == pi) return prev;
    if (amb_.universe_block_empty() && sigma.size() == 1 && sigma[0] == amb_.universe()) return prev;
    Poly inc = poincare(sigma, t - 1) * Poly::blowup_factor(codim_of(amb_, sigma) - codim_of(amb_, pi));
    return prev + inc;
  }

  Ambient amb_;
  std::vector<IndexSet> order_;
  std::map<std::pair<Blocks, std::size_t>, Poly> memo_;
};

void finish(EngineResult& r) {
  r.euler = r.total.at_one();
  r.b2 = r.total[1];
}

int twist_in_order(const std::vector<IndexSet>& order, std::size_t t) {
  int p = 0;
  for (std::size_t k = 0; k < t; ++k)
    if (proper_subset_of(order[t], order[k])) ++p;
  return p;
}

void check_family(const Ambient& ambient, const std::vector<IndexSet>& order) {
  for (IndexSet s : order)
    if (!ambient.admissible_index_set(s))
      throw StructuralError("center " + set_key(s) + " is not admissible for the ambient");
  if (auto v = order_violation(order)) throw StructuralError("inadmissible order: " + *v);
}

}  // namespace

const CenterRecord& EngineResult::center(IndexSet s) const {
  for (const auto& c : per_center)
    if (c.set == s) return c;
  throw std::out_of_range("no center " + set_key(s));
}

Poly ambient_poincare(const Ambient& ambient) { return ambient.poincare(); }

EngineResult run_ledger(const Ambient& ambient, const std::vector<IndexSet>& order) {
  check_family(ambient, order);
  if (!containment_compatible(order))
    throw StructuralError("ledger replay needs a containment-compatible order");
  Ledger ledger(ambient, order);
  EngineResult r;
  r.method = EngineMethod::Ledger;
  r.total = ambient.poincare();
  for (std::size_t t = 0; t < order.size(); ++t) {
    CenterRecord c;
    c.set = order[t];
    c.codim = ambient.d * (size_of(order[t]) - 1);
    c.p_cur = ledger.poincare(Blocks{order[t]}, t);
    c.twist = twist_in_order(order, t);
    r.total += c.p_cur * Poly::blowup_factor(c.codim);
    r.per_center.push_back(std::move(c));
  }
  finish(r);
  return r;
}

EngineResult run_strata(const Ambient& ambient, const std::vector<IndexSet>& order) {
  check_family(ambient, order);
  EngineResult r;
  r.method = EngineMethod::Strata;
  r.total = ambient.poincare();
  const int dim = ambient.dimension();
  std::vector<IndexSet> prefix;
  for (std::size_t t = 0; t < order.size(); ++t) {
    CenterRecord c;
    c.set = order[t];
    c.p_cur = stratum_count(ambient, prefix, order[t]);
    c.codim = dim - c.p_cur.degree();
    c.twist = twist_in_order(order, t);
    r.total += c.p_cur * Poly::blowup_factor(c.codim);
    r.per_center.push_back(std::move(c));
    prefix.push_back(order[t]);
  }
  finish(r);
  return r;
}

EngineResult run(const Ambient& ambient, const WeightVector& a, const std::vector<IndexSet>& order) {
  BuildingSet b = heavy_sets(a, ambient);
  std::vector<IndexSet> ord = order.empty() ? b.elements : order;
  if (!order.empty()) {
    std::vector<IndexSet> x = ord, y = b.elements;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) throw StructuralError("order is not a permutation of the building set");
  }
  check_family(ambient, ord);
  if (containment_compatible(ord)) return run_ledger(ambient, ord);
  return run_strata(ambient, ord);
}

Poly divisor_poincare(const Ambient& ambient, const WeightVector& a, IndexSet i) {
  BuildingSet b = heavy_sets(a, ambient);
  if (std::find(b.elements.begin(), b.elements.end(), i) == b.elements.end())
    throw DomainError("index set " + set_key(i) + " is not heavy");
  auto [inside, outside] = derived_weights(a, i);
  // first factor: the points of I inside their own screen
  Ambient left(AmbientKind::TSpace, ambient.d, size_of(i));
  WeightVector wl(ambient.d, inside);
  Poly pl = run_ledger(left, heavy_family(wl, left)).total;
  if (ambient.kind == AmbientKind::TSpace) {
    Ambient right(AmbientKind::TSpace, ambient.d, static_cast<int>(outside.size()));
    WeightVector wr(ambient.d, outside);
    return pl * run_ledger(right, heavy_family(wr, right)).total;
  }
  if (ambient.kind == AmbientKind::PSpace) {
    // the merged point replaces the frame point d+1 when I contains it
    std::vector<Rational> w;
    for (int k = 1; k <= ambient.n; ++k)
      if (!contains(i, k)) w.push_back(a[k]);
    if (contains(i, ambient.d + 1))
      w.insert(w.begin() + ambient.d, Rational(1));
    else
      w.push_back(Rational(1));
    int n2 = static_cast<int>(w.size());
    if (n2 <= ambient.d + 2) return pl;  // the factor space is a point
    Ambient right(AmbientKind::PSpace, ambient.d, n2);
    WeightVector wr(ambient.d, w);
    return pl * run_ledger(right, heavy_family(wr, right)).total;
  }
  throw StructuralError("divisor_poincare supports TSpace and PSpace");
}

int twist_report(const Ambient& ambient, const WeightVector& a, IndexSet i) {
  EngineResult r = run(ambient, a);
  for (const auto& c : r.per_center)
    if (c.set == i) return c.twist;
  throw DomainError("index set " + set_key(i) + " is not heavy");
}

Poly affine_configurations(int d, int k) {
  if (k < 2) return Poly();
  Poly qd = Poly::monomial(d);
  Poly num = Poly::constant(1);
  for (int i = 0; i < k; ++i) num *= qd - Poly::constant(i);
  Poly den = qd * Poly({-1, 1});
  return num.divexact(den);
}

namespace {

// Nested collections of the proper subsets of size >= 2, enumerated by backtracking.
void nested_walk(const std::vector<IndexSet>& sets, std::size_t idx, std::vector<IndexSet>& chosen,
                 const std::function<void(const std::vector<IndexSet>&)>& visit) {
  if (idx == sets.size()) {
    visit(chosen);
    return;
  }
  nested_walk(sets, idx + 1, chosen, visit);
  for (IndexSet c : chosen)
    if (overlaps(c, sets[idx])) return;
  chosen.push_back(sets[idx]);
  nested_walk(sets, idx + 1, chosen, visit);
  chosen.pop_back();
}

}  // namespace

std::int64_t euler_oracle(int d, int n, std::optional<IndexSet> containing) {
  if (d < 1 || n < 2) throw StructuralError("euler oracle needs d >= 1, n >= 2");
  IndexSet u = range_set(1, n);
  std::vector<IndexSet> sets;
  for (IndexSet s = 1; s < u; ++s)
    if (size_of(s) >= 2) sets.push_back(s);
  std::vector<std::int64_t> m_at_one(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) m_at_one[static_cast<std::size_t>(k)] = affine_configurations(d, k).at_one();
  std::int64_t total = 0;
  std::vector<IndexSet> chosen;
  nested_walk(sets, 0, chosen, [&](const std::vector<IndexSet>& c) {
    if (containing && std::find(c.begin(), c.end(), *containing) == c.end()) return;
    std::int64_t prod = 1;
    std::vector<IndexSet> nodes = c;
    nodes.push_back(u);
    for (IndexSet v : nodes) {
      // children: maximal chosen sets strictly inside v, plus marks of v covered by none
      IndexSet covered = 0;
      int k = 0;
      for (IndexSet w : c) {
        if (!proper_subset_of(w, v)) continue;
        bool maximal = true;
        for (IndexSet x : c)
          if (proper_subset_of(w, x) && proper_subset_of(x, v)) maximal = false;
        if (maximal) {
          ++k;
          covered |= w;
        }
      }
      k += size_of(v & ~covered);
      prod *= m_at_one[static_cast<std::size_t>(k)];
    }
    total += prod;
  });
  return total;
}

}  // namespace tdn
