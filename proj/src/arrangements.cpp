#include "tdn/arrangements.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace tdn {

AmbientKind parse_ambient_kind(const std::string& s) {
  if (s == "T" || s == "TSpace") return AmbientKind::TSpace;
  if (s == "P" || s == "PSpace") return AmbientKind::PSpace;
  if (s == "FM" || s == "FMSpace") return AmbientKind::FMSpace;
  throw StructuralError("unknown ambient kind: " + s);
}

std::string to_string(AmbientKind k) {
  switch (k) {
    case AmbientKind::TSpace: return "TSpace";
    case AmbientKind::PSpace: return "PSpace";
    case AmbientKind::FMSpace: return "FMSpace";
  }
  return "?";
}

Ambient::Ambient(AmbientKind k, int d_, int n_) : kind(k), d(d_), n(n_) {
  if (d < 1) throw StructuralError("d must be positive");
  if (n < 2 || n > kMaxLabels) throw StructuralError("n out of range");
  if (kind == AmbientKind::PSpace && n < d + 2) throw StructuralError("PSpace needs n >= d+2");
}

IndexSet Ambient::universe() const {
  return kind == AmbientKind::PSpace ? range_set(d + 1, n) : range_set(1, n);
}

int Ambient::dimension() const {
  switch (kind) {
    case AmbientKind::TSpace: return d * (n - 1) - 1;
    case AmbientKind::PSpace: return d * (n - d - 2);
    case AmbientKind::FMSpace: return d * n;
  }
  return 0;
}

DomainKind Ambient::domain() const {
  switch (kind) {
    case AmbientKind::TSpace: return DomainKind::T;
    case AmbientKind::PSpace: return DomainKind::P;
    case AmbientKind::FMSpace: return DomainKind::FM;
  }
  return DomainKind::FM;
}

bool Ambient::admissible_index_set(IndexSet s) const {
  IndexSet u = universe();
  if (size_of(s) < 2 || !subset_of(s, u)) return false;
  if (kind == AmbientKind::FMSpace) return true;
  return s != u;
}

Poly Ambient::class_poincare(int m) const {
  switch (kind) {
    case AmbientKind::TSpace: return Poly::qint(d * (m - 1));
    case AmbientKind::PSpace: return Poly::qint(m - 1).pow(d);
    case AmbientKind::FMSpace: return Poly::qint(d + 1).pow(m);
  }
  return Poly();
}

std::vector<IndexSet> RelativeClasses::flattened() const {
  std::vector<IndexSet> out;
  for (const auto& c : classes) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<IndexSet> ascending_order(std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](IndexSet a, IndexSet b) {
    if (size_of(a) != size_of(b)) return size_of(a) > size_of(b);
    return lex_less(a, b);
  });
  return sets;
}

std::vector<IndexSet> heavy_family(const WeightVector& a, const Ambient& ambient) {
  if (a.n() != ambient.n || a.d() != ambient.d)
    throw StructuralError("weight vector does not match the ambient (d, n)");
  std::vector<IndexSet> out;
  IndexSet u = ambient.universe();
  // enumerate subsets of the universe
  for (IndexSet s = u;; s = (s - 1) & u) {
    if (ambient.admissible_index_set(s) && a.heavy(s)) out.push_back(s);
    if (s == 0) break;
  }
  return ascending_order(std::move(out));
}

BuildingSet heavy_sets(const WeightVector& a, const Ambient& ambient) {
  if (a.n() != ambient.n || a.d() != ambient.d)
    throw StructuralError("weight vector does not match the ambient (d, n)");
  ValidationReport r = validate_domain(a, ambient.domain());
  if (!r.accepted) {
    std::string msg = "weights outside D^" + to_string(ambient.domain());
    for (const auto& v : r.violations) msg += "; " + v;
    throw DomainError(msg);
  }
  return BuildingSet{ambient, a, heavy_family(a, ambient)};
}

PartialPartition factors(const std::vector<IndexSet>& sets, const Ambient& ambient) {
  std::vector<IndexSet> blocks;
  for (IndexSet s : sets) {
    if (!subset_of(s, ambient.universe())) throw StructuralError("index set outside the universe");
    if (s == 0) continue;
    IndexSet merged = s;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = blocks.begin(); it != blocks.end(); ++it) {
        if (*it & merged) {
          merged |= *it;
          blocks.erase(it);
          changed = true;
          break;
        }
      }
    }
    blocks.push_back(merged);
  }
  std::erase_if(blocks, [](IndexSet b) { return size_of(b) < 2; });
  std::sort(blocks.begin(), blocks.end());
  PartialPartition p;
  if (ambient.universe_block_empty() && blocks.size() == 1 && blocks[0] == ambient.universe()) {
    p.empty_locus = true;
  }
  p.blocks = std::move(blocks);
  return p;
}

int relative_class(IndexSet j, IndexSet i) {
  if (proper_subset_of(i, j)) return 1;
  if ((j & i) == 0) return 2;
  if (subset_of(j, i)) return 4;
  return 3;
}

RelativeClasses relative_order(const BuildingSet& b, IndexSet i) {
  if (i == 0 || !subset_of(i, b.ambient.universe())) throw StructuralError("invalid index set");
  RelativeClasses rc;
  for (IndexSet j : b.elements) rc.classes[static_cast<std::size_t>(relative_class(j, i) - 1)].push_back(j);
  for (auto& c : rc.classes) c = ascending_order(std::move(c));
  return rc;
}

Dims dims(const Ambient& ambient, IndexSet heavy) {
  int codim = ambient.d * (size_of(heavy) - 1);
  return Dims{ambient.dimension() - codim, codim};
}

Dims dims(const Ambient& ambient, const PartialPartition& p) {
  if (p.empty_locus) return Dims{-1, ambient.dimension() + 1};
  int codim = 0;
  for (IndexSet b : p.blocks) codim += ambient.d * (size_of(b) - 1);
  return Dims{ambient.dimension() - codim, codim};
}

bool is_nested(const std::vector<IndexSet>& collection) {
  for (std::size_t i = 0; i < collection.size(); ++i)
    for (std::size_t j = i + 1; j < collection.size(); ++j)
      if (overlaps(collection[i], collection[j])) return false;
  return true;
}

std::optional<std::string> order_violation(const std::vector<IndexSet>& order) {
  std::unordered_map<IndexSet, std::size_t> pos;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (!pos.emplace(order[k], k).second) return "duplicate center " + set_key(order[k]);
  }
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (!overlaps(order[a], order[b])) continue;
      auto it = pos.find(order[a] | order[b]);
      if (it == pos.end()) continue;
      if (it->second > b)
        return "union " + set_key(order[a] | order[b]) + " of overlapping centers " + set_key(order[a]) +
               " and " + set_key(order[b]) + " comes after both";
    }
  }
  return std::nullopt;
}

bool containment_compatible(const std::vector<IndexSet>& order) {
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (proper_subset_of(order[a], order[b]))
        return false;
  return true;
}

ShaDimensions sha_dimensions(int n, int m) {
  if (n < 6) throw StructuralError("sha dimensions need n >= 6");
  if (m < 2 || m > n - 3) throw StructuralError("m must satisfy 2 <= m <= n-3");
  ShaDimensions s;
  s.dim_strict_transform = 2 * (n - m - 3);
  s.dim_pair_locus = 2 * (n - 4) - m;
  s.inequality_holds = s.dim_pair_locus >= s.dim_strict_transform;
  s.equal = s.dim_pair_locus == s.dim_strict_transform;
  return s;
}

}  // namespace tdn
