#pragma once

#include "tdn/index_set.hpp"
#include "tdn/poly.hpp"
#include "tdn/weights.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tdn {

// Weights outside the domain required by an operation (exit status 1 in the CLI).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AmbientKind { TSpace, PSpace, FMSpace };

AmbientKind parse_ambient_kind(const std::string& s);  // "T", "P", "FM"
std::string to_string(AmbientKind k);

struct Ambient {
  AmbientKind kind = AmbientKind::TSpace;
  int d = 1;
  int n = 2;

  Ambient() = default;
  Ambient(AmbientKind k, int d_, int n_);

  IndexSet universe() const;
  int dimension() const;
  // TSpace and PSpace exclude the small diagonal, so a block equal to the universe is empty.
  bool universe_block_empty() const { return kind != AmbientKind::FMSpace; }
  DomainKind domain() const;
  bool admissible_index_set(IndexSet s) const;
  // Poincare polynomial of the lattice element whose partition has m classes on the universe.
  Poly class_poincare(int m) const;
  Poly poincare() const { return class_poincare(size_of(universe())); }

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

struct Dims {
  int dimension;
  int codimension;
};

// Pairwise-disjoint blocks, each of size >= 2, sorted ascending by mask. Empty when the
// factorization merges into the whole universe of a projectivized ambient.
struct PartialPartition {
  std::vector<IndexSet> blocks;
  bool empty_locus = false;
  friend bool operator==(const PartialPartition&, const PartialPartition&) = default;
};

struct BuildingSet {
  Ambient ambient;
  WeightVector weights;
  std::vector<IndexSet> elements;  // ascending-dimension order, lexicographic tie-break
};

struct RelativeClasses {
  std::array<std::vector<IndexSet>, 4> classes;  // H1..H4, each larger |J| first
  std::vector<IndexSet> flattened() const;
};

// Throws DomainError when the weights are outside the ambient's domain.
BuildingSet heavy_sets(const WeightVector& a, const Ambient& ambient);
// Same enumeration without the domain check (used for recursive factor spaces).
std::vector<IndexSet> heavy_family(const WeightVector& a, const Ambient& ambient);

std::vector<IndexSet> ascending_order(std::vector<IndexSet> sets);

PartialPartition factors(const std::vector<IndexSet>& sets, const Ambient& ambient);

RelativeClasses relative_order(const BuildingSet& b, IndexSet i);
int relative_class(IndexSet j, IndexSet i);  // 1..4

Dims dims(const Ambient& ambient, IndexSet heavy);
Dims dims(const Ambient& ambient, const PartialPartition& p);

bool is_nested(const std::vector<IndexSet>& collection);

// Every prefix of the order must be closed under unions of overlapping members that are
// themselves centers. Returns a description of the first violation.
std::optional<std::string> order_violation(const std::vector<IndexSet>& order);
bool containment_compatible(const std::vector<IndexSet>& order);

struct ShaDimensions {
  int dim_strict_transform;
  int dim_pair_locus;
  bool inequality_holds;
  bool equal;
};
ShaDimensions sha_dimensions(int n, int m);

}  // namespace tdn
