#pragma once

#include "tdn/index_set.hpp"
#include "tdn/rational.hpp"
#include "tdn/weights.hpp"

#include <map>
#include <random>
#include <vector>

namespace tdn {

enum class TreeKind { Rooted, Framed };

std::string to_string(TreeKind k);
TreeKind parse_tree_kind(const std::string& s);  // "rooted" or "framed"

// Affine point of Q^d in screens and the rooted root; homogeneous point of P^d (d+1
// coordinates) in the framed root.
using Position = std::vector<Rational>;

// Child placements of one component. Children are keyed by their label set: a singleton
// for a mark, the node's set for a collection element (singletons are never heavy).
using Screen = std::map<IndexSet, Position>;

struct StableTree {
  TreeKind kind = TreeKind::Rooted;
  WeightVector weights;
  std::vector<IndexSet> collection;  // never contains {1..n}; that component is `root`
  std::map<IndexSet, Screen> screens;
  Screen root;

  int d() const { return weights.d(); }
  int n() const { return weights.n(); }

  friend bool operator==(const StableTree&, const StableTree&) = default;
};

// Children of the component `x` ({1..n} for the root): the maximal collection members
// strictly inside x and the marks of x not covered by them, ordered by smallest mark.
std::vector<IndexSet> component_children(const StableTree& t, IndexSet x);

// Sort order used for collections: larger sets first, then lexicographic.
void sort_collection(std::vector<IndexSet>& c);

// Throws StructuralError for dangling or missing child identifiers and coordinate-count
// mismatches; invariant failures are reported.
ValidationReport validate(const StableTree& t);

// Throws DomainError for trees that fail validation.
StableTree canonicalize(const StableTree& t);

// Collapses every collection member that is light for b. Throws DomainError when b is not
// componentwise below the tree weights or lies outside the domain.
StableTree reduce(const StableTree& t, const WeightVector& b);

// Drops the marks outside r and restabilizes; the result is relabeled 1..|r| in order.
StableTree forget(const StableTree& t, IndexSet r);

// Canonical forgetful image for every k-subset of the marks.
std::map<IndexSet, StableTree> forgetful_profile(const StableTree& t, int k);

// A random valid rooted tree for the given weights, positions drawn from a small integer box.
StableTree random_rooted_tree(const WeightVector& a, std::mt19937_64& rng);

}  // namespace tdn
