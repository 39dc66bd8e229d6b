#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tdn {

// Subset of 1-based mark labels {1..31} stored as a bitmask; bit (i-1) holds label i.
using IndexSet = std::uint32_t;

constexpr int kMaxLabels = 31;

inline IndexSet singleton(int label) { return IndexSet{1} << (label - 1); }
inline IndexSet range_set(int lo, int hi) {
  IndexSet s = 0;
  for (int i = lo; i <= hi; ++i) s |= singleton(i);
  return s;
}
inline int size_of(IndexSet s) { return std::popcount(s); }
inline bool contains(IndexSet s, int label) { return (s >> (label - 1)) & 1u; }
inline bool subset_of(IndexSet a, IndexSet b) { return (a & ~b) == 0; }
inline bool proper_subset_of(IndexSet a, IndexSet b) { return a != b && subset_of(a, b); }
inline bool overlaps(IndexSet a, IndexSet b) {
  return (a & b) != 0 && !subset_of(a, b) && !subset_of(b, a);
}
inline int min_label(IndexSet s) { return std::countr_zero(s) + 1; }

std::vector<int> labels(IndexSet s);
IndexSet from_labels(const std::vector<int>& ls);
// "[1,2,3]"
std::string set_key(IndexSet s);
// Accepts "1,2,3", "[1,2,3]", "{1,2,3}" or "123" (single digits).
IndexSet parse_set(const std::string& text);

// Lexicographic comparison on the sorted label tuples.
bool lex_less(IndexSet a, IndexSet b);

}  // namespace tdn
