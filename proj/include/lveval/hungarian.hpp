#pragma once

#include <utility>
#include <vector>

#include "lveval/types.hpp"

namespace lveval {

struct Assignment {
  std::vector<std::pair<int, int>> pairs;  // (row, col), sorted by row
  double total_weight = 0.0;
};

// Maximum-weight assignment of size min(rows, cols) via the O(n^3) potential
// (shortest augmenting path) method. Deterministic but with no particular tie
// preference.
Assignment max_weight_assignment(const SimilarityMatrix& matrix);

// Matching used for event alignment: maximum total similarity, ties broken by
// the lexicographically smallest (row, col) pair sequence.
std::vector<std::pair<int, int>> match_events(const SimilarityMatrix& matrix);

// Number of positionally ordered pairs whose values are reversed. O(n log n).
long count_inversions(const std::vector<long>& values);

}  // namespace lveval
