#include "lveval/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lveval {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieEps = 1e-9;

// Min-cost assignment of all rows (requires rows <= cols), 1-indexed
// potentials. Returns column index per row.
std::vector<int> solve_min_cost(const std::vector<std::vector<double>>& cost) {
  int n = int(cost.size());
  int m = n > 0 ? int(cost[0].size()) : 0;
  std::vector<double> u(std::size_t(n) + 1, 0.0), v(std::size_t(m) + 1, 0.0);
  std::vector<int> p(std::size_t(m) + 1, 0), way(std::size_t(m) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(std::size_t(m) + 1, kInf);
    std::vector<char> used(std::size_t(m) + 1, 0);
    do {
      used[std::size_t(j0)] = 1;
      int i0 = p[std::size_t(j0)];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= m; ++j) {
        if (used[std::size_t(j)]) continue;
        double cur = cost[std::size_t(i0) - 1][std::size_t(j) - 1] - u[std::size_t(i0)] -
                     v[std::size_t(j)];
        if (cur < minv[std::size_t(j)]) {
          minv[std::size_t(j)] = cur;
          way[std::size_t(j)] = j0;
        }
        if (minv[std::size_t(j)] < delta) {
          delta = minv[std::size_t(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[std::size_t(j)]) {
          u[std::size_t(p[std::size_t(j)])] += delta;
          v[std::size_t(j)] -= delta;
        } else {
          minv[std::size_t(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[std::size_t(j0)] != 0);
    do {
      int j1 = way[std::size_t(j0)];
      p[std::size_t(j0)] = p[std::size_t(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(std::size_t(n), -1);
  for (int j = 1; j <= m; ++j) {
    if (p[std::size_t(j)] > 0) row_to_col[std::size_t(p[std::size_t(j)]) - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace

Assignment max_weight_assignment(const SimilarityMatrix& matrix) {
  Assignment out;
  int rows = matrix.rows, cols = matrix.cols;
  if (rows == 0 || cols == 0) return out;

  bool transposed = rows > cols;
  int n = transposed ? cols : rows;
  int m = transposed ? rows : cols;
  std::vector<std::vector<double>> cost(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(m), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      double w = transposed ? matrix.at(j, i) : matrix.at(i, j);
      cost[std::size_t(i)][std::size_t(j)] = -w;
    }
  }
  std::vector<int> row_to_col = solve_min_cost(cost);
  for (int i = 0; i < n; ++i) {
    int j = row_to_col[std::size_t(i)];
    if (j < 0) continue;
    int r = transposed ? j : i;
    int c = transposed ? i : j;
    out.pairs.emplace_back(r, c);
    out.total_weight += matrix.at(r, c);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::vector<std::pair<int, int>> match_events(const SimilarityMatrix& matrix) {
  int rows = matrix.rows, cols = matrix.cols;
  int size = std::min(rows, cols);
  if (size == 0) return {};

  const double optimum = max_weight_assignment(matrix).total_weight;

  // Fix pairs left to right, always taking the smallest (row, col) that still
  // admits an optimal completion over the remaining rows/columns.
  std::vector<std::pair<int, int>> chosen;
  std::vector<char> col_used(std::size_t(cols), 0);
  double chosen_weight = 0.0;
  int last_row = -1;

  auto completion_weight = [&](int row_min, int skip_col, int need) {
    if (need == 0) return 0.0;
    std::vector<int> sub_cols;
    for (int c = 0; c < cols; ++c) {
      if (!col_used[std::size_t(c)] && c != skip_col) sub_cols.push_back(c);
    }
    int sub_rows = rows - row_min;
    if (sub_rows < need || int(sub_cols.size()) < need) return -kInf;
    SimilarityMatrix sub;
    sub.rows = sub_rows;
    sub.cols = int(sub_cols.size());
    sub.values.resize(std::size_t(sub.rows) * sub.cols);
    for (int r = 0; r < sub.rows; ++r) {
      for (int c = 0; c < sub.cols; ++c) {
        sub.at(r, c) = matrix.at(row_min + r, sub_cols[std::size_t(c)]);
      }
    }
    return max_weight_assignment(sub).total_weight;
  };

  for (int pos = 0; pos < size; ++pos) {
    int need = size - pos - 1;
    bool placed = false;
    for (int r = last_row + 1; r <= rows - 1 - need && !placed; ++r) {
      for (int c = 0; c < cols && !placed; ++c) {
        if (col_used[std::size_t(c)]) continue;
        double rest = completion_weight(r + 1, c, need);
        if (chosen_weight + matrix.at(r, c) + rest >= optimum - kTieEps) {
          chosen.emplace_back(r, c);
          chosen_weight += matrix.at(r, c);
          col_used[std::size_t(c)] = 1;
          last_row = r;
          placed = true;
        }
      }
    }
    if (!placed) break;  // unreachable for consistent inputs
  }
  return chosen;
}

long count_inversions(const std::vector<long>& values) {
  std::vector<long> work = values;
  std::vector<long> buffer(work.size());
  long inversions = 0;

  auto merge_count = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (hi - lo <= 1) return;
    std::size_t mid = lo + (hi - lo) / 2;
    self(self, lo, mid);
    self(self, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
      if (work[i] <= work[j]) {
        buffer[k++] = work[i++];
      } else {
        inversions += long(mid - i);
        buffer[k++] = work[j++];
      }
    }
    while (i < mid) buffer[k++] = work[i++];
    while (j < hi) buffer[k++] = work[j++];
    std::copy(buffer.begin() + long(lo), buffer.begin() + long(hi), work.begin() + long(lo));
  };
  if (!work.empty()) merge_count(merge_count, 0, work.size());
  return inversions;
}

}  // namespace lveval
