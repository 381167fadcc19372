#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "catdpp/common.hpp"

namespace catdpp {

// Totally symmetric self-complementary plane partition inside a 2n cube,
// stored as the 2n x 2n height array h[i][j] = number of cubes stacked at
// (i+1, j+1).
struct TsscppBox {
  int n = 0;
  std::vector<std::vector<int>> heights;

  friend bool operator==(const TsscppBox& a, const TsscppBox& b) {
    return a.n == b.n && a.heights == b.heights;
  }
};

namespace detail {

using Cell = std::array<int, 3>;  // 1-based (i, j, k)

inline std::set<Cell> cells_of(const std::vector<std::vector<int>>& h) {
  std::set<Cell> cells;
  for (int i = 0; i < static_cast<int>(h.size()); ++i) {
    for (int j = 0; j < static_cast<int>(h[i].size()); ++j) {
      for (int k = 1; k <= h[i][j]; ++k) cells.insert({i + 1, j + 1, k});
    }
  }
  return cells;
}

}  // namespace detail

inline Validated<TsscppBox> validate_tsscpp(
    std::vector<std::vector<int>> heights, int n) {
  const int side = 2 * n;
  if (static_cast<int>(heights.size()) != side) {
    return Violation{"NotPlanePartition", -1, -1,
                     "height array is not " + std::to_string(side) + " rows"};
  }
  for (int i = 0; i < side; ++i) {
    if (static_cast<int>(heights[i].size()) != side) {
      return Violation{"NotPlanePartition", i, -1, "row is not square length"};
    }
    for (int j = 0; j < side; ++j) {
      if (heights[i][j] < 0 || heights[i][j] > side) {
        return Violation{"NotPlanePartition", i, j, "height outside [0, 2n]"};
      }
      if (j > 0 && heights[i][j] > heights[i][j - 1]) {
        return Violation{"NotPlanePartition", i, j, "row increases"};
      }
      if (i > 0 && heights[i][j] > heights[i - 1][j]) {
        return Violation{"NotPlanePartition", i, j, "column increases"};
      }
    }
  }
  const auto cells = detail::cells_of(heights);
  for (const auto& c : cells) {
    detail::Cell p = c;
    std::sort(p.begin(), p.end());
    do {
      if (!cells.count(p)) {
        return Violation{"NotTotallySymmetric", c[0] - 1, c[1] - 1,
                         "coordinate permutation of a cell is missing"};
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      if (heights[i][j] + heights[side - 1 - i][side - 1 - j] != side) {
        return Violation{"NotSelfComplementary", i, j,
                         "complement height mismatch"};
      }
    }
  }
  return TsscppBox{n, std::move(heights)};
}

inline constexpr int kDefaultTsscppCap = 3;

// Enumerates TSSCPPs in the 2n cube by backtracking over the free cells of
// the height array: rows 0..n-1 with column >= row; columns below the
// diagonal are mirrored (transpose symmetry) and rows n..2n-1 follow from
// self-complementarity.  Each completed candidate is fully validated.
inline std::vector<TsscppBox> enumerate_tsscpps(int n,
                                                int cap = kDefaultTsscppCap) {
  if (n > cap) {
    throw OrderTooLarge("OrderTooLarge: TSSCPP half-side " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  }
  std::vector<TsscppBox> out;
  if (n == 0) {
    out.push_back(TsscppBox{0, {}});
    return out;
  }
  const int side = 2 * n;
  std::vector<std::vector<int>> h(static_cast<std::size_t>(side),
                                  std::vector<int>(static_cast<std::size_t>(side), 0));

  // A row of a totally symmetric plane partition, read as a partition, is
  // self-conjugate; checking this after each completed free row prunes
  // most of the search.
  auto row_self_conjugate = [&](int i) {
    for (int j = 0; j < side; ++j) {
      int col = 0;  // conjugate part j+1: number of entries >= j+1
      for (int x = 0; x < side; ++x) col += h[i][x] >= j + 1;
      if (col != h[i][j]) return false;
    }
    return true;
  };

  std::function<void(int, int)> place = [&](int i, int j) {
    if (i == n) {
      for (int r = n; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
          h[r][c] = side - h[side - 1 - r][side - 1 - c];
        }
      }
      auto checked = validate_tsscpp(h, n);
      if (checked.ok()) out.push_back(checked.value());
      return;
    }
    if (j == side) {
      if (row_self_conjugate(i)) place(i + 1, i + 1);
      return;
    }
    int hi = side;
    if (i > 0) hi = std::min(hi, h[i - 1][j]);
    if (j > 0) hi = std::min(hi, h[i][j - 1]);
    for (int v = hi; v >= 0; --v) {
      h[i][j] = v;
      if (j < n) h[j][i] = v;  // transpose mirror inside the free block
      place(i, j + 1);
    }
  };
  place(0, 0);
  return out;
}

}  // namespace catdpp
