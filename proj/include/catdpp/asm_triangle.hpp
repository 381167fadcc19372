#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "catdpp/common.hpp"

namespace catdpp {

// Alternating sign matrix: square over {-1,0,1}, unit row and column sums,
// nonzero entries alternating in sign along every row and column.
struct Asm {
  std::vector<std::vector<int>> entries;

  friend bool operator==(const Asm& a, const Asm& b) {
    return a.entries == b.entries;
  }
};

// Triangular array with apex on top: row i (0-based) holds i+1 strictly
// increasing entries from 1..n, bottom row 1,2,...,n, and consecutive rows
// interlacing.
struct MonotoneTriangle {
  std::vector<std::vector<int>> rows;

  friend bool operator==(const MonotoneTriangle& a, const MonotoneTriangle& b) {
    return a.rows == b.rows;
  }
};

enum class DiagonalFlavor { Monotone, Magog };

// Length-n sequence with i <= x_i <= n (1-based); monotone flavor is also
// weakly increasing, magog flavor satisfies x_{i+1} <= x_i + 1.
struct DiagonalSequence {
  std::vector<int> values;
  DiagonalFlavor flavor = DiagonalFlavor::Monotone;

  friend bool operator==(const DiagonalSequence& a, const DiagonalSequence& b) {
    return a.values == b.values && a.flavor == b.flavor;
  }
};

inline Validated<Asm> validate_asm(std::vector<std::vector<int>> matrix) {
  const int n = static_cast<int>(matrix.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) {
      return Violation{"BadEntry", i, -1, "matrix is not square"};
    }
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] < -1 || matrix[i][j] > 1) {
        return Violation{"BadEntry", i, j, "entry outside {-1,0,1}"};
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    int prev = 0;
    for (int j = 0; j < n; ++j) {
      sum += matrix[i][j];
      if (matrix[i][j] != 0) {
        if (matrix[i][j] == prev) {
          return Violation{"SignAlternation", i, j, "row signs do not alternate"};
        }
        prev = matrix[i][j];
      }
    }
    if (sum != 1) return Violation{"RowSum", i, -1, "row sum is not 1"};
  }
  for (int j = 0; j < n; ++j) {
    int sum = 0;
    int prev = 0;
    for (int i = 0; i < n; ++i) {
      sum += matrix[i][j];
      if (matrix[i][j] != 0) {
        if (matrix[i][j] == prev) {
          return Violation{"SignAlternation", i, j,
                           "column signs do not alternate"};
        }
        prev = matrix[i][j];
      }
    }
    if (sum != 1) return Violation{"ColSum", -1, j, "column sum is not 1"};
  }
  return Asm{std::move(matrix)};
}

// Row i of the triangle lists the columns (1-based) whose partial sum over
// the first i+1 ASM rows equals 1.
inline MonotoneTriangle asm_to_monotone(const Asm& a) {
  const int n = static_cast<int>(a.entries.size());
  MonotoneTriangle t;
  std::vector<int> colsum(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> row;
    for (int j = 0; j < n; ++j) {
      colsum[j] += a.entries[i][j];
      if (colsum[j] == 1) row.push_back(j + 1);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Asm monotone_to_asm(const MonotoneTriangle& t) {
  const int n = static_cast<int>(t.rows.size());
  Asm a;
  a.entries.assign(static_cast<std::size_t>(n),
                   std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<char> prev(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<char> cur(static_cast<std::size_t>(n) + 1, 0);
    for (int col : t.rows[i]) cur[static_cast<std::size_t>(col)] = 1;
    for (int j = 1; j <= n; ++j) a.entries[i][j - 1] = cur[j] - prev[j];
    prev = std::move(cur);
  }
  return a;
}

// All monotone triangles with bottom row 1..n, generated bottom-up: above
// a row a_1 < ... < a_k, each interlacing row b_1 < ... < b_{k-1} with
// a_j <= b_j <= a_{j+1} is chosen in ascending lexicographic order.
inline std::vector<MonotoneTriangle> enumerate_monotone_triangles(int n) {
  std::vector<MonotoneTriangle> out;
  if (n == 0) {
    out.push_back(MonotoneTriangle{});  // the empty triangle
    return out;
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  rows.back().resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) rows.back()[j] = j + 1;

  std::function<void(int)> ascend = [&](int i) {
    if (i < 0) {
      out.push_back(MonotoneTriangle{rows});
      return;
    }
    const auto& below = rows[static_cast<std::size_t>(i) + 1];
    auto& row = rows[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(i) + 1, 0);
    std::function<void(int)> pick = [&](int j) {
      if (j > i) {
        ascend(i - 1);
        return;
      }
      const int lo = std::max(below[j], j > 0 ? row[j - 1] + 1 : 0);
      const int hi = below[j + 1];
      for (int v = lo; v <= hi; ++v) {
        row[static_cast<std::size_t>(j)] = v;
        pick(j + 1);
      }
    };
    pick(0);
  };
  ascend(n - 2);
  return out;
}

inline constexpr int kDefaultAsmCap = 6;

inline std::vector<Asm> enumerate_asms(int n, int cap = kDefaultAsmCap) {
  if (n > cap) {
    throw OrderTooLarge("OrderTooLarge: ASM order " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  }
  std::vector<Asm> out;
  for (const auto& t : enumerate_monotone_triangles(n)) {
    out.push_back(monotone_to_asm(t));
  }
  return out;
}

// The northwest-to-southeast diagonal of full length n: the last entry of
// each row.
inline std::vector<int> nw_se_diagonal(const MonotoneTriangle& t) {
  std::vector<int> d;
  for (const auto& row : t.rows) d.push_back(row.back());
  return d;
}

inline bool is_valid_diagonal(const std::vector<int>& x, int n,
                              DiagonalFlavor flavor) {
  if (static_cast<int>(x.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (x[i] < i + 1 || x[i] > n) return false;
    if (i > 0) {
      if (flavor == DiagonalFlavor::Monotone && x[i] < x[i - 1]) return false;
      if (flavor == DiagonalFlavor::Magog && x[i] > x[i - 1] + 1) return false;
    }
  }
  return true;
}

// All valid length-n diagonal sequences of the flavor, lexicographic.
inline std::vector<DiagonalSequence> enumerate_diagonals(int n,
                                                         DiagonalFlavor flavor) {
  std::vector<DiagonalSequence> out;
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    const int i = static_cast<int>(cur.size());
    if (i == n) {
      out.push_back(DiagonalSequence{cur, flavor});
      return;
    }
    int lo = i + 1;
    int hi = n;
    if (i > 0) {
      if (flavor == DiagonalFlavor::Monotone) lo = std::max(lo, cur.back());
      if (flavor == DiagonalFlavor::Magog) hi = std::min(hi, cur.back() + 1);
    }
    for (int v = lo; v <= hi; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  if (n == 0) {
    out.push_back(DiagonalSequence{{}, flavor});
    return out;
  }
  rec();
  return out;
}

}  // namespace catdpp
