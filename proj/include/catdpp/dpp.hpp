#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "catdpp/common.hpp"
#include "catdpp/qpoly.hpp"

namespace catdpp {

// A descending plane partition of order n: a strict shifted plane
// partition (rows weakly decreasing, shifted columns strictly decreasing,
// row k drawn one column further right than row k-1) where each row has
// fewer parts than its greatest part and at least as many parts as the
// greatest part of the next row.  The empty array is a DPP of every order.
struct Dpp {
  std::vector<std::vector<int>> rows;
  int order = 0;

  friend bool operator==(const Dpp& a, const Dpp& b) {
    return a.rows == b.rows;
  }
};

inline long long sum_of_entries(const Dpp& d) {
  long long s = 0;
  for (const auto& row : d.rows)
    for (int v : row) s += v;
  return s;
}

// Validates an arbitrary integer array against every DPP invariant for
// order bound n.  Reports the first violation in scan order: shape, then
// cells row by row left to right, then the per-row length conditions.
// Trailing empty rows are tolerated and stripped.
inline Validated<Dpp> validate_dpp(std::vector<std::vector<int>> rows, int n) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].empty()) {
      return Violation{"RaggedShape", static_cast<int>(k), -1,
                       "empty row followed by a nonempty row"};
    }
    if (k > 0 && rows[k].size() >= rows[k - 1].size()) {
      return Violation{"RaggedShape", static_cast<int>(k), -1,
                       "row extends past the shifted profile of the row above"};
    }
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    for (std::size_t i = 0; i < row.size(); ++i) {
      const int r = static_cast<int>(k);
      const int c = static_cast<int>(i);
      if (row[i] < 1) return Violation{"PartNotPositive", r, c, "part below 1"};
      if (row[i] > n) {
        return Violation{"PartExceedsOrder", r, c,
                         "part exceeds order bound " + std::to_string(n)};
      }
      if (i > 0 && row[i] > row[i - 1]) {
        return Violation{"RowNotWeaklyDecreasing", r, c, "row increases"};
      }
      // Shifted alignment: cell i of row k sits below cell i+1 of row k-1.
      if (k > 0 && row[i] >= rows[k - 1][i + 1]) {
        return Violation{"ColumnNotStrictlyDecreasing", r, c,
                         "column fails to decrease strictly"};
      }
    }
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const int len = static_cast<int>(rows[k].size());
    if (len >= rows[k][0]) {
      return Violation{"RowTooLong", static_cast<int>(k), -1,
                       "row length not less than its greatest part"};
    }
    if (k + 1 < rows.size() && len < rows[k + 1][0]) {
      return Violation{"RowTooShort", static_cast<int>(k), -1,
                       "row shorter than the greatest part of the next row"};
    }
  }
  return Dpp{std::move(rows), n};
}

namespace detail {

// Backtracking generator for DPPs with exactly `target_rows` rows, emitted
// with rows compared lexicographically from the top, larger first.  Rows
// are built left to right; each position offers its extensions (values
// high to low) before the row is closed, which realizes "prefix sorts
// after its extensions".
class DppGenerator {
 public:
  DppGenerator(int n, const std::function<void(const Dpp&)>& emit)
      : emit_(emit) {
    cur_.order = n;
  }

  void run_exact_rows(int target_rows) {
    target_ = target_rows;
    if (target_ == 0) {
      emit_(cur_);
      return;
    }
    // References into rows are held across recursion; never reallocate.
    cur_.rows.reserve(static_cast<std::size_t>(target_));
    gen_row(0);
  }

 private:
  // Number of rows still to be placed strictly below row k, excluding k.
  int rows_below(int k) const { return target_ - 1 - k; }

  void gen_row(int k) {
    cur_.rows.emplace_back();
    // First entries of successive rows strictly decrease and each row
    // needs length >= 1 < first entry, so a chain of r further rows
    // requires this row's first entry to be at least r + 2.
    int hi = cur_.order;
    if (k > 0) {
      const auto& prev = cur_.rows[k - 1];
      hi = std::min({hi, prev[1] - 1, static_cast<int>(prev.size())});
    }
    const int lo = rows_below(k) + 2;
    for (int v = hi; v >= lo; --v) {
      cur_.rows[k].push_back(v);
      gen_cell(k, 1);
      cur_.rows[k].pop_back();
    }
    cur_.rows.pop_back();
  }

  // Extends row k at local position i, then closes the row.
  void gen_cell(int k, int i) {
    auto& row = cur_.rows[k];
    const int first = row[0];
    if (i + 1 < first) {  // room for another part while keeping len < first
      int hi = row[i - 1];
      if (k > 0) {
        const auto& prev = cur_.rows[k - 1];
        hi = std::min(hi, (i + 1 < static_cast<int>(prev.size()))
                              ? prev[i + 1] - 1
                              : 0);
      }
      for (int v = hi; v >= 1; --v) {
        row.push_back(v);
        gen_cell(k, i + 1);
        row.pop_back();
      }
    }
    // Close the row at length i.  A next row's first entry must fit under
    // this length, and the remaining chain needs length >= rows_below + 1.
    if (rows_below(k) == 0) {
      emit_(cur_);
    } else if (i >= rows_below(k) + 1) {
      gen_row(k + 1);
    }
  }

  const std::function<void(const Dpp&)>& emit_;
  Dpp cur_;
  int target_ = 0;
};

}  // namespace detail

// Streams every DPP of order n exactly once in the canonical total order:
// fewer rows first, then rows compared lexicographically from the top with
// the larger row first.  The Dpp reference passed to the callback aliases
// internal storage; copy it if it must outlive the call.
inline void for_each_dpp(int n, const std::function<void(const Dpp&)>& emit) {
  detail::DppGenerator gen(n, emit);
  const int max_rows = std::max(0, n - 1);
  for (int m = 0; m <= max_rows; ++m) gen.run_exact_rows(m);
}

inline std::vector<Dpp> enumerate_dpps(int n) {
  std::vector<Dpp> out;
  for_each_dpp(n, [&](const Dpp& d) { out.push_back(d); });
  return out;
}

inline BigInt count_dpps(int n) {
  BigInt c = 0;
  for_each_dpp(n, [&](const Dpp&) { ++c; });
  return c;
}

// The product formula for the number of order-n DPPs (equivalently n x n
// alternating sign matrices): prod_{j=0}^{n-1} (3j+1)! / (n+j)!.
inline BigInt product_formula(int n) {
  BigInt num = 1;
  BigInt den = 1;
  auto factorial = [](int m) {
    BigInt f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  for (int j = 0; j < n; ++j) {
    num *= factorial(3 * j + 1);
    den *= factorial(n + j);
  }
  // The quotient is an integer; anything else is an implementation bug.
  if (num % den != 0) throw std::logic_error("product formula not integral");
  return num / den;
}

// Default cap for full DPP enumeration (about 10^7 objects at n = 8).
inline constexpr int kDefaultDppEnumerationCap = 8;

// Generating polynomial of the sum-of-entries statistic: the coefficient
// of q^s counts order-n DPPs whose entries sum to s.
inline QPolynomial dpp_generating_polynomial(
    int n, int cap = kDefaultDppEnumerationCap) {
  if (n > cap) {
    throw OrderTooLarge("OrderTooLargeForEnumeration: order " +
                        std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap));
  }
  std::vector<BigInt> coeffs;
  for_each_dpp(n, [&](const Dpp& d) {
    const auto s = static_cast<std::size_t>(sum_of_entries(d));
    if (s >= coeffs.size()) coeffs.resize(s + 1);
    ++coeffs[s];
  });
  return QPolynomial{std::move(coeffs)};
}

// q-analogue of the product formula: prod_{j=0}^{n-1} [3j+1]_q! / [n+j]_q!,
// computed by exact polynomial division.
inline QPolynomial q_product_formula(int n) {
  QPolynomial r = QPolynomial::one();
  for (int j = 0; j < n; ++j) r = r * QPolynomial::q_factorial(3 * j + 1);
  for (int j = 0; j < n; ++j) {
    r = r.divide_exact(QPolynomial::q_factorial(n + j));
  }
  return r;
}

}  // namespace catdpp
