#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "catdpp/common.hpp"
#include "catdpp/dpp.hpp"

namespace catdpp {

// One-row DPP of order n whose j-th entry (1-based) is at most
// a_{1,1} - j + 1 (the staircase condition).  May be empty.
struct CatalanDpp {
  std::vector<int> parts;
  int order = 0;

  friend bool operator==(const CatalanDpp& a, const CatalanDpp& b) {
    return a.parts == b.parts;
  }
};

// Sequence over {+1, -1} with at most n-1 ones, nonnegative prefix sums,
// and positive total sum when nonempty.
struct DppPath {
  std::vector<int> steps;
  int order = 0;

  friend bool operator==(const DppPath& a, const DppPath& b) {
    return a.steps == b.steps;
  }
};

// Permutation of 1..n in one-line notation.
struct Permutation {
  std::vector<int> values;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.values == b.values;
  }
};

inline bool is_catalan_dpp(const Dpp& d) {
  if (d.rows.size() > 1) return false;
  if (d.rows.empty()) return true;
  const auto& row = d.rows[0];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] > row[0] - static_cast<int>(j)) return false;
  }
  return true;
}

inline Validated<DppPath> validate_path(std::vector<int> steps, int n) {
  int ones = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] != 1 && steps[i] != -1) {
      return Violation{"InvalidStep", -1, static_cast<int>(i),
                       "step is neither 1 nor -1"};
    }
    if (steps[i] == 1) ++ones;
  }
  if (ones > std::max(0, n - 1)) {  // the empty path is valid at every order
    return Violation{"TooManyOnes", -1, -1,
                     "more than " + std::to_string(n - 1) + " ones"};
  }
  int sum = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    sum += steps[i];
    if (sum < 0) {
      return Violation{"NegativePartialSum", -1, static_cast<int>(i),
                       "partial sum drops below zero"};
    }
  }
  if (!steps.empty() && sum <= 0) {
    return Violation{"NonpositiveTotalSum", -1, -1,
                     "nonempty path with total sum <= 0"};
  }
  return DppPath{std::move(steps), n};
}

// Maps a Catalan DPP to its path: the column-box profile traced from upper
// left to lower right gives a word of -1 (right) and 1 (down) moves that
// starts with -1 and ends with 1; those two forced moves are stripped.
inline DppPath dpp_to_path(const CatalanDpp& c) {
  if (c.parts.empty()) return DppPath{{}, c.order};
  std::vector<int> word;
  for (std::size_t j = 0; j < c.parts.size(); ++j) {
    word.push_back(-1);
    const int next = (j + 1 < c.parts.size()) ? c.parts[j + 1] : 0;
    word.insert(word.end(), static_cast<std::size_t>(c.parts[j] - next), 1);
  }
  word.erase(word.begin());
  word.pop_back();
  return DppPath{std::move(word), c.order};
}

// Inverse of dpp_to_path: re-attach the leading -1 and trailing 1, then
// read entry j as the number of down moves strictly after the j-th right
// move.
inline CatalanDpp path_to_dpp(const DppPath& p) {
  if (p.steps.empty()) return CatalanDpp{{}, p.order};
  std::vector<int> word;
  word.reserve(p.steps.size() + 2);
  word.push_back(-1);
  word.insert(word.end(), p.steps.begin(), p.steps.end());
  word.push_back(1);
  std::vector<int> parts;
  int ones_after = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 1) {
      ++ones_after;
    } else {
      parts.push_back(ones_after);
    }
  }
  std::reverse(parts.begin(), parts.end());
  return CatalanDpp{std::move(parts), p.order};
}

// Streams Catalan DPPs of order n in the canonical order: the empty one,
// then by greatest part ascending, then by row length ascending, then by
// the remaining entries read right to left, lexicographically ascending.
inline void for_each_catalan_dpp(
    int n, const std::function<void(const CatalanDpp&)>& emit) {
  CatalanDpp cur;
  cur.order = n;
  emit(cur);
  for (int a = 2; a <= n; ++a) {
    for (int lam = 1; lam < a; ++lam) {
      cur.parts.assign(static_cast<std::size_t>(lam), 0);
      cur.parts[0] = a;
      // Fill positions lam..2 (1-based), each ascending from its right
      // neighbor up to the staircase bound a - j + 1.
      std::function<void(int)> fill = [&](int j) {
        if (j == 1) {
          emit(cur);
          return;
        }
        const int lo = (j == lam) ? 1 : cur.parts[static_cast<std::size_t>(j)];
        const int hi = a - j + 1;
        for (int v = lo; v <= hi; ++v) {
          cur.parts[static_cast<std::size_t>(j - 1)] = v;
          fill(j - 1);
        }
      };
      fill(lam);
    }
  }
}

inline std::vector<CatalanDpp> enumerate_catalan_dpps(int n) {
  std::vector<CatalanDpp> out;
  for_each_catalan_dpp(n, [&](const CatalanDpp& c) { out.push_back(c); });
  return out;
}

// Streams DPP paths of order n, aligned index-by-index with
// enumerate_catalan_dpps(n) through the bijection.
inline std::vector<DppPath> enumerate_paths(int n) {
  std::vector<DppPath> out;
  for_each_catalan_dpp(n,
                       [&](const CatalanDpp& c) { out.push_back(dpp_to_path(c)); });
  return out;
}

inline bool is_231_avoiding(const Permutation& p) {
  const auto& v = p.values;
  const int n = static_cast<int>(v.size());
  // suffix_min[j] = min of v[j..n-1]
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 1, n + 1);
  for (int j = n - 1; j >= 0; --j) {
    suffix_min[j] = std::min(v[j], suffix_min[j + 1]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (v[i] < v[j] && suffix_min[j + 1] < v[i]) return false;
    }
  }
  return true;
}

// All 231-avoiding permutations of 1..n in lexicographic order, generated
// by backtracking with prefix pruning (a 231 pattern in a prefix persists).
inline std::vector<Permutation> enumerate_231_avoiding(int n) {
  std::vector<Permutation> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  // Placing v at the end creates a 231 pattern iff some earlier pair
  // (v_i, v_j) with i < j has v < v_i < v_j.
  auto creates_pattern = [&](int v) {
    int best_vi = 0;  // largest v_i that has some larger v_j after it
    int suffix_max = 0;
    for (auto it = cur.rbegin(); it != cur.rend(); ++it) {
      if (*it < suffix_max && *it > best_vi) best_vi = *it;
      suffix_max = std::max(suffix_max, *it);
    }
    return v < best_vi;
  };

  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(Permutation{cur});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v] || creates_pattern(v)) continue;
      used[v] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = false;
    }
  };
  rec();
  return out;
}

// The n-th Catalan number, computed both as binomial(2n,n)/(n+1) and by
// the recurrence X_n = sum X_{p-1} X_{n-p}; the two routes must agree.
inline BigInt catalan_number(int n) {
  BigInt closed = 1;
  for (int i = 1; i <= n; ++i) {
    closed = closed * (n + i) / i;  // running binomial(n+i, i)
  }
  closed /= n + 1;

  std::vector<BigInt> x(static_cast<std::size_t>(n) + 1);
  x[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int p = 1; p <= m; ++p) s += x[p - 1] * x[m - p];
    x[m] = s;
  }
  if (closed != x[static_cast<std::size_t>(n)]) {
    throw std::logic_error("Catalan number routes disagree");
  }
  return closed;
}

}  // namespace catdpp
