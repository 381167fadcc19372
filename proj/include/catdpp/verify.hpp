#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catdpp/asm_triangle.hpp"
#include "catdpp/catalan.hpp"
#include "catdpp/dpp.hpp"
#include "catdpp/trees.hpp"
#include "catdpp/tsscpp.hpp"

namespace catdpp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace verify {

inline void add(std::vector<CheckResult>& out, const std::string& name,
                bool pass, const std::string& detail = "") {
  out.push_back(CheckResult{name, pass, detail});
}

// count_dpps(n) == product formula, generating polynomial at q=1 matches,
// and the Catalan families all count to C_n.
inline std::vector<CheckResult> counts_suite(int max_order,
                                             int dpp_cap = kDefaultDppEnumerationCap) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_order, dpp_cap); ++n) {
    const BigInt counted = count_dpps(n);
    const BigInt formula = product_formula(n);
    add(out, "dpp count vs product formula, order " + std::to_string(n),
        counted == formula,
        counted.str() + " vs " + formula.str());
  }
  for (int n = 0; n <= max_order; ++n) {
    const BigInt cn = catalan_number(n);
    const auto cats = enumerate_catalan_dpps(n);
    add(out, "catalan dpp count, order " + std::to_string(n),
        BigInt(cats.size()) == cn,
        std::to_string(cats.size()) + " vs " + cn.str());
    const auto paths = enumerate_paths(n);
    add(out, "path count, order " + std::to_string(n),
        BigInt(paths.size()) == cn);
    if (n <= 10) {
      const auto perms = enumerate_231_avoiding(n);
      add(out, "231-avoiding count, length " + std::to_string(n),
          BigInt(perms.size()) == cn);
    }
  }
  return out;
}

// Roundtrips of the Catalan DPP <-> path bijection, parameter transport,
// and filter consistency against the full DPP stream.
inline std::vector<CheckResult> bijection_suite(int max_order,
                                                int dpp_cap = kDefaultDppEnumerationCap) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= max_order; ++n) {
    bool roundtrip = true;
    bool transport = true;
    for (const auto& c : enumerate_catalan_dpps(n)) {
      const DppPath p = dpp_to_path(c);
      if (!(path_to_dpp(p) == c)) roundtrip = false;
      if (!c.parts.empty()) {
        const auto ones = std::count(p.steps.begin(), p.steps.end(), 1);
        const auto minus = std::count(p.steps.begin(), p.steps.end(), -1);
        if (ones != c.parts[0] - 1 ||
            minus != static_cast<long>(c.parts.size()) - 1) {
          transport = false;
        }
      }
    }
    add(out, "dpp->path->dpp roundtrip, order " + std::to_string(n), roundtrip);
    add(out, "path parameter transport, order " + std::to_string(n), transport);
    bool inverse = true;
    for (const auto& p : enumerate_paths(n)) {
      if (!(dpp_to_path(path_to_dpp(p)) == p)) inverse = false;
    }
    add(out, "path->dpp->path roundtrip, order " + std::to_string(n), inverse);
  }
  for (int n = 0; n <= std::min(max_order, dpp_cap); ++n) {
    std::set<std::vector<int>> filtered;
    for_each_dpp(n, [&](const Dpp& d) {
      if (is_catalan_dpp(d)) {
        filtered.insert(d.rows.empty() ? std::vector<int>{} : d.rows[0]);
      }
    });
    std::set<std::vector<int>> direct;
    for (const auto& c : enumerate_catalan_dpps(n)) direct.insert(c.parts);
    add(out, "direct generation equals filtered dpps, order " + std::to_string(n),
        filtered == direct);
  }
  return out;
}

// Structural isomorphism of the four trees plus label/family agreement,
// parent coherence, and the adjacent-sibling child-count law.
inline std::vector<CheckResult> trees_suite(int depth_cap) {
  std::vector<CheckResult> out;
  const auto report = check_isomorphism(depth_cap);
  for (const auto& lvl : report.levels) {
    add(out, "tree shape agreement, depth " + std::to_string(lvl.depth),
        lvl.pass, lvl.detail);
  }

  const auto perm_levels = build_levels(TreeKind::Perm, depth_cap, depth_cap);
  const auto path_levels = build_levels(TreeKind::Path, depth_cap, depth_cap);
  const auto dpp_levels = build_levels(TreeKind::Dpp, depth_cap, depth_cap);
  for (int d = 0; d <= depth_cap; ++d) {
    std::multiset<std::vector<int>> perm_labels;
    for (const auto& l : perm_levels[static_cast<std::size_t>(d)].labels) {
      perm_labels.insert(std::get<Permutation>(l).values);
    }
    std::multiset<std::vector<int>> perm_family;
    for (const auto& p : enumerate_231_avoiding(d)) perm_family.insert(p.values);
    add(out, "perm tree level equals 231-avoiding family, depth " +
            std::to_string(d),
        perm_labels == perm_family);

    std::multiset<std::vector<int>> path_labels;
    for (const auto& l : path_levels[static_cast<std::size_t>(d)].labels) {
      path_labels.insert(std::get<PathNode>(l).path.steps);
    }
    std::multiset<std::vector<int>> path_family;
    for (const auto& p : enumerate_paths(d)) path_family.insert(p.steps);
    add(out, "path tree level equals path family, depth " + std::to_string(d),
        path_labels == path_family);

    std::multiset<std::vector<int>> dpp_labels;
    for (const auto& l : dpp_levels[static_cast<std::size_t>(d)].labels) {
      dpp_labels.insert(std::get<CatalanDpp>(l).parts);
    }
    std::multiset<std::vector<int>> dpp_family;
    for (const auto& c : enumerate_catalan_dpps(d)) dpp_family.insert(c.parts);
    add(out, "dpp tree level equals catalan dpp family, depth " +
            std::to_string(d),
        dpp_labels == dpp_family);
  }

  // Bijection naturality: the dpp tree is the path tree mapped node-wise.
  bool natural = true;
  for (int d = 0; d <= depth_cap && natural; ++d) {
    const auto& pl = path_levels[static_cast<std::size_t>(d)];
    const auto& dl = dpp_levels[static_cast<std::size_t>(d)];
    if (pl.labels.size() != dl.labels.size()) {
      natural = false;
      break;
    }
    for (std::size_t i = 0; i < pl.labels.size(); ++i) {
      const auto& path = std::get<PathNode>(pl.labels[i]).path;
      const auto& cdpp = std::get<CatalanDpp>(dl.labels[i]);
      if (!(path_to_dpp(path).parts == cdpp.parts)) natural = false;
    }
  }
  add(out, "dpp tree is node-wise image of path tree", natural);

  // Parent map regenerates every node, and each level holds each path once.
  bool parent_ok = true;
  bool unique_ok = true;
  for (int d = 1; d <= depth_cap; ++d) {
    const auto& lvl = path_levels[static_cast<std::size_t>(d)];
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < lvl.labels.size(); ++i) {
      const auto& node = std::get<PathNode>(lvl.labels[i]);
      if (!seen.insert(node.path.steps).second) unique_ok = false;
      const DppPath parent = path_parent(node.path);
      const auto siblings = path_children(parent, d - 1 > 0);
      if (std::none_of(siblings.begin(), siblings.end(), [&](const DppPath& s) {
            return s.steps == node.path.steps;
          })) {
        parent_ok = false;
      }
      const int actual_parent =
          lvl.parent_index[i];
      const auto& stored_parent = std::get<PathNode>(
          path_levels[static_cast<std::size_t>(d - 1)]
              .labels[static_cast<std::size_t>(actual_parent)]);
      if (stored_parent.path.steps != parent.steps) parent_ok = false;
    }
  }
  add(out, "path parent map coherent with child rule", parent_ok);
  add(out, "path tree levels duplicate-free", unique_ok);

  // Adjacent siblings A (left), B (right): B has one more child than A.
  bool sibling_law = true;
  for (int d = 1; d <= depth_cap; ++d) {
    const auto& lvl = path_levels[static_cast<std::size_t>(d)];
    for (std::size_t i = 1; i < lvl.labels.size(); ++i) {
      if (lvl.parent_index[i] != lvl.parent_index[i - 1]) continue;
      if (lvl.child_counts[i] != lvl.child_counts[i - 1] + 1) sibling_law = false;
    }
  }
  add(out, "adjacent sibling child counts increase by one", sibling_law);

  return out;
}

// Brute-force sum-of-entries polynomial against the q-analogue of the
// product formula.
inline std::vector<CheckResult> qpoly_suite(int max_order,
                                            int dpp_cap = kDefaultDppEnumerationCap) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_order, dpp_cap); ++n) {
    const QPolynomial brute = dpp_generating_polynomial(n, dpp_cap);
    const QPolynomial closed = q_product_formula(n);
    add(out, "generating polynomial vs q-product, order " + std::to_string(n),
        brute == closed, brute.to_string() + " vs " + closed.to_string());
    add(out, "polynomial at q=1 vs product formula, order " + std::to_string(n),
        brute.eval_at_one() == product_formula(n));
  }
  return out;
}

// ASM counts and conversions, diagonal counts, TSSCPP counts.
inline std::vector<CheckResult> cross_family_suite(int max_order) {
  std::vector<CheckResult> out;
  for (int n = 0; n <= std::min(max_order, kDefaultAsmCap); ++n) {
    const auto asms = enumerate_asms(n);
    add(out, "asm count vs product formula, order " + std::to_string(n),
        BigInt(asms.size()) == product_formula(n));
    bool roundtrip = true;
    for (const auto& a : asms) {
      if (!validate_asm(a.entries).ok()) roundtrip = false;
      if (!(monotone_to_asm(asm_to_monotone(a)) == a)) roundtrip = false;
    }
    add(out, "asm <-> monotone roundtrip, order " + std::to_string(n), roundtrip);
    bool diagonals_ok = true;
    for (const auto& t : enumerate_monotone_triangles(n)) {
      if (n > 0 && !is_valid_diagonal(nw_se_diagonal(t), n,
                                      DiagonalFlavor::Monotone)) {
        diagonals_ok = false;
      }
    }
    add(out, "triangle diagonals are monotone sequences, order " +
            std::to_string(n),
        diagonals_ok);
  }
  for (int n = 0; n <= std::min(max_order, 12); ++n) {
    const BigInt cn = catalan_number(n);
    add(out, "monotone diagonal count, length " + std::to_string(n),
        BigInt(enumerate_diagonals(n, DiagonalFlavor::Monotone).size()) == cn);
    add(out, "magog diagonal count, length " + std::to_string(n),
        BigInt(enumerate_diagonals(n, DiagonalFlavor::Magog).size()) == cn);
  }
  for (int n = 0; n <= std::min(max_order, kDefaultTsscppCap); ++n) {
    add(out, "tsscpp count vs product formula, half-side " + std::to_string(n),
        BigInt(enumerate_tsscpps(n).size()) == product_formula(n));
  }
  return out;
}

inline std::vector<CheckResult> suite_by_name(const std::string& name,
                                              int max_order) {
  if (name == "counts") return counts_suite(max_order);
  if (name == "bijection") return bijection_suite(max_order);
  if (name == "trees") return trees_suite(max_order);
  if (name == "qpoly") return qpoly_suite(max_order);
  if (name == "cross-family") return cross_family_suite(max_order);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace verify
}  // namespace catdpp
