#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "catdpp/catalan.hpp"
#include "catdpp/common.hpp"

namespace catdpp {

// The four Catalan generating trees: the abstract succession rule, West's
// tree on 231-avoiding permutations, the DPP-path tree, and the tree read
// directly on Catalan DPPs.  All four share the same shape level by level.
enum class TreeKind { Abstract, Perm, Path, Dpp };

// Node in the path tree; empty paths behave differently at the root.
struct PathNode {
  DppPath path;
  bool has_parent = false;
};

// Abstract nodes are labeled by their child count; the labeled trees carry
// their combinatorial object.
using TreeLabel = std::variant<int, Permutation, PathNode, CatalanDpp>;

// One level of a generating tree.  Nodes appear in left-to-right sibling
// order; parent_index points into the previous level, so consecutive runs
// with equal parent_index are sibling groups.
struct TreeLevel {
  int depth = 0;
  std::vector<TreeLabel> labels;
  std::vector<int> child_counts;
  std::vector<int> parent_index;
};

inline constexpr int kDefaultTreeDepthCap = 12;

// Child counts under the abstract rule: the root has one child; a node in
// sibling position p (1-based, left to right) has p + 1 children.
inline int abstract_children(int position_from_left, bool is_root) {
  if (is_root) return 1;
  return position_from_left + 1;
}

struct Not231Avoiding : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyPermutation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCatalanDpp : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int lr_maxima(const Permutation& p) {
  if (p.values.empty()) throw EmptyPermutation("empty permutation");
  int count = 0;
  int best = 0;
  for (int v : p.values) {
    if (v > best) {
      best = v;
      ++count;
    }
  }
  return count;
}

// West insertion: the children of a 231-avoiding permutation of length n
// are obtained by inserting n+1 immediately left of each left-to-right
// maximum (leftmost first) and at the end.
inline std::vector<Permutation> perm_children(const Permutation& p) {
  if (!is_231_avoiding(p)) throw Not231Avoiding("input contains a 231 pattern");
  const int n = static_cast<int>(p.values.size());
  std::vector<std::size_t> slots;
  int best = 0;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (p.values[i] > best) {
      best = p.values[i];
      slots.push_back(i);
    }
  }
  slots.push_back(p.values.size());
  std::vector<Permutation> children;
  children.reserve(slots.size());
  for (std::size_t s : slots) {
    Permutation child = p;
    child.values.insert(child.values.begin() + static_cast<std::ptrdiff_t>(s),
                        n + 1);
    children.push_back(std::move(child));
  }
  return children;
}

// Children of a path node, left to right.  The rightmost child inserts a
// "1,-1" pair directly before the first -1 (or appends a 1 when there is
// none, with the next sibling appending a -1 instead); the remaining
// siblings shift that new leftmost -1 one position further left, stopping
// before it would pass the first 1.
inline std::vector<DppPath> path_children(const DppPath& p, bool has_parent) {
  {
    auto checked = validate_path(p.steps, p.order);
    if (!checked.ok()) throw InvalidPath(checked.violation().code);
  }
  const int child_order = p.order + 1;
  if (p.steps.empty()) {
    std::vector<DppPath> children{DppPath{{}, child_order}};
    if (has_parent) children.push_back(DppPath{{1}, child_order});
    return children;
  }
  auto first_minus = std::find(p.steps.begin(), p.steps.end(), -1);
  std::vector<DppPath> children;  // built right to left, reversed at the end
  std::vector<int> suffix;        // everything after the shifting -1
  int leading_ones = 0;           // ones available before the shifting -1
  if (first_minus == p.steps.end()) {
    children.push_back(DppPath{p.steps, child_order});
    children.back().steps.push_back(1);
    leading_ones = static_cast<int>(p.steps.size()) + 1;
  } else {
    leading_ones =
        static_cast<int>(first_minus - p.steps.begin()) + 1;  // inserted 1
    suffix.assign(first_minus, p.steps.end());
  }
  for (int t = leading_ones; t >= 1; --t) {
    DppPath child{{}, child_order};
    child.steps.assign(static_cast<std::size_t>(t), 1);
    child.steps.push_back(-1);
    child.steps.insert(child.steps.end(),
                       static_cast<std::size_t>(leading_ones - t), 1);
    child.steps.insert(child.steps.end(), suffix.begin(), suffix.end());
    children.push_back(std::move(child));
  }
  std::reverse(children.begin(), children.end());
  return children;
}

// Parent of a path: remove the leftmost 1 and leftmost -1 (or a single 1
// when there is no -1; the empty path is its own fixed point).
inline DppPath path_parent(const DppPath& p) {
  const int parent_order = std::max(0, p.order - 1);
  if (p.steps.empty()) return DppPath{{}, parent_order};
  std::vector<int> steps = p.steps;
  auto minus = std::find(steps.begin(), steps.end(), -1);
  if (minus != steps.end()) steps.erase(minus);
  steps.erase(std::find(steps.begin(), steps.end(), 1));
  return DppPath{std::move(steps), parent_order};
}

// Children of a Catalan DPP, left to right: increment the greatest part
// and insert x between the first two entries for x from a_{1,1} down to
// a_{1,2}; when the row has at most one entry, x runs down to 1 and the
// rightmost child omits the insertion.
inline std::vector<CatalanDpp> dpp_children(const CatalanDpp& c,
                                            bool has_parent = true) {
  {
    auto checked = validate_dpp(c.parts.empty()
                                    ? std::vector<std::vector<int>>{}
                                    : std::vector<std::vector<int>>{c.parts},
                                c.order);
    if (!checked.ok() || !is_catalan_dpp(checked.value())) {
      throw InvalidCatalanDpp(checked.ok() ? "staircase condition violated"
                                           : checked.violation().code);
    }
  }
  const int child_order = c.order + 1;
  if (c.parts.empty()) {
    std::vector<CatalanDpp> children{CatalanDpp{{}, child_order}};
    if (has_parent) children.push_back(CatalanDpp{{2}, child_order});
    return children;
  }
  const int a = c.parts[0];
  const int a2 = c.parts.size() >= 2 ? c.parts[1] : 0;
  std::vector<CatalanDpp> children;
  for (int x = a; x >= a2; --x) {
    CatalanDpp child{{}, child_order};
    child.parts.push_back(a + 1);
    if (x > 0) child.parts.push_back(x);
    child.parts.insert(child.parts.end(), c.parts.begin() + 1, c.parts.end());
    children.push_back(std::move(child));
  }
  return children;
}

// Breadth-first expansion of the requested tree down to `depth`.
inline std::vector<TreeLevel> build_levels(TreeKind kind, int depth,
                                           int depth_cap = kDefaultTreeDepthCap) {
  if (depth > depth_cap) {
    throw DepthTooLarge("DepthTooLarge: depth " + std::to_string(depth) +
                        " exceeds cap " + std::to_string(depth_cap));
  }
  std::vector<TreeLevel> levels;
  TreeLevel root;
  root.depth = 0;
  switch (kind) {
    case TreeKind::Abstract:
      root.labels.push_back(abstract_children(1, true));
      break;
    case TreeKind::Perm:
      root.labels.push_back(Permutation{});
      break;
    case TreeKind::Path:
      root.labels.push_back(PathNode{DppPath{{}, 0}, false});
      break;
    case TreeKind::Dpp:
      root.labels.push_back(CatalanDpp{{}, 0});
      break;
  }
  root.parent_index.push_back(-1);
  levels.push_back(std::move(root));

  for (int d = 0; d < depth; ++d) {
    TreeLevel& cur = levels.back();
    TreeLevel next;
    next.depth = d + 1;
    for (std::size_t i = 0; i < cur.labels.size(); ++i) {
      const int parent = static_cast<int>(i);
      std::size_t produced = 0;
      if (kind == TreeKind::Abstract) {
        const int count = std::get<int>(cur.labels[i]);
        for (int p = 1; p <= count; ++p) {
          next.labels.push_back(abstract_children(p, false));
          next.parent_index.push_back(parent);
        }
        produced = static_cast<std::size_t>(count);
      } else if (kind == TreeKind::Perm) {
        for (auto& child : perm_children(std::get<Permutation>(cur.labels[i]))) {
          next.labels.push_back(std::move(child));
          next.parent_index.push_back(parent);
          ++produced;
        }
      } else if (kind == TreeKind::Path) {
        const auto& node = std::get<PathNode>(cur.labels[i]);
        for (auto& child : path_children(node.path, node.has_parent)) {
          next.labels.push_back(PathNode{std::move(child), true});
          next.parent_index.push_back(parent);
          ++produced;
        }
      } else {
        for (auto& child :
             dpp_children(std::get<CatalanDpp>(cur.labels[i]), d > 0)) {
          next.labels.push_back(std::move(child));
          next.parent_index.push_back(parent);
          ++produced;
        }
      }
      cur.child_counts.push_back(static_cast<int>(produced));
    }
    levels.push_back(std::move(next));
  }

  // Child counts of the deepest level, without materializing another one.
  TreeLevel& last = levels.back();
  for (std::size_t i = 0; i < last.labels.size(); ++i) {
    if (kind == TreeKind::Abstract) {
      last.child_counts.push_back(std::get<int>(last.labels[i]));
    } else if (kind == TreeKind::Perm) {
      const auto& p = std::get<Permutation>(last.labels[i]);
      last.child_counts.push_back(p.values.empty() ? 1 : lr_maxima(p) + 1);
    } else if (kind == TreeKind::Path) {
      const auto& node = std::get<PathNode>(last.labels[i]);
      last.child_counts.push_back(
          static_cast<int>(path_children(node.path, node.has_parent).size()));
    } else {
      last.child_counts.push_back(static_cast<int>(
          dpp_children(std::get<CatalanDpp>(last.labels[i]), depth > 0).size()));
    }
  }
  return levels;
}

inline TreeLevel build_level(TreeKind kind, int depth,
                             int depth_cap = kDefaultTreeDepthCap) {
  auto levels = build_levels(kind, depth, depth_cap);
  return std::move(levels.back());
}

// Per-depth outcome of the structural comparison of the four trees.
struct LevelReport {
  int depth = 0;
  bool pass = false;
  std::size_t level_size = 0;
  BigInt expected_size;
  int first_mismatch = -1;  // index of the first differing child count
  std::string detail;
};

struct IsomorphismReport {
  bool all_pass = false;
  std::vector<LevelReport> levels;
};

// Verifies, for every depth up to the cap, that all four trees present the
// same sibling child-count sequence and that level sizes equal the Catalan
// numbers.
inline IsomorphismReport check_isomorphism(int depth_cap) {
  IsomorphismReport report;
  const TreeKind kinds[] = {TreeKind::Abstract, TreeKind::Perm, TreeKind::Path,
                            TreeKind::Dpp};
  const char* names[] = {"abstract", "perm", "path", "dpp"};
  std::vector<std::vector<TreeLevel>> all;
  for (TreeKind k : kinds) all.push_back(build_levels(k, depth_cap, depth_cap));

  report.all_pass = true;
  for (int d = 0; d <= depth_cap; ++d) {
    LevelReport lr;
    lr.depth = d;
    lr.pass = true;
    const auto& ref = all[0][static_cast<std::size_t>(d)];
    lr.level_size = ref.labels.size();
    lr.expected_size = catalan_number(d);
    if (BigInt(lr.level_size) != lr.expected_size) {
      lr.pass = false;
      lr.detail = "abstract level size differs from Catalan number";
    }
    for (std::size_t t = 1; t < all.size() && lr.pass; ++t) {
      const auto& lvl = all[t][static_cast<std::size_t>(d)];
      if (lvl.child_counts.size() != ref.child_counts.size()) {
        lr.pass = false;
        lr.detail = std::string(names[t]) + " level size differs";
        break;
      }
      for (std::size_t i = 0; i < ref.child_counts.size(); ++i) {
        if (lvl.child_counts[i] != ref.child_counts[i]) {
          lr.pass = false;
          lr.first_mismatch = static_cast<int>(i);
          lr.detail = std::string(names[t]) + " child count differs at index " +
                      std::to_string(i);
          break;
        }
      }
    }
    report.all_pass = report.all_pass && lr.pass;
    report.levels.push_back(std::move(lr));
  }
  return report;
}

}  // namespace catdpp
