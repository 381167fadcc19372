#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "catdpp/asm_triangle.hpp"
#include "catdpp/catalan.hpp"
#include "catdpp/dpp.hpp"
#include "catdpp/trees.hpp"
#include "catdpp/tsscpp.hpp"

namespace catdpp {

using nlohmann::json;

inline constexpr const char* kEmptySymbol = "∅";  // ∅

// ---- JSON ----

inline json to_json(const Dpp& d) {
  return json{{"rows", d.rows}, {"order", d.order}, {"sum", sum_of_entries(d)}};
}

inline json to_json(const CatalanDpp& c) { return json{{"parts", c.parts}}; }

inline json to_json(const DppPath& p) { return json{{"steps", p.steps}}; }

inline json to_json(const Permutation& p) { return json{{"values", p.values}}; }

inline json to_json(const Asm& a) { return json{{"entries", a.entries}}; }

inline json to_json(const MonotoneTriangle& t) { return json{{"rows", t.rows}}; }

inline json to_json(const DiagonalSequence& d) {
  return json{{"values", d.values},
              {"flavor", d.flavor == DiagonalFlavor::Monotone ? "monotone"
                                                              : "magog"}};
}

inline json to_json(const TsscppBox& b) {
  return json{{"heights", b.heights}, {"n", b.n}};
}

// ---- ASCII ----

// One-line form, rows joined with " / ": "3 3 / 2".  Empty is "∅".
inline std::string to_ascii(const Dpp& d) {
  if (d.rows.empty()) return kEmptySymbol;
  std::ostringstream out;
  for (std::size_t k = 0; k < d.rows.size(); ++k) {
    if (k > 0) out << " / ";
    for (std::size_t i = 0; i < d.rows[k].size(); ++i) {
      if (i > 0) out << ' ';
      out << d.rows[k][i];
    }
  }
  return out.str();
}

// Multi-line shifted layout: every part is printed in a fixed-width column
// and each row starts one column further right.
inline std::string to_ascii_shifted(const Dpp& d) {
  if (d.rows.empty()) return kEmptySymbol;
  std::size_t width = 1;
  for (const auto& row : d.rows)
    for (int v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  for (std::size_t k = 0; k < d.rows.size(); ++k) {
    if (k > 0) out << '\n';
    out << std::string(k * (width + 1), ' ');
    for (std::size_t i = 0; i < d.rows[k].size(); ++i) {
      if (i > 0) out << ' ';
      std::string s = std::to_string(d.rows[k][i]);
      out << std::string(width - s.size(), ' ') << s;
    }
  }
  return out.str();
}

inline std::string to_ascii(const CatalanDpp& c) {
  return to_ascii(Dpp{c.parts.empty() ? std::vector<std::vector<int>>{}
                                      : std::vector<std::vector<int>>{c.parts},
                      c.order});
}

// Paths print as concatenated "1"/"-1" tokens: [1,-1,1,-1,1] -> "1-11-11".
inline std::string to_ascii(const DppPath& p) {
  if (p.steps.empty()) return kEmptySymbol;
  std::string out;
  for (int s : p.steps) out += (s == 1 ? "1" : "-1");
  return out;
}

inline std::string to_ascii(const Permutation& p) {
  if (p.values.empty()) return kEmptySymbol;
  bool single_digits = true;
  for (int v : p.values) single_digits = single_digits && v <= 9;
  std::string out;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (i > 0 && !single_digits) out += ' ';
    out += std::to_string(p.values[i]);
  }
  return out;
}

inline std::string to_ascii(const DiagonalSequence& d) {
  std::string out;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(d.values[i]);
  }
  return out.empty() ? kEmptySymbol : out;
}

// Matrix printer with two-character "-1" cells kept column-aligned.
inline std::string to_ascii(const Asm& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (i > 0) out << '\n';
    for (std::size_t j = 0; j < a.entries[i].size(); ++j) {
      if (j > 0) out << ' ';
      out << (a.entries[i][j] < 0 ? "-1" : " " + std::to_string(a.entries[i][j]));
    }
  }
  return out.str();
}

inline std::string to_ascii(const MonotoneTriangle& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i > 0) out << '\n';
    out << std::string(2 * (t.rows.size() - 1 - i), ' ');
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j > 0) out << "   ";
      out << t.rows[i][j];
    }
  }
  return out.str();
}

inline std::string to_ascii(const TsscppBox& b) {
  std::ostringstream out;
  for (std::size_t i = 0; i < b.heights.size(); ++i) {
    if (i > 0) out << '\n';
    for (std::size_t j = 0; j < b.heights[i].size(); ++j) {
      if (j > 0) out << ' ';
      out << b.heights[i][j];
    }
  }
  return out.str();
}

// Grid rendering of a path's box profile (columns of boxes under the
// traced upper edge), for human inspection.
inline std::string path_profile_ascii(const DppPath& p) {
  const CatalanDpp c = path_to_dpp(p);
  if (c.parts.empty()) return kEmptySymbol;
  const int height = c.parts[0];
  std::ostringstream out;
  for (int level = height; level >= 1; --level) {
    if (level != height) out << '\n';
    for (int part : c.parts) out << (part >= level ? "[]" : "  ");
  }
  return out.str();
}

// ---- parsing ----

inline std::optional<std::vector<int>> parse_path_ascii(const std::string& s) {
  std::vector<int> steps;
  if (s == kEmptySymbol || s.empty()) return steps;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '1') {
      steps.push_back(1);
      ++i;
    } else if (s[i] == '-' && i + 1 < s.size() && s[i + 1] == '1') {
      steps.push_back(-1);
      i += 2;
    } else {
      return std::nullopt;
    }
  }
  return steps;
}

inline std::optional<std::vector<int>> parse_int_list(const std::string& s) {
  std::vector<int> parts;
  if (s == kEmptySymbol || s.empty()) return parts;
  std::istringstream in(s);
  int v = 0;
  while (in >> v) parts.push_back(v);
  if (!in.eof()) return std::nullopt;
  return parts;
}

// ---- tree rendering ----

inline std::string tree_label_ascii(const TreeLabel& label) {
  if (std::holds_alternative<int>(label)) {
    return std::to_string(std::get<int>(label));
  }
  if (std::holds_alternative<Permutation>(label)) {
    return to_ascii(std::get<Permutation>(label));
  }
  if (std::holds_alternative<PathNode>(label)) {
    return to_ascii(std::get<PathNode>(label).path);
  }
  return to_ascii(std::get<CatalanDpp>(label));
}

// JSON-lines dump of levels: {"depth":n,"index":i,"label":...,"children":k}.
inline std::string tree_levels_jsonl(const std::vector<TreeLevel>& levels) {
  std::ostringstream out;
  for (const auto& level : levels) {
    for (std::size_t i = 0; i < level.labels.size(); ++i) {
      json line{{"depth", level.depth},
                {"index", i},
                {"label", tree_label_ascii(level.labels[i])},
                {"children", level.child_counts[i]}};
      out << line.dump() << '\n';
    }
  }
  return out.str();
}

inline std::string tree_to_dot(const std::vector<TreeLevel>& levels,
                               const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=box];\n";
  for (const auto& level : levels) {
    for (std::size_t i = 0; i < level.labels.size(); ++i) {
      out << "  d" << level.depth << "_" << i << " [label=\""
          << tree_label_ascii(level.labels[i]) << "\"];\n";
      if (level.parent_index.size() > i && level.parent_index[i] >= 0) {
        out << "  d" << level.depth - 1 << "_" << level.parent_index[i]
            << " -> d" << level.depth << "_" << i << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace catdpp
