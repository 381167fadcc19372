// Command line front end: enumerate combinatorial families, map objects
// across the Catalan DPP <-> path bijection, emit generating trees, and
// run the verification suites.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catdpp/io.hpp"
#include "catdpp/verify.hpp"

namespace {

using namespace catdpp;

struct Caps {
  int dpp_order = kDefaultDppEnumerationCap;
  int tree_depth = kDefaultTreeDepthCap;
  int asm_order = kDefaultAsmCap;
  int tsscpp = kDefaultTsscppCap;
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

template <typename T>
void stream_objects(const std::vector<T>& objects, const std::string& format,
                    std::ostream& out) {
  if (format == "count") {
    out << objects.size() << "\n";
    return;
  }
  for (const auto& obj : objects) {
    if (format == "json") {
      out << to_json(obj).dump() << "\n";
    } else {
      out << to_ascii(obj) << "\n";
    }
  }
  if (format == "json") {
    out << json{{"count", objects.size()}}.dump() << "\n";
  }
}

int run_enumerate(const std::string& family, int order,
                  const std::string& format, const Caps& caps,
                  std::ostream& out) {
  if (family == "dpp") {
    if (order > caps.dpp_order) {
      throw OrderTooLarge("order exceeds dpp cap " +
                          std::to_string(caps.dpp_order));
    }
    stream_objects(enumerate_dpps(order), format, out);
  } else if (family == "catalan-dpp") {
    stream_objects(enumerate_catalan_dpps(order), format, out);
  } else if (family == "path") {
    stream_objects(enumerate_paths(order), format, out);
  } else if (family == "perm231") {
    stream_objects(enumerate_231_avoiding(order), format, out);
  } else if (family == "asm") {
    stream_objects(enumerate_asms(order, caps.asm_order), format, out);
  } else if (family == "mono-diag") {
    stream_objects(enumerate_diagonals(order, DiagonalFlavor::Monotone), format,
                   out);
  } else if (family == "magog-diag") {
    stream_objects(enumerate_diagonals(order, DiagonalFlavor::Magog), format,
                   out);
  } else if (family == "tsscpp") {
    stream_objects(enumerate_tsscpps(order, caps.tsscpp), format, out);
  }
  return 0;
}

int run_count(const std::string& family, int order, const Caps& caps,
              std::ostream& out) {
  BigInt count = 0;
  BigInt formula = 0;
  std::string formula_name;
  if (family == "dpp") {
    if (order > caps.dpp_order) {
      throw OrderTooLarge("order exceeds dpp cap " +
                          std::to_string(caps.dpp_order));
    }
    count = count_dpps(order);
    formula = product_formula(order);
    formula_name = "product formula";
  } else if (family == "asm") {
    count = BigInt(enumerate_asms(order, caps.asm_order).size());
    formula = product_formula(order);
    formula_name = "product formula";
  } else if (family == "tsscpp") {
    count = BigInt(enumerate_tsscpps(order, caps.tsscpp).size());
    formula = product_formula(order);
    formula_name = "product formula";
  } else if (family == "catalan-dpp") {
    count = BigInt(enumerate_catalan_dpps(order).size());
    formula = catalan_number(order);
    formula_name = "Catalan number";
  } else if (family == "path") {
    count = BigInt(enumerate_paths(order).size());
    formula = catalan_number(order);
    formula_name = "Catalan number";
  } else if (family == "perm231") {
    count = BigInt(enumerate_231_avoiding(order).size());
    formula = catalan_number(order);
    formula_name = "Catalan number";
  } else if (family == "mono-diag") {
    count = BigInt(enumerate_diagonals(order, DiagonalFlavor::Monotone).size());
    formula = catalan_number(order);
    formula_name = "Catalan number";
  } else if (family == "magog-diag") {
    count = BigInt(enumerate_diagonals(order, DiagonalFlavor::Magog).size());
    formula = catalan_number(order);
    formula_name = "Catalan number";
  }
  out << count << " (" << formula_name << ": " << formula << ") "
      << (count == formula ? "MATCH" : "MISMATCH") << "\n";
  return count == formula ? 0 : 1;
}

int run_map(const std::string& from, const std::string& value, int order,
            std::ostream& out) {
  if (from == "catalan-dpp") {
    auto parts = parse_int_list(value);
    if (!parts) throw CLI::ValidationError("--value", "cannot parse parts");
    const int n = order > 0 ? order : (parts->empty() ? 0 : (*parts)[0]);
    auto checked = validate_dpp(parts->empty()
                                    ? std::vector<std::vector<int>>{}
                                    : std::vector<std::vector<int>>{*parts},
                                n);
    if (!checked.ok() || !is_catalan_dpp(checked.value())) {
      std::cerr << "not a Catalan DPP"
                << (checked.ok() ? "" : ": " + checked.violation().code) << "\n";
      return 1;
    }
    out << to_ascii(dpp_to_path(CatalanDpp{*parts, n})) << "\n";
    return 0;
  }
  auto steps = parse_path_ascii(value);
  if (!steps) throw CLI::ValidationError("--value", "cannot parse path");
  const int n = order > 0 ? order : static_cast<int>(steps->size()) + 1;
  auto checked = validate_path(*steps, n);
  if (!checked.ok()) {
    std::cerr << "not a valid path: " << checked.violation().code << "\n";
    return 1;
  }
  out << to_ascii(path_to_dpp(checked.value())) << "\n";
  return 0;
}

int run_tree(const std::string& which, int depth, const std::string& format,
             const Caps& caps, std::ostream& out) {
  TreeKind kind = TreeKind::Abstract;
  if (which == "perm") kind = TreeKind::Perm;
  if (which == "path") kind = TreeKind::Path;
  if (which == "dpp") kind = TreeKind::Dpp;
  const auto levels = build_levels(kind, depth, caps.tree_depth);
  if (format == "json") {
    out << tree_levels_jsonl(levels);
  } else if (format == "dot") {
    out << tree_to_dot(levels, which);
  } else {
    for (const auto& level : levels) {
      out << "depth " << level.depth << ":";
      for (std::size_t i = 0; i < level.labels.size(); ++i) {
        out << "  " << tree_label_ascii(level.labels[i]) << "("
            << level.child_counts[i] << ")";
      }
      out << "\n";
    }
  }
  return 0;
}

int run_verify(const std::string& suite, int max_order, std::ostream& out) {
  const auto results = verify::suite_by_name(suite, max_order);
  bool all_pass = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.pass && !r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return all_pass ? 0 : 1;
}

int run_qpoly(int order, const Caps& caps, std::ostream& out) {
  const QPolynomial brute = dpp_generating_polynomial(order, caps.dpp_order);
  const QPolynomial closed = q_product_formula(order);
  out << "enumerated: " << brute.to_string() << "\n";
  out << "q-product:  " << closed.to_string() << "\n";
  out << (brute == closed ? "MATCH" : "MISMATCH") << "\n";
  return brute == closed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descending plane partitions, their Catalan subset, and the "
               "generating trees relating them to 231-avoiding permutations"};
  app.require_subcommand(1);

  Caps caps;
  app.add_option("--dpp-cap", caps.dpp_order, "full DPP enumeration cap")
      ->envname("CATDPP_DPP_CAP");
  app.add_option("--tree-depth-cap", caps.tree_depth, "tree depth cap")
      ->envname("CATDPP_TREE_DEPTH_CAP");
  app.add_option("--asm-cap", caps.asm_order, "ASM enumeration cap")
      ->envname("CATDPP_ASM_CAP");
  app.add_option("--tsscpp-cap", caps.tsscpp, "TSSCPP enumeration cap")
      ->envname("CATDPP_TSSCPP_CAP");

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  const std::vector<std::string> families{"dpp",     "catalan-dpp", "path",
                                          "perm231", "asm",         "mono-diag",
                                          "magog-diag", "tsscpp"};

  auto* enumerate = app.add_subcommand("enumerate", "stream a family");
  std::string family, format = "ascii";
  int order = 0;
  enumerate->add_option("--family", family, "object family")
      ->required()
      ->check(CLI::IsMember(families));
  enumerate->add_option("--order", order, "order / length")->required();
  enumerate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "ascii", "count"}));

  auto* count = app.add_subcommand("count", "count a family and compare to its formula");
  count->add_option("--family", family, "object family")
      ->required()
      ->check(CLI::IsMember(families));
  count->add_option("--order", order, "order / length")->required();

  auto* map = app.add_subcommand("map", "apply the Catalan DPP <-> path bijection");
  std::string from, value;
  map->add_option("--from", from, "input side")
      ->required()
      ->check(CLI::IsMember({"catalan-dpp", "path"}));
  map->add_option("--value", value, "object in ASCII form")->required();
  map->add_option("--order", order, "order bound (defaults to the minimum)");

  auto* tree = app.add_subcommand("tree", "emit a generating tree");
  std::string which, tree_format = "ascii";
  int depth = 0;
  tree->add_option("--which", which, "tree")
      ->required()
      ->check(CLI::IsMember({"abstract", "perm", "path", "dpp"}));
  tree->add_option("--depth", depth, "depth to expand")->required();
  tree->add_option("--format", tree_format, "output format")
      ->check(CLI::IsMember({"json", "dot", "ascii"}));

  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  int max_order = 6;
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(
          {"counts", "bijection", "trees", "qpoly", "cross-family"}));
  verify_cmd->add_option("--max-order", max_order, "largest order to check");

  auto* qpoly = app.add_subcommand("qpoly", "compare the sum-of-entries polynomial routes");
  qpoly->add_option("--order", order, "order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  std::ofstream file;
  try {
    std::ostream& out = open_output(out_path, file);
    if (enumerate->parsed()) return run_enumerate(family, order, format, caps, out);
    if (count->parsed()) return run_count(family, order, caps, out);
    if (map->parsed()) return run_map(from, value, order, out);
    if (tree->parsed()) return run_tree(which, depth, tree_format, caps, out);
    if (verify_cmd->parsed()) return run_verify(suite, max_order, out);
    if (qpoly->parsed()) return run_qpoly(order, caps, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
