// Acceptance suite: one line per criterion, all comparisons exact
// (integer and polynomial equality; no floating point anywhere).
// argv[1] is the path to the built command line tool.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "catdpp/catalan.hpp"
#include "catdpp/dpp.hpp"
#include "catdpp/io.hpp"
#include "catdpp/trees.hpp"
#include "catdpp/verify.hpp"

using namespace catdpp;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int criterion, const std::string& what, bool pass) {
  if (!pass) ++g_failures;
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": "
            << what << "\n";
}

std::vector<std::string> cli_lines(const std::string& args, bool& ok) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  std::vector<std::string> lines;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    ok = false;
    return lines;
  }
  std::string all;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) all.append(buf, n);
  const int status = pclose(pipe);
  ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  std::istringstream in(all);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

using Matrix = std::vector<std::vector<int>>;

const std::vector<Matrix> kAsms3 = {
    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},  {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
    {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},  {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}},
    {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},  {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
    {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};

const std::vector<Matrix> kTsscpps3 = {
    {{6, 6, 6, 3, 3, 3}, {6, 6, 6, 3, 3, 3}, {6, 6, 6, 3, 3, 3},
     {3, 3, 3, 0, 0, 0}, {3, 3, 3, 0, 0, 0}, {3, 3, 3, 0, 0, 0}},
    {{6, 6, 6, 4, 3, 3}, {6, 6, 6, 3, 3, 3}, {6, 6, 5, 3, 3, 2},
     {4, 3, 3, 1, 0, 0}, {3, 3, 3, 0, 0, 0}, {3, 3, 2, 0, 0, 0}},
    {{6, 6, 6, 5, 4, 3}, {6, 6, 5, 3, 3, 2}, {6, 5, 5, 3, 3, 1},
     {5, 3, 3, 1, 1, 0}, {4, 3, 3, 1, 0, 0}, {3, 2, 1, 0, 0, 0}},
    {{6, 6, 6, 5, 4, 3}, {6, 6, 5, 4, 3, 2}, {6, 5, 4, 3, 2, 1},
     {5, 4, 3, 2, 1, 0}, {4, 3, 2, 1, 0, 0}, {3, 2, 1, 0, 0, 0}},
    {{6, 6, 6, 4, 3, 3}, {6, 6, 6, 4, 3, 3}, {6, 6, 4, 3, 2, 2},
     {4, 4, 3, 2, 0, 0}, {3, 3, 2, 0, 0, 0}, {3, 3, 2, 0, 0, 0}},
    {{6, 6, 6, 5, 5, 3}, {6, 5, 5, 3, 3, 1}, {6, 5, 5, 3, 3, 1},
     {5, 3, 3, 1, 1, 0}, {5, 3, 3, 1, 1, 0}, {3, 1, 1, 0, 0, 0}},
    {{6, 6, 6, 5, 5, 3}, {6, 5, 5, 4, 3, 1}, {6, 5, 4, 3, 2, 1},
     {5, 4, 3, 2, 1, 0}, {5, 3, 2, 1, 1, 0}, {3, 1, 1, 0, 0, 0}}};

// 1. The tool reproduces the reference enumerations byte for byte
//    (the order-3 DPP list as a set, the other two in canonical order).
void criterion1() {
  bool ok1 = false, ok2 = false, ok3 = false;
  const auto dpp = cli_lines("enumerate --family dpp --order 3", ok1);
  const std::set<std::string> dpp_expected = {"∅",   "2",   "3",       "3 1",
                                              "3 2", "3 3", "3 3 / 2"};
  const bool dpp_ok =
      ok1 && std::set<std::string>(dpp.begin(), dpp.end()) == dpp_expected &&
      dpp.size() == dpp_expected.size();

  const auto cat = cli_lines("enumerate --family catalan-dpp --order 4", ok2);
  const std::vector<std::string> cat_expected = {
      "∅",     "2",     "3",     "3 1",   "3 2",   "4",     "4 1",
      "4 2",   "4 3",   "4 1 1", "4 2 1", "4 3 1", "4 2 2", "4 3 2"};

  const auto paths = cli_lines("enumerate --family path --order 4", ok3);
  const std::vector<std::string> path_expected = {
      "∅",       "1",       "11",      "11-1",    "1-11",
      "111",     "111-1",   "11-11",   "1-111",   "111-1-1",
      "11-11-1", "1-111-1", "11-1-11", "1-11-11"};

  report(1, "reference enumerations via the CLI (exact)",
         dpp_ok && ok2 && cat == cat_expected && ok3 && paths == path_expected);
}

// 2. Brute-force DPP counts match the product formula up to order 7.
void criterion2() {
  const std::vector<BigInt> expected = {1, 1, 2, 7, 42, 429, 7436, 218348};
  bool ok = true;
  for (int n = 0; n <= 7; ++n) {
    const BigInt formula = product_formula(n);
    if (formula != expected[static_cast<std::size_t>(n)]) ok = false;
    if (count_dpps(n) != formula) ok = false;
  }
  report(2, "dpp counts equal the product formula, orders 0..7 (exact)", ok);
}

// 3. Catalan DPPs are counted by the Catalan numbers, and direct
//    generation matches filtering the full DPP stream.
void criterion3() {
  bool ok = true;
  for (int n = 0; n <= 12; ++n) {
    if (BigInt(enumerate_catalan_dpps(n).size()) != catalan_number(n)) ok = false;
  }
  for (int n = 0; n <= 8; ++n) {
    std::set<std::vector<int>> filtered;
    for_each_dpp(n, [&](const Dpp& d) {
      if (is_catalan_dpp(d)) {
        filtered.insert(d.rows.empty() ? std::vector<int>{} : d.rows[0]);
      }
    });
    std::set<std::vector<int>> direct;
    for (const auto& c : enumerate_catalan_dpps(n)) direct.insert(c.parts);
    if (filtered != direct) ok = false;
  }
  report(3, "catalan dpp counts and filter consistency, orders 0..12 (exact)",
         ok);
}

// 4. The DPP <-> path bijection roundtrips on every object up to order 10.
void criterion4() {
  bool ok = dpp_to_path(CatalanDpp{{4, 3, 2}, 4}).steps ==
                std::vector<int>{1, -1, 1, -1, 1} &&
            path_to_dpp(DppPath{{1, -1, 1, -1, 1}, 4}).parts ==
                std::vector<int>{4, 3, 2};
  for (int n = 0; n <= 10 && ok; ++n) {
    for (const auto& c : enumerate_catalan_dpps(n)) {
      if (!(path_to_dpp(dpp_to_path(c)) == c)) ok = false;
    }
    for (const auto& p : enumerate_paths(n)) {
      if (!(dpp_to_path(path_to_dpp(p)) == p)) ok = false;
    }
  }
  report(4, "bijection roundtrips, orders 0..10 (exact)", ok);
}

// 5. The four generating trees are isomorphic to depth 10 and each level
//    carries exactly the corresponding family.
void criterion5() {
  bool ok = check_isomorphism(10).all_pass;
  if (ok) {
    for (const auto& r : verify::trees_suite(10)) ok = ok && r.pass;
  }
  report(5, "four trees isomorphic with matching labels, depth 10 (exact)", ok);
}

// 6. Succession rules: the worked child list, the sibling-position law in
//    the path tree, and the head-gap child count on catalan dpps.
void criterion6() {
  auto kids = dpp_children(CatalanDpp{{6, 4, 2, 2}, 6});
  bool ok = kids.size() == 3 &&
            kids[0].parts == std::vector<int>{7, 6, 4, 2, 2} &&
            kids[1].parts == std::vector<int>{7, 5, 4, 2, 2} &&
            kids[2].parts == std::vector<int>{7, 4, 4, 2, 2};

  const auto levels = build_levels(TreeKind::Path, 10);
  if (levels[0].child_counts[0] != 1) ok = false;
  for (std::size_t d = 1; d < levels.size() && ok; ++d) {
    const auto& lvl = levels[d];
    int position = 0;
    for (std::size_t i = 0; i < lvl.labels.size(); ++i) {
      position = (i > 0 && lvl.parent_index[i] == lvl.parent_index[i - 1])
                     ? position + 1
                     : 1;
      if (lvl.child_counts[i] != position + 1) ok = false;
    }
  }

  for (int n = 0; n <= 9 && ok; ++n) {
    for (const auto& c : enumerate_catalan_dpps(n)) {
      if (c.parts.size() >= 2 &&
          static_cast<int>(dpp_children(c).size()) !=
              c.parts[0] + 1 - c.parts[1]) {
        ok = false;
      }
    }
  }
  report(6, "succession rules and child-count laws, depth 10 (exact)", ok);
}

// 7. The sum-of-entries polynomial equals the q-analogue of the product
//    formula, coefficient by coefficient.
void criterion7() {
  const QPolynomial p3{{BigInt(1), BigInt(0), BigInt(1), BigInt(1), BigInt(1),
                        BigInt(1), BigInt(1), BigInt(0), BigInt(1)}};
  bool ok = dpp_generating_polynomial(3) == p3 && q_product_formula(3) == p3;
  for (int n = 0; n <= 5; ++n) {
    if (!(dpp_generating_polynomial(n) == q_product_formula(n))) ok = false;
    if (q_product_formula(n).eval_at_one() != product_formula(n)) ok = false;
  }
  report(7, "generating polynomial equals the q-product, orders 0..5 (exact)",
         ok);
}

// 8. Cross-family checks: ASMs, monotone triangles, diagonal sequences,
//    and TSSCPPs all line up with their formulas and reference sets.
void criterion8() {
  bool ok = true;
  for (int n = 0; n <= 5; ++n) {
    const auto asms = enumerate_asms(n);
    if (BigInt(asms.size()) != product_formula(n)) ok = false;
    for (const auto& a : asms) {
      if (!(monotone_to_asm(asm_to_monotone(a)) == a)) ok = false;
    }
  }
  {
    std::set<Matrix> got;
    for (const auto& a : enumerate_asms(3)) got.insert(a.entries);
    if (got != std::set<Matrix>(kAsms3.begin(), kAsms3.end())) ok = false;
  }
  for (int n = 0; n <= 12; ++n) {
    const BigInt cn = catalan_number(n);
    if (BigInt(enumerate_diagonals(n, DiagonalFlavor::Monotone).size()) != cn)
      ok = false;
    if (BigInt(enumerate_diagonals(n, DiagonalFlavor::Magog).size()) != cn)
      ok = false;
  }
  for (int n = 0; n <= 3; ++n) {
    if (BigInt(enumerate_tsscpps(n).size()) != product_formula(n)) ok = false;
  }
  {
    std::set<Matrix> got;
    for (const auto& b : enumerate_tsscpps(3)) got.insert(b.heights);
    if (got != std::set<Matrix>(kTsscpps3.begin(), kTsscpps3.end())) ok = false;
  }
  report(8, "asm / triangle / diagonal / tsscpp cross checks (exact)", ok);
}

// 9. The parent map inverts the child rule on every path up to order 10.
void criterion9() {
  bool ok = path_parent(DppPath{{}, 1}).steps.empty();
  for (int n = 1; n <= 10 && ok; ++n) {
    for (const auto& p : enumerate_paths(n)) {
      if (p.steps.empty()) continue;
      const DppPath parent = path_parent(p);
      const auto siblings = path_children(parent, true);
      if (std::none_of(siblings.begin(), siblings.end(), [&](const DppPath& s) {
            return s.steps == p.steps;
          })) {
        ok = false;
      }
    }
  }
  report(9, "parent map inverts the child rule, orders 0..10 (exact)", ok);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
