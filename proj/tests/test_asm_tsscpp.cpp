#include <catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "catdpp/asm_triangle.hpp"
#include "catdpp/catalan.hpp"
#include "catdpp/dpp.hpp"
#include "catdpp/tsscpp.hpp"

using namespace catdpp;

namespace {

using Matrix = std::vector<std::vector<int>>;

const Matrix kAsm6 = {{0, 0, 0, 1, 0, 0},  {0, 1, 0, -1, 0, 1},
                      {1, -1, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 0},
                      {0, 0, 1, 0, 0, 0},  {0, 0, 0, 1, 0, 0}};

const Matrix kTriangle6 = {{4},
                           {2, 6},
                           {1, 5, 6},
                           {1, 2, 5, 6},
                           {1, 2, 3, 5, 6},
                           {1, 2, 3, 4, 5, 6}};

const std::vector<Matrix> kAsms3 = {
    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},  {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
    {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},  {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}},
    {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},  {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
    {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};

// The seven TSSCPPs in the 6-cube as height arrays (zero-padded rows).
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

}  // namespace

TEST_CASE("validate_asm") {
  CHECK(validate_asm(kAsm6).ok());
  for (const auto& m : kAsms3) CHECK(validate_asm(m).ok());
  CHECK(validate_asm({{1, 0}, {0, 1}}).ok());

  auto bad_entry = validate_asm({{2, -1}, {-1, 2}});
  REQUIRE_FALSE(bad_entry.ok());
  CHECK(bad_entry.violation().code == "BadEntry");

  auto row_sum = validate_asm({{1, 1}, {0, 0}});
  REQUIRE_FALSE(row_sum.ok());
  CHECK(row_sum.violation().code == "SignAlternation");

  // A doubled column violates alternation before its sum is checked.
  auto repeat = validate_asm({{1, 0}, {1, 0}});
  REQUIRE_FALSE(repeat.ok());
  CHECK(repeat.violation().code == "SignAlternation");

  auto bad_row_sum = validate_asm({{0, 1}, {1, -1}});
  REQUIRE_FALSE(bad_row_sum.ok());
  CHECK(bad_row_sum.violation().code == "RowSum");

  // Rows are fine, but the first column sums to zero.
  auto col_sum = validate_asm({{0, 1, 0}, {0, 0, 1}, {0, 1, 0}});
  REQUIRE_FALSE(col_sum.ok());
  CHECK(col_sum.violation().code == "ColSum");

  auto alt = validate_asm({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
  CHECK(alt.ok());
  auto not_alt = validate_asm({{1, 0, 0}, {-1, 1, 1}, {1, 0, 0}});
  REQUIRE_FALSE(not_alt.ok());
}

TEST_CASE("asm <-> monotone triangle on the worked example") {
  const Asm a{kAsm6};
  CHECK(asm_to_monotone(a).rows == kTriangle6);
  CHECK(monotone_to_asm(MonotoneTriangle{kTriangle6}) == a);

  // Identity maps to the staircase triangle.
  Matrix id(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  const auto t = asm_to_monotone(Asm{id});
  for (int i = 0; i < 4; ++i) {
    std::vector<int> expect;
    for (int j = 1; j <= i + 1; ++j) expect.push_back(j);
    CHECK(t.rows[static_cast<std::size_t>(i)] == expect);
  }
}

TEST_CASE("asm enumeration counts and the order-3 set") {
  CHECK(enumerate_asms(0).size() == 1);
  CHECK(enumerate_asms(1).size() == 1);
  CHECK(enumerate_asms(1)[0].entries == Matrix{{1}});
  CHECK(enumerate_asms(2).size() == 2);

  const auto asms = enumerate_asms(3);
  REQUIRE(asms.size() == 7);
  std::set<Matrix> got;
  for (const auto& a : asms) {
    CHECK(validate_asm(a.entries).ok());
    got.insert(a.entries);
  }
  std::set<Matrix> expected(kAsms3.begin(), kAsms3.end());
  CHECK(got == expected);

  for (int n = 4; n <= 5; ++n) {
    CHECK(BigInt(enumerate_asms(n).size()) == product_formula(n));
  }
  CHECK_THROWS_AS(enumerate_asms(7), OrderTooLarge);
}

TEST_CASE("roundtrip over every enumerated asm") {
  for (int n = 1; n <= 4; ++n) {
    std::set<Matrix> distinct;
    for (const auto& a : enumerate_asms(n)) {
      CHECK(monotone_to_asm(asm_to_monotone(a)) == a);
      distinct.insert(a.entries);
    }
    CHECK(BigInt(distinct.size()) == product_formula(n));
  }
}

TEST_CASE("diagonal sequences") {
  const auto mono3 = enumerate_diagonals(3, DiagonalFlavor::Monotone);
  std::vector<std::vector<int>> expected = {
      {1, 2, 3}, {1, 3, 3}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
  REQUIRE(mono3.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(mono3[i].values == expected[i]);
  }

  CHECK(enumerate_diagonals(1, DiagonalFlavor::Monotone).size() == 1);
  CHECK(enumerate_diagonals(1, DiagonalFlavor::Magog).size() == 1);
  CHECK(enumerate_diagonals(4, DiagonalFlavor::Magog).size() == 14);

  // Brute-force oracle over all n^n candidate sequences.
  for (int n = 1; n <= 6; ++n) {
    for (auto flavor : {DiagonalFlavor::Monotone, DiagonalFlavor::Magog}) {
      std::set<std::vector<int>> brute;
      std::vector<int> x(static_cast<std::size_t>(n), 1);
      while (true) {
        if (is_valid_diagonal(x, n, flavor)) brute.insert(x);
        int i = n - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == n) {
          x[static_cast<std::size_t>(i)] = 1;
          --i;
        }
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
      }
      std::set<std::vector<int>> fast;
      for (const auto& d : enumerate_diagonals(n, flavor)) fast.insert(d.values);
      CHECK(fast == brute);
      CHECK(BigInt(brute.size()) == catalan_number(n));
    }
  }
}

TEST_CASE("triangle diagonals are monotone sequences") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_monotone_triangles(n)) {
      CHECK(is_valid_diagonal(nw_se_diagonal(t), n, DiagonalFlavor::Monotone));
    }
  }
}

TEST_CASE("validate_tsscpp") {
  for (const auto& h : kTsscpps3) CHECK(validate_tsscpp(h, 3).ok());

  auto shape = validate_tsscpp({{1, 0}, {1}}, 1);
  REQUIRE_FALSE(shape.ok());
  CHECK(shape.violation().code == "NotPlanePartition");

  // Symmetric and a plane partition, but not self-complementary.
  auto full = validate_tsscpp(Matrix(2, std::vector<int>(2, 2)), 1);
  REQUIRE_FALSE(full.ok());
  CHECK(full.violation().code == "NotSelfComplementary");

  // Self-complementary but not totally symmetric.
  auto asym = validate_tsscpp({{2, 2}, {0, 0}}, 1);
  REQUIRE_FALSE(asym.ok());
  CHECK(asym.violation().code == "NotTotallySymmetric");
}

TEST_CASE("tsscpp enumeration") {
  CHECK(enumerate_tsscpps(0).size() == 1);

  const auto one = enumerate_tsscpps(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].heights == Matrix{{2, 1}, {1, 0}});

  CHECK(enumerate_tsscpps(2).size() == 2);

  const auto three = enumerate_tsscpps(3);
  REQUIRE(three.size() == 7);
  std::set<Matrix> got;
  for (const auto& b : three) got.insert(b.heights);
  CHECK(got == std::set<Matrix>(kTsscpps3.begin(), kTsscpps3.end()));

  CHECK_THROWS_AS(enumerate_tsscpps(4), OrderTooLarge);
}
