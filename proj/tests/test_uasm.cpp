#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "icetab/tableaux.hpp"
#include "icetab/uasm.hpp"

using namespace icetab;
using namespace fixtures;

TEST_CASE("the running example and the 6x3 staircase example are valid") {
  CHECK(validate_uasm(running_uasm()).ok());
  CHECK(validate_uasm(small_staircase_uasm()).ok());
}

TEST_CASE("pair-sum and column-sum violations") {
  ValidationReport r =
      validate_uasm({{1}, {1}}, StrictPartition{1}, 1);
  REQUIRE(!r.ok());
  std::set<std::string> rules;
  for (const auto& v : r.violations()) rules.insert(v.rule);
  CHECK(rules.count("pair-sum"));
  CHECK(rules.count("column-sum"));
}

TEST_CASE("dimension mismatch reported before rules") {
  ValidationReport r = validate_uasm({{1, 0}}, StrictPartition{2}, 1);
  REQUIRE(!r.ok());
  CHECK(r.has_structural());
  CHECK(r.violations().size() == 1);
}

TEST_CASE("ordinary alternating sign matrices") {
  CHECK(validate_ordinary_asm(small_asm()).ok());
  CHECK(validate_ordinary_asm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).ok());
  CHECK(!validate_ordinary_asm({{1, -1}, {0, 1}}).ok());
}

TEST_CASE("okada matrices") {
  StrictPartition mu{3, 1};
  CHECK(validate_okada_asm({{1, -1, 1}, {0, 1, 0}}, mu, 2).ok());
  CHECK(validate_okada_asm({{0, 0, 1}, {1, 0, 0}}, mu, 2).ok());
  // column 2 read from the bottom starts with -1
  CHECK(!validate_okada_asm({{0, 1, 0}, {1, -1, 1}}, mu, 2).ok());
  // column sums 1 in the wrong columns
  CHECK(!validate_okada_asm({{1, 0, 0}, {0, 1, 0}}, mu, 2).ok());
  ValidationReport r = validate_okada_asm({{0}}, StrictPartition{1}, 1);
  REQUIRE(!r.ok());
  bool row_sum = false;
  for (const auto& v : r.violations())
    if (v.rule == "row-sum") row_sum = true;
  CHECK(row_sum);
}

TEST_CASE("signature of the running example") {
  SignatureMatrix sm = to_signature(running_uasm());
  CHECK(sm == running_signature());
}

TEST_CASE("signature rows on edge patterns") {
  MuUASM zero_row = make_uasm({2, 1}, 2,
                              {{0, 0}, {1, 0}, {0, 1}, {0, 0}});
  SignatureMatrix sm = to_signature(zero_row);
  CHECK(sm.cells[3] == std::vector<Sign>{Sign::minus, Sign::minus});

  MuUASM tiny = make_uasm({1}, 1, {{0}, {1}});
  CHECK(to_signature(tiny).cells[0] == std::vector<Sign>{Sign::minus});
}

TEST_CASE("signature_to_cells undoes to_signature") {
  CHECK(signature_to_cells(running_signature()) == running_uasm().cells);

  SignatureMatrix rows = make_signature({2}, 1, {"++-", "-+"});
  IntMatrix cells = signature_to_cells(rows);
  CHECK(cells[0] == std::vector<int>{0, 1, 0});
  CHECK(cells[1] == std::vector<int>{-1, 1});
}

TEST_CASE("statistics of the running example") {
  UasmStats s = uasm_stats(running_uasm());
  CHECK(s.neg == 7);
  CHECK(s.bar == 11);
  CHECK(s.ssi == 7);
  CHECK(s.m_unbarred == std::vector<int>{1, 2, 2, 8, 1});
  CHECK(s.m_barred == std::vector<int>{1, 3, 2, 4, 1});
}

TEST_CASE("statistics of the smallest matrices") {
  UasmStats s = uasm_stats(make_uasm({1}, 1, {{1}, {0}}));
  CHECK(s.neg == 0);
  CHECK(s.bar == 0);
  CHECK(s.ssi == 0);
  CHECK(s.m_unbarred == std::vector<int>{1});
  CHECK(s.m_barred == std::vector<int>{0});
}

TEST_CASE("weights of the running example") {
  MuUASM ua = running_uasm();
  CHECK(x_weight_uasm(ua) == LaurentPoly::x(5, 2, -1) * LaurentPoly::x(5, 4, 4));
  LaurentPoly one_plus_t = LaurentPoly::one(5) + LaurentPoly::t(5);
  CHECK(t_weight_uasm(ua) == LaurentPoly::t(5, 18) * one_plus_t.pow(7));

  MuUASM tiny = make_uasm({1}, 1, {{1}, {0}});
  CHECK(x_weight_uasm(tiny) == LaurentPoly::x(1, 1));
  CHECK(t_weight_uasm(tiny) == LaurentPoly::one(1));
}

TEST_CASE("brute force smallest shapes") {
  auto two = brute_force_uasms(StrictPartition{1}, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].cells == IntMatrix{{0}, {1}});
  CHECK(two[1].cells == IntMatrix{{1}, {0}});

  CHECK(brute_force_uasms(StrictPartition{2}, 1).size() == 3);
  CHECK(brute_force_uasms(StrictPartition{2, 1}, 2).size() == 12);
}

TEST_CASE("brute force respects the size bound") {
  CHECK_THROWS_AS(brute_force_uasms(StrictPartition{9, 7, 6, 2, 1}, 5),
                  SizeLimit);
}

TEST_CASE("brute-forced matrices are valid, distinct, canonically ordered") {
  for (const StrictPartition& mu : desk_grid()) {
    auto all = brute_force_uasms(mu, mu.n());
    std::set<IntMatrix> seen;
    for (const auto& ua : all) {
      CHECK(validate_uasm(ua).ok());
      CHECK(seen.insert(ua.cells).second);
    }
    auto it = seen.begin();
    for (const auto& ua : all) CHECK(ua.cells == *it++);
  }
}

TEST_CASE("alternation restated: non-zeros alternate ending in 1") {
  for (const StrictPartition& mu : desk_grid()) {
    if (mu.m() > 3) continue;
    for (const auto& ua : brute_force_uasms(mu, mu.n())) {
      for (int i = 0; i < ua.rows(); ++i) {
        int expect = 1;
        for (int q = ua.cols() - 1; q >= 0; --q) {
          if (ua.cells[i][q] == 0) continue;
          CHECK(ua.cells[i][q] == expect);
          expect = -expect;
        }
      }
      for (int q = 0; q < ua.cols(); ++q) {
        int expect = 1;
        for (int i = ua.rows() - 1; i >= 0; --i) {
          if (ua.cells[i][q] == 0) continue;
          CHECK(ua.cells[i][q] == expect);
          expect = -expect;
        }
      }
    }
  }
}

TEST_CASE("signature round-trip and bar identity on the grid") {
  for (const StrictPartition& mu : desk_grid()) {
    if (mu.m() > 3) continue;
    for (const auto& ua : brute_force_uasms(mu, mu.n())) {
      CHECK(signature_to_cells(to_signature(ua)) == ua.cells);
      UasmStats s = uasm_stats(ua);
      int neg = 0, barred_sum = 0;
      for (const auto& row : ua.cells)
        for (int v : row) neg += (v == -1);
      for (int c : s.m_barred) barred_sum += c;
      CHECK(s.neg == neg);
      CHECK(s.bar == barred_sum);
    }
  }
}

TEST_CASE("brute-force cardinalities match the tableau counts") {
  for (const StrictPartition& mu : desk_grid())
    CHECK(brute_force_uasms(mu, mu.n()).size() ==
          generate_shifted(mu, mu.n()).size());
}

TEST_CASE("ordinary ASM enumeration matches the famous counts") {
  const std::size_t expected[] = {1, 2, 7};
  for (int n = 1; n <= 3; ++n) {
    auto all = brute_force_ordinary_asms(n);
    CHECK(all.size() == expected[n - 1]);
    for (const auto& cells : all) CHECK(validate_ordinary_asm(cells).ok());
  }
}
