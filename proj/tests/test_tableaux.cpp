#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "icetab/charpoly.hpp"
#include "icetab/tableaux.hpp"

using namespace icetab;
using namespace fixtures;

TEST_CASE("the running tableau is valid") {
  CHECK(validate_shifted(running_tableau()).ok());
}

TEST_CASE("profile rule violations are reported") {
  // single box holding 2 cannot start row 1
  ShiftedTableau st = make_shifted({1}, 1, {{2}});
  st.n = 1;
  ValidationReport r = validate_shifted(st);
  CHECK(!r.ok());

  ShiftedTableau st2 = make_shifted({2, 1}, 2, {{2, 2}, {-2}});
  ValidationReport r2 = validate_shifted(st2);
  REQUIRE(!r2.ok());
  CHECK(r2.first()->rule == "profile");
  CHECK(r2.first()->row == 1);
  CHECK(r2.first()->col == 1);
}

TEST_CASE("equal entries on a diagonal are rejected") {
  ShiftedTableau st = make_shifted({2, 1}, 2, {{1, 1}, {1}});
  ValidationReport r = validate_shifted(st);
  REQUIRE(!r.ok());
  bool diag = false, profile = false;
  for (const auto& v : r.violations()) {
    if (v.rule == "diagonal-strict") diag = true;
    if (v.rule == "profile") profile = true;
  }
  CHECK(diag);
  CHECK(profile);  // row 2 must start with 2 or 2'
}

TEST_CASE("structural mismatch is distinguished from rule violations") {
  ShiftedTableau st = make_shifted({2, 1}, 2, {{1, 1}});
  ValidationReport r = validate_shifted(st);
  CHECK(!r.ok());
  CHECK(r.has_structural());
}

TEST_CASE("generate_shifted smallest shapes") {
  auto one = generate_shifted(StrictPartition{1}, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == make_shifted({1}, 1, {{-1}}));
  CHECK(one[1] == make_shifted({1}, 1, {{1}}));

  auto row2 = generate_shifted(StrictPartition{2}, 1);
  REQUIRE(row2.size() == 3);
  CHECK(row2[0] == make_shifted({2}, 1, {{-1, -1}}));
  CHECK(row2[1] == make_shifted({2}, 1, {{-1, 1}}));
  CHECK(row2[2] == make_shifted({2}, 1, {{1, 1}}));

  CHECK(generate_shifted(StrictPartition{2, 1}, 2).size() == 12);
  CHECK_THROWS_AS(generate_shifted(StrictPartition{2, 1}, 3), InvalidInput);
}

TEST_CASE("generated tableaux are valid, distinct and canonically ordered") {
  for (const StrictPartition& mu : desk_grid()) {
    auto all = generate_shifted(mu, mu.n());
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& st : all) {
      CHECK(validate_shifted(st).ok());
      std::vector<std::vector<int>> key;
      for (const auto& row : st.rows) {
        std::vector<int> r;
        for (Entry e : row) r.push_back(e.ordinal());
        key.push_back(std::move(r));
      }
      CHECK(seen.insert(key).second);  // no duplicates
    }
    // row-major lexicographic emission
    auto sorted = seen;
    auto it = sorted.begin();
    for (const auto& st : all) {
      std::vector<std::vector<int>> key;
      for (const auto& row : st.rows) {
        std::vector<int> r;
        for (Entry e : row) r.push_back(e.ordinal());
        key.push_back(std::move(r));
      }
      CHECK(key == *it);
      ++it;
    }
  }
}

TEST_CASE("ribbon strips of the running tableau") {
  ShiftedTableau st = running_tableau();
  RibbonStrip s4 = ribbon_strip(st, Entry::unbarred(4));
  CHECK(s4.boxes.size() == 8);
  CHECK(s4.components.size() == 1);
  CHECK(s4.distinct_diagonals());

  RibbonStrip s4bar = ribbon_strip(st, Entry::barred(4));
  CHECK(s4bar.boxes.size() == 4);
  CHECK(s4bar.components.size() == 2);
  CHECK(s4bar.distinct_diagonals());

  RibbonStrip empty = ribbon_strip(make_shifted({1}, 1, {{1}}), Entry::unbarred(2));
  CHECK(empty.boxes.empty());
  CHECK(empty.components.empty());
}

TEST_CASE("strips partition the boxes") {
  for (const StrictPartition& mu : desk_grid()) {
    if (mu.m() > 3) continue;
    for (const auto& st : generate_shifted(mu, mu.n())) {
      int total = 0;
      for (int ord = 1; ord <= 2 * st.n; ++ord) {
        RibbonStrip strip = ribbon_strip(st, Entry::from_ordinal(ord));
        CHECK(strip.distinct_diagonals());
        total += static_cast<int>(strip.boxes.size());
        std::size_t in_components = 0;
        for (const auto& comp : strip.components) in_components += comp.size();
        CHECK(in_components == strip.boxes.size());
      }
      CHECK(total == mu.weight());
    }
  }
}

TEST_CASE("statistics of the running tableau") {
  TableauStats s = shifted_stats(running_tableau());
  CHECK(s.m_unbarred == std::vector<int>{1, 2, 2, 8, 1});
  CHECK(s.m_barred == std::vector<int>{1, 3, 2, 4, 1});
  CHECK(s.bar == 11);
  CHECK(s.var == 7);
  CHECK(s.str == 12);
}

TEST_CASE("statistics of single boxes") {
  TableauStats s = shifted_stats(make_shifted({1}, 1, {{-1}}));
  CHECK(s.bar == 1);
  CHECK(s.str == 1);
  CHECK(s.var == 0);
}

TEST_CASE("x-weight") {
  LaurentPoly w = x_weight_shifted(running_tableau());
  CHECK(w == LaurentPoly::x(5, 2, -1) * LaurentPoly::x(5, 4, 4));
  CHECK(x_weight_shifted(make_shifted({1}, 1, {{1}})) == LaurentPoly::x(1, 1));
  CHECK(x_weight_shifted(make_shifted({2}, 1, {{-1, 1}})) == LaurentPoly::one(1));
}

TEST_CASE("t-weight of the running tableau") {
  LaurentPoly one_plus_t = LaurentPoly::one(5) + LaurentPoly::t(5);
  CHECK(t_weight_shifted(running_tableau()) ==
        LaurentPoly::t(5, 18) * one_plus_t.pow(7));
}

TEST_CASE("t-weight of single boxes") {
  CHECK(t_weight_shifted(make_shifted({1}, 1, {{1}})) == LaurentPoly::one(1));
  CHECK(t_weight_shifted(make_shifted({1}, 1, {{-1}})) == LaurentPoly::t(1));
}

TEST_CASE("entrywise t-weight equals its closed form everywhere") {
  // t_weight_shifted throws if the two computations ever disagree
  for (const StrictPartition& mu : desk_grid())
    for (const auto& st : generate_shifted(mu, mu.n()))
      CHECK_NOTHROW(t_weight_shifted(st));
}

TEST_CASE("shifted staircase counts match the closed U-turn counts") {
  const long long expected[] = {2, 12, 208, 10336};
  for (int n = 1; n <= 3; ++n)
    CHECK(generate_shifted(staircase(n), n).size() ==
          static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("ordinary tableau validation") {
  CHECK(validate_ordinary(ordinary_example()).ok());

  OrdinaryTableau bad_col = make_ordinary({1, 1}, 2, {{2}, {2}});
  ValidationReport r = validate_ordinary(bad_col);
  REQUIRE(!r.ok());
  CHECK(r.first()->rule == "column-strict");

  OrdinaryTableau bad_start = make_ordinary({1, 1}, 2, {{-1}, {1}});
  ValidationReport r2 = validate_ordinary(bad_start);
  REQUIRE(!r2.ok());
  CHECK(r2.first()->rule == "row-start-bound");
  CHECK(r2.first()->row == 2);
}

TEST_CASE("generate_ordinary small cases") {
  auto two = generate_ordinary(Partition{1}, 1);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == make_ordinary({1}, 1, {{-1}}));
  CHECK(two[1] == make_ordinary({1}, 1, {{1}}));

  CHECK(generate_ordinary(Partition{1}, 2).size() == 4);
  CHECK(generate_ordinary(Partition{}, 3).size() == 1);
  CHECK_THROWS_AS(generate_ordinary(Partition{1, 1}, 1), InvalidInput);
}

TEST_CASE("generated ordinary tableaux are valid and match the dimension") {
  std::vector<Partition> lams = {{},     {1},    {2},    {1, 1},      {3},
                                 {2, 1}, {1, 1, 1}, {4},  {3, 1},     {2, 2},
                                 {2, 1, 1}, {1, 1, 1, 1}};
  for (const auto& lam : lams) {
    for (int n = 1; n <= 3; ++n) {
      if (lam.length() > n) continue;
      auto all = generate_ordinary(lam, n);
      std::set<std::vector<std::vector<int>>> seen;
      for (const auto& t : all) {
        CHECK(validate_ordinary(t).ok());
        std::vector<std::vector<int>> key;
        for (const auto& row : t.rows) {
          std::vector<int> r;
          for (Entry e : row) r.push_back(e.code());
          key.push_back(std::move(r));
        }
        CHECK(seen.insert(key).second);
      }
      CHECK(BigInt(all.size()) == sp_dimension(lam, n));
    }
  }
}

TEST_CASE("ordinary stats and weights") {
  OrdinaryTableau t = ordinary_example();
  TableauStats s = ordinary_stats(t);
  CHECK(s.bar == 4);
  CHECK(x_weight_ordinary(t) ==
        LaurentPoly::x(5, 1, -1) * LaurentPoly::x(5, 2, 3) *
            LaurentPoly::x(5, 4, 2) * LaurentPoly::x(5, 5, -2));

  OrdinaryTableau empty = make_ordinary({}, 2, {});
  CHECK(ordinary_stats(empty).bar == 0);
  CHECK(x_weight_ordinary(empty) == LaurentPoly::one(2));

  OrdinaryTableau barred = make_ordinary({1}, 1, {{-1}});
  CHECK(ordinary_stats(barred).bar == 1);
  CHECK(x_weight_ordinary(barred) == LaurentPoly::x(1, 1, -1));
}
