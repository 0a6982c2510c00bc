#ifndef ICETAB_TESTS_FIXTURES_HPP
#define ICETAB_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "icetab/bijection.hpp"
#include "icetab/ice.hpp"
#include "icetab/tableaux.hpp"
#include "icetab/uasm.hpp"

namespace fixtures {

using namespace icetab;

inline ShiftedTableau make_shifted(std::vector<int> shape, int n,
                                   std::vector<std::vector<int>> rows) {
  ShiftedTableau st;
  st.shape = StrictPartition(std::move(shape));
  st.n = n;
  for (auto& row : rows) {
    std::vector<Entry> r;
    for (int code : row) r.push_back(Entry::from_code(code));
    st.rows.push_back(std::move(r));
  }
  return st;
}

inline OrdinaryTableau make_ordinary(std::vector<int> shape, int n,
                                     std::vector<std::vector<int>> rows) {
  OrdinaryTableau t;
  t.shape = Partition(std::move(shape));
  t.n = n;
  for (auto& row : rows) {
    std::vector<Entry> r;
    for (int code : row) r.push_back(Entry::from_code(code));
    t.rows.push_back(std::move(r));
  }
  return t;
}

inline MuUASM make_uasm(std::vector<int> mu, int n, IntMatrix cells) {
  return MuUASM{StrictPartition(std::move(mu)), n, std::move(cells)};
}

inline SignatureMatrix make_signature(std::vector<int> mu, int n,
                                      std::vector<std::string> rows) {
  SignatureMatrix sm{StrictPartition(std::move(mu)), n, {}};
  for (const auto& row : rows) {
    std::vector<Sign> r;
    for (char c : row) r.push_back(c == '+' ? Sign::plus : Sign::minus);
    sm.cells.push_back(std::move(r));
  }
  return sm;
}

inline ConfigMatrix make_config(std::vector<int> mu, int n,
                                std::vector<std::vector<std::string>> rows) {
  ConfigMatrix cm{StrictPartition(std::move(mu)), n, {}};
  for (const auto& row : rows) {
    std::vector<VertexType> r;
    for (const auto& name : row) r.push_back(*vertex_from_name(name));
    cm.cells.push_back(std::move(r));
  }
  return cm;
}

// The worked 10x9 example with mu = (9,7,6,2,1), n = 5, in all four
// encodings. Every map sends one to the next.
inline ShiftedTableau running_tableau() {
  return make_shifted({9, 7, 6, 2, 1}, 5,
                      {{-1, 1, -2, 2, -3, -3, -4, 4, 5},
                       {-2, -2, 2, 3, -4, -4, 4},
                       {3, -4, 4, 4, 4, 4},
                       {4, 4},
                       {-5}});
}

inline std::vector<std::string> running_signature_rows() {
  return {
      "--------+",
      "+--------",
      "++++++++-",
      "-+--+++--",
      "+--+-----",
      "----++---",
      "--++-----",
      "+++------",
      "-+-------",
      "+--------",
  };
}

inline SignatureMatrix running_signature() {
  return make_signature({9, 7, 6, 2, 1}, 5, running_signature_rows());
}

inline MuUASM running_uasm() {
  return make_uasm({9, 7, 6, 2, 1}, 5,
                   {{0, 0, 0, 0, 0, 0, 0, -1, 1},
                    {1, 0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1, 0},
                    {-1, 1, 0, -1, 0, 0, 1, 0, 0},
                    {1, 0, -1, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, -1, 0, 1, 0, 0, 0},
                    {0, -1, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0, 0, 0, 0, 0},
                    {-1, 1, 0, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0, 0}});
}

inline ConfigMatrix running_config() {
  return make_config(
      {9, 7, 6, 2, 1}, 5,
      {{"NW", "NW", "SW", "SW", "SW", "NW", "NW", "NS", "WE"},
       {"WE", "NW", "SW", "SW", "SW", "NW", "NW", "NW", "SW"},
       {"SE", "NE", "SE", "SE", "SE", "NE", "NE", "WE", "SW"},
       {"NS", "WE", "SW", "NS", "SE", "NE", "WE", "SW", "SW"},
       {"WE", "SW", "NS", "WE", "SW", "NW", "SW", "SW", "SW"},
       {"SW", "SW", "NW", "NS", "SE", "WE", "SW", "SW", "SW"},
       {"SW", "NS", "NE", "WE", "SW", "SW", "SW", "SW", "SW"},
       {"SE", "NE", "WE", "SW", "SW", "SW", "SW", "SW", "SW"},
       {"NS", "WE", "SW", "SW", "SW", "SW", "SW", "SW", "SW"},
       {"WE", "SW", "SW", "SW", "SW", "SW", "SW", "SW", "SW"}});
}

// 6x3 staircase example with mu = (3,2,1).
inline MuUASM small_staircase_uasm() {
  return make_uasm({3, 2, 1}, 3,
                   {{1, 0, 0},
                    {-1, 1, 0},
                    {0, -1, 1},
                    {1, 0, 0},
                    {0, 1, 0},
                    {0, 0, 0}});
}

// 4x4 alternating sign matrix example.
inline IntMatrix small_asm() {
  return {{0, 1, 0, 0}, {1, -1, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
}

// Ordinary sp(10) tableau of shape (4,3,3) with bar = 4 and x-weight
// x1^-1 x2^3 x4^2 x5^-2.
inline OrdinaryTableau ordinary_example() {
  return make_ordinary({4, 3, 3}, 5, {{-1, -1, 1, 2}, {2, 2, 4}, {4, -5, -5}});
}

// All strict shapes with largest part <= 4 and exactly n parts, n <= 3;
// the exhaustive cross-check grid.
inline std::vector<StrictPartition> desk_grid() {
  std::vector<StrictPartition> grid;
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::vector<int>> stack{{m}};
    while (!stack.empty()) {
      std::vector<int> cur = stack.back();
      stack.pop_back();
      if (static_cast<int>(cur.size()) <= 3) grid.emplace_back(cur);
      if (static_cast<int>(cur.size()) < 3) {
        for (int next = cur.back() - 1; next >= 1; --next) {
          auto ext = cur;
          ext.push_back(next);
          stack.push_back(std::move(ext));
        }
      }
    }
  }
  return grid;
}

}  // namespace fixtures

#endif
