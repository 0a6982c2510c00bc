#include "icetab/uasm.hpp"

#include <algorithm>

#include "icetab/threads.hpp"

namespace icetab {

namespace {

bool check_dims(const IntMatrix& cells, int rows, int cols,
                ValidationReport& r) {
  if (static_cast<int>(cells.size()) != rows) {
    r.add(ViolationKind::structure, "dimensions", 0, 0,
          "expected " + std::to_string(rows) + " rows, got " +
              std::to_string(cells.size()));
    return false;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (static_cast<int>(cells[i].size()) != cols) {
      r.add(ViolationKind::structure, "dimensions", static_cast<int>(i + 1), 0,
            "expected " + std::to_string(cols) + " columns");
      return false;
    }
  }
  return true;
}

void check_entry_range(const IntMatrix& cells, ValidationReport& r) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t q = 0; q < cells[i].size(); ++q)
      if (cells[i][q] < -1 || cells[i][q] > 1)
        r.add(ViolationKind::rule, "entry-range", static_cast<int>(i + 1),
              static_cast<int>(q + 1),
              "entry " + std::to_string(cells[i][q]));
}

// Right-to-left partial sums of each row stay in {0,1}; one violation per
// row, at the first offending column.
void check_row_alternation(const IntMatrix& cells, ValidationReport& r) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    int sum = 0;
    for (int q = static_cast<int>(cells[i].size()) - 1; q >= 0; --q) {
      sum += cells[i][q];
      if (sum < 0 || sum > 1) {
        r.add(ViolationKind::rule, "row-alternation", static_cast<int>(i + 1),
              q + 1, "partial sum " + std::to_string(sum));
        break;
      }
    }
  }
}

void check_column_alternation(const IntMatrix& cells, ValidationReport& r) {
  if (cells.empty()) return;
  for (std::size_t q = 0; q < cells[0].size(); ++q) {
    int sum = 0;
    for (int i = static_cast<int>(cells.size()) - 1; i >= 0; --i) {
      sum += cells[i][q];
      if (sum < 0 || sum > 1) {
        r.add(ViolationKind::rule, "column-alternation", i + 1,
              static_cast<int>(q + 1), "partial sum " + std::to_string(sum));
        break;
      }
    }
  }
}

void check_column_sums(const IntMatrix& cells, const StrictPartition& mu,
                       ValidationReport& r) {
  if (cells.empty()) return;
  for (std::size_t q = 0; q < cells[0].size(); ++q) {
    int sum = 0;
    for (const auto& row : cells) sum += row[q];
    int want = mu.has_part(static_cast<int>(q + 1)) ? 1 : 0;
    if (sum != want)
      r.add(ViolationKind::rule, "column-sum", 0, static_cast<int>(q + 1),
            "sum " + std::to_string(sum) + ", expected " +
                std::to_string(want));
  }
}

}  // namespace

ValidationReport validate_uasm(const IntMatrix& cells,
                               const StrictPartition& mu, int n) {
  ValidationReport r;
  if (mu.n() != n) {
    r.add(ViolationKind::structure, "dimensions", 0, 0,
          "shape length does not equal rank");
    return r;
  }
  if (!check_dims(cells, 2 * n, mu.m(), r)) return r;
  check_entry_range(cells, r);
  check_row_alternation(cells, r);
  check_column_alternation(cells, r);
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int q = 0; q < mu.m(); ++q) sum += cells[2 * i][q] + cells[2 * i + 1][q];
    if (sum != 1)
      r.add(ViolationKind::rule, "pair-sum", 2 * i + 1, 0,
            "rows " + std::to_string(2 * i + 1) + "," +
                std::to_string(2 * i + 2) + " sum to " + std::to_string(sum));
  }
  check_column_sums(cells, mu, r);
  return r;
}

ValidationReport validate_uasm(const MuUASM& ua) {
  return validate_uasm(ua.cells, ua.mu, ua.n);
}

ValidationReport validate_ordinary_asm(const IntMatrix& cells) {
  ValidationReport r;
  int n = static_cast<int>(cells.size());
  if (!check_dims(cells, n, n, r)) return r;
  check_entry_range(cells, r);
  check_row_alternation(cells, r);
  check_column_alternation(cells, r);
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int v : cells[i]) sum += v;
    if (sum != 1)
      r.add(ViolationKind::rule, "row-sum", i + 1, 0,
            "sum " + std::to_string(sum));
  }
  for (int q = 0; q < n; ++q) {
    int sum = 0;
    for (const auto& row : cells) sum += row[q];
    if (sum != 1)
      r.add(ViolationKind::rule, "column-sum", 0, q + 1,
            "sum " + std::to_string(sum));
  }
  return r;
}

ValidationReport validate_okada_asm(const IntMatrix& cells,
                                    const StrictPartition& mu, int n) {
  ValidationReport r;
  if (mu.n() != n) {
    r.add(ViolationKind::structure, "dimensions", 0, 0,
          "shape length does not equal rank");
    return r;
  }
  if (!check_dims(cells, n, mu.m(), r)) return r;
  check_entry_range(cells, r);
  check_row_alternation(cells, r);
  check_column_alternation(cells, r);
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int v : cells[i]) sum += v;
    if (sum != 1)
      r.add(ViolationKind::rule, "row-sum", i + 1, 0,
            "sum " + std::to_string(sum));
  }
  check_column_sums(cells, mu, r);
  return r;
}

SignatureMatrix to_signature(const MuUASM& ua) {
  SignatureMatrix sm{ua.mu, ua.n, {}};
  sm.cells.resize(ua.rows());
  for (int i = 0; i < ua.rows(); ++i) {
    sm.cells[i].assign(ua.cols(), Sign::minus);
    int right = 0;  // nearest non-zero strictly right of the cursor
    for (int q = ua.cols() - 1; q >= 0; --q) {
      int a = ua.cells[i][q];
      bool plus = (a == 1) || (a == 0 && right == 1);
      sm.cells[i][q] = plus ? Sign::plus : Sign::minus;
      if (a != 0) right = a;
    }
  }
  return sm;
}

IntMatrix signature_to_cells(const SignatureMatrix& sm) {
  IntMatrix cells(sm.rows());
  for (int i = 0; i < sm.rows(); ++i) {
    const auto& row = sm.cells[i];
    const int m = static_cast<int>(row.size());
    cells[i].assign(m, 0);
    for (int q = 0; q < m; ++q) {
      bool run_end = (q + 1 == m) || (row[q + 1] != row[q]);
      if (!run_end) continue;
      if (row[q] == Sign::plus)
        cells[i][q] = 1;
      else if (q + 1 < m && row[q + 1] == Sign::plus)
        cells[i][q] = -1;
    }
  }
  return cells;
}

UasmStats uasm_stats(const MuUASM& ua) {
  UasmStats s;
  s.m_unbarred.assign(ua.n, 0);
  s.m_barred.assign(ua.n, 0);
  SignatureMatrix sm = to_signature(ua);
  for (int i = 1; i <= ua.rows(); ++i) {
    Entry label = entry_of_row(i, ua.n);
    int plus = 0;
    for (Sign v : sm.cells[i - 1]) plus += (v == Sign::plus);
    (label.is_barred() ? s.m_barred : s.m_unbarred)[label.level() - 1] = plus;
    if (i % 2 == 0) s.bar += plus;
  }
  const int rows = ua.rows(), cols = ua.cols();
  for (int i = 0; i < rows; ++i) {
    for (int q = 0; q < cols; ++q) {
      if (ua.cells[i][q] == -1) s.neg++;
      if (ua.cells[i][q] != 0) continue;
      int right = 0;
      for (int p = q + 1; p < cols && right == 0; ++p) right = ua.cells[i][p];
      if (right != 1) continue;
      int below = 0;
      for (int j = i + 1; j < rows && below == 0; ++j) below = ua.cells[j][q];
      bool odd_row = (i % 2 == 0);
      if (odd_row ? below == 1 : below != 1) s.ssi++;
    }
  }
  return s;
}

LaurentPoly x_weight_uasm(const MuUASM& ua) {
  UasmStats s = uasm_stats(ua);
  std::vector<int> xe(ua.n);
  for (int k = 0; k < ua.n; ++k) xe[k] = s.m_unbarred[k] - s.m_barred[k];
  return LaurentPoly::monomial(ua.n, xe, 0);
}

LaurentPoly t_weight_uasm(const MuUASM& ua) {
  UasmStats s = uasm_stats(ua);
  LaurentPoly one_plus_t = LaurentPoly::one(ua.n) + LaurentPoly::t(ua.n);
  return LaurentPoly::t(ua.n, s.ssi + s.bar) * one_plus_t.pow(s.neg);
}

// --- exhaustive enumeration ------------------------------------------

namespace {

// The rows admissible under the right-to-left alternation rule are exactly
// the 2^m choices of non-zero positions: the right-most non-zero must be 1
// and signs alternate leftwards from it.
std::vector<std::vector<int>> admissible_rows(int m) {
  std::vector<std::vector<int>> rows;
  rows.reserve(std::size_t{1} << m);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> row(m, 0);
    int sign = 1;
    for (int q = m - 1; q >= 0; --q) {
      if (mask & (1u << q)) {
        row[q] = sign;
        sign = -sign;
      }
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Depth-first row assignment; Leaf is called with the chosen row
// pointers once all rows are placed.
template <class Leaf>
struct UasmSearch {
  int total_rows, m;
  std::vector<int> target;  // desired column sums
  const std::vector<std::vector<int>>& patterns;
  bool pair_rows;  // enforce pair sums (U-turn) and allow the T-1 window
  Leaf& leaf;
  std::vector<int> colsum;
  std::vector<const std::vector<int>*> chosen;

  UasmSearch(int total_rows_, int m_, std::vector<int> target_,
             const std::vector<std::vector<int>>& patterns_, bool pair_rows_,
             Leaf& leaf_)
      : total_rows(total_rows_),
        m(m_),
        target(std::move(target_)),
        patterns(patterns_),
        pair_rows(pair_rows_),
        leaf(leaf_),
        colsum(m_, 0) {
    chosen.reserve(total_rows);
  }

  // Column prefix sums must stay within reach of the target: the suffix
  // below any cut sums to 0 or 1.
  bool admissible(const std::vector<int>& row, int depth) const {
    bool last = depth + 1 == total_rows;
    for (int q = 0; q < m; ++q) {
      int s = colsum[q] + row[q];
      if (last ? s != target[q] : (s < target[q] - 1 || s > target[q]))
        return false;
    }
    if (pair_rows && depth % 2 == 1) {
      int pair = 0;
      for (int q = 0; q < m; ++q) pair += (*chosen.back())[q] + row[q];
      if (pair != 1) return false;
    }
    return true;
  }

  void place(const std::vector<int>& row, int depth) {
    for (int q = 0; q < m; ++q) colsum[q] += row[q];
    chosen.push_back(&row);
    search(depth + 1);
    chosen.pop_back();
    for (int q = 0; q < m; ++q) colsum[q] -= row[q];
  }

  void search(int depth) {
    if (depth == total_rows) {
      leaf(chosen);
      return;
    }
    for (const auto& row : patterns)
      if (admissible(row, depth)) place(row, depth);
  }
};

using ChosenRows = std::vector<const std::vector<int>*>;

IntMatrix assemble(const ChosenRows& chosen) {
  IntMatrix cells;
  cells.reserve(chosen.size());
  for (const auto* row : chosen) cells.push_back(*row);
  return cells;
}

// Rows of an ordinary ASM additionally sum to 1.
std::vector<std::vector<int>> admissible_asm_rows(int m) {
  std::vector<std::vector<int>> rows;
  for (auto& row : admissible_rows(m)) {
    int sum = 0;
    for (int v : row) sum += v;
    if (sum == 1) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<MuUASM> brute_force_uasms(const StrictPartition& mu, int n,
                                      int threads) {
  if (mu.n() != n)
    throw InvalidInput("shape must have exactly rank-many parts");
  std::vector<MuUASM> out;
  if (n == 0) {
    out.push_back(MuUASM{mu, 0, {}});
    return out;
  }
  const int m = mu.m();
  if (2 * n * m > kBruteForceCellLimit)
    throw SizeLimit("brute-force search limited to 2n*m <= " +
                    std::to_string(kBruteForceCellLimit) + " cells, got " +
                    std::to_string(2 * n * m));
  std::vector<int> target(m, 0);
  for (int p : mu.parts()) target[p - 1] = 1;
  const auto patterns = admissible_rows(m);

  threads = resolve_threads(threads);
  if (threads <= 1) {
    auto emit = [&](const ChosenRows& chosen) {
      out.push_back(MuUASM{mu, n, assemble(chosen)});
    };
    UasmSearch<decltype(emit)>(2 * n, m, target, patterns, true, emit)
        .search(0);
    return out;
  }

  // Fan out over the first-row choice; concatenating per-branch results in
  // pattern order reproduces the serial emission order.
  std::vector<std::size_t> first;
  {
    auto noop = [](const ChosenRows&) {};
    UasmSearch<decltype(noop)> probe(2 * n, m, target, patterns, true, noop);
    for (std::size_t p = 0; p < patterns.size(); ++p)
      if (probe.admissible(patterns[p], 0)) first.push_back(p);
  }
  std::vector<std::vector<IntMatrix>> results(first.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::size_t b = 0; b < first.size(); ++b) {
    std::vector<IntMatrix> local;
    auto collect = [&local](const ChosenRows& chosen) {
      local.push_back(assemble(chosen));
    };
    UasmSearch<decltype(collect)> s(2 * n, m, target, patterns, true, collect);
    s.place(patterns[first[b]], 0);
    results[b] = std::move(local);
  }
  std::size_t total = 0;
  for (const auto& batch : results) total += batch.size();
  out.reserve(total);
  for (auto& batch : results)
    for (auto& cells : batch) out.push_back(MuUASM{mu, n, std::move(cells)});
  return out;
}

void for_each_uasm(const StrictPartition& mu, int n, int threads,
                   const std::function<void(const MuUASM&)>& yield) {
  threads = resolve_threads(threads);
  if (threads > 1) {
    for (const auto& ua : brute_force_uasms(mu, n, threads)) yield(ua);
    return;
  }
  if (mu.n() != n)
    throw InvalidInput("shape must have exactly rank-many parts");
  if (n == 0) {
    yield(MuUASM{mu, 0, {}});
    return;
  }
  const int m = mu.m();
  if (2 * n * m > kBruteForceCellLimit)
    throw SizeLimit("brute-force search limited to 2n*m <= " +
                    std::to_string(kBruteForceCellLimit) + " cells, got " +
                    std::to_string(2 * n * m));
  std::vector<int> target(m, 0);
  for (int p : mu.parts()) target[p - 1] = 1;
  const auto patterns = admissible_rows(m);
  auto emit = [&](const ChosenRows& chosen) {
    yield(MuUASM{mu, n, assemble(chosen)});
  };
  UasmSearch<decltype(emit)>(2 * n, m, target, patterns, true, emit).search(0);
}

std::vector<IntMatrix> brute_force_ordinary_asms(int n) {
  if (n < 1) throw InvalidInput("matrix size must be positive");
  if (n * n > kBruteForceCellLimit)
    throw SizeLimit("brute-force search limited to n*n <= " +
                    std::to_string(kBruteForceCellLimit));
  const auto patterns = admissible_asm_rows(n);
  std::vector<int> target(n, 1);
  std::vector<IntMatrix> out;
  auto emit = [&](const ChosenRows& chosen) { out.push_back(assemble(chosen)); };
  UasmSearch<decltype(emit)>(n, n, target, patterns, false, emit).search(0);
  return out;
}

}  // namespace icetab
