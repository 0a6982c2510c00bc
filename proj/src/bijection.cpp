#include "icetab/bijection.hpp"

#include <algorithm>

namespace icetab {

SignatureMatrix diagonal_signature(const ShiftedTableau& st) {
  validate_shifted(st).require("shifted tableau");
  const int n = st.n, m = st.shape.m();
  SignatureMatrix sm{st.shape, n, {}};
  sm.cells.assign(2 * n, std::vector<Sign>(m, Sign::minus));
  for (int i = 1; i <= st.shape.n(); ++i) {
    for (int j = i; j <= st.shape.part(i - 1) + i - 1; ++j) {
      int row = row_of_entry(st.at(i, j), n);
      sm.cells[row - 1][j - i] = Sign::plus;
    }
  }
  return sm;
}

ShiftedTableau tableau_from_signature(const SignatureMatrix& sm) {
  if (sm.rows() == 0 || sm.rows() % 2 != 0)
    throw InvalidInput("signature matrix must have a positive even number of rows");
  const int n = sm.rows() / 2, m = sm.cols();

  std::vector<int> diag_len(m, 0);
  for (int q = 0; q < m; ++q)
    for (int i = 0; i < sm.rows(); ++i)
      diag_len[q] += (sm.cells[i][q] == Sign::plus);

  // The + counts must be the diagonal lengths of a shifted frame whose
  // shape has exactly n distinct parts and width exactly m.
  StrictPartition mu;
  try {
    Partition conj{std::vector<int>(diag_len)};
    mu = StrictPartition(conj.conjugate().parts());
    if (mu.as_partition().conjugate().parts() != diag_len)
      throw InvalidInput("zero-length diagonal inside claimed width");
  } catch (const InvalidInput&) {
    throw InvalidInput(
        "column plus-counts do not describe a shifted frame");
  }
  if (mu.n() != n)
    throw InvalidInput("shape length " + std::to_string(mu.n()) +
                       " does not match rank " + std::to_string(n));

  ShiftedTableau st{mu, n, {}};
  st.rows.resize(n);
  for (int i = 0; i < n; ++i)
    st.rows[i].assign(mu.part(i), Entry::unbarred(1));
  for (int q = 1; q <= m; ++q) {
    std::vector<Entry> labels;
    for (int row = 1; row <= 2 * n; ++row)
      if (sm.cells[row - 1][q - 1] == Sign::plus)
        labels.push_back(entry_of_row(row, n));
    std::sort(labels.begin(), labels.end());
    // Diagonal q runs through the boxes (i, q+i-1), entries increasing
    // with depth; box (i, q+i-1) sits at row offset q-1.
    for (std::size_t d = 0; d < labels.size(); ++d) {
      int i = static_cast<int>(d) + 1;
      st.rows[i - 1][q - 1] = labels[d];
    }
  }
  ValidationReport report = validate_shifted(st);
  if (!report.ok())
    throw InvalidInput("signature does not encode a valid shifted tableau: " +
                       report.summary());
  return st;
}

MuUASM tableau_to_uasm(const ShiftedTableau& st) {
  SignatureMatrix sm = diagonal_signature(st);
  MuUASM ua{st.shape, st.n, signature_to_cells(sm)};
  ValidationReport report = validate_uasm(ua);
  if (!report.ok())
    throw InvariantViolation(
        "image of a valid shifted tableau failed U-turn validation: " +
        report.summary());
  return ua;
}

ShiftedTableau uasm_to_tableau(const MuUASM& ua) {
  validate_uasm(ua).require("U-turn matrix");
  try {
    ShiftedTableau st = tableau_from_signature(to_signature(ua));
    if (st.shape != ua.mu)
      throw InvariantViolation("recovered shape differs from the matrix shape");
    return st;
  } catch (const InvalidInput& e) {
    throw InvariantViolation(
        std::string("signature of a valid U-turn matrix failed to decode: ") +
        e.what());
  }
}

}  // namespace icetab
