#ifndef ICETAB_TABLEAUX_HPP
#define ICETAB_TABLEAUX_HPP

#include <functional>
#include <vector>

#include "icetab/entry.hpp"
#include "icetab/laurent.hpp"
#include "icetab/partition.hpp"
#include "icetab/validation.hpp"

namespace icetab {

struct Box {
  int row = 0;  // 1-based
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend bool operator<(const Box& a, const Box& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

// Filling of the shifted frame of mu by barred/unbarred levels up to n.
// Row i holds the boxes (i,i)..(i, mu_i+i-1), left-adjusted to the main
// diagonal; rows[i-1][j-i] is the entry in box (i,j).
struct ShiftedTableau {
  StrictPartition shape;
  int n = 0;
  std::vector<std::vector<Entry>> rows;

  bool has_box(int i, int j) const {
    return i >= 1 && i <= shape.n() && j >= i && j <= shape.part(i - 1) + i - 1;
  }
  Entry at(int i, int j) const { return rows[i - 1][j - i]; }
  std::vector<Entry> profile() const;

  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) =
      default;
};

// Left-adjusted filling of the ordinary frame of lam; row i holds the
// boxes (i,1)..(i,lam_i).
struct OrdinaryTableau {
  Partition shape;
  int n = 0;
  std::vector<std::vector<Entry>> rows;

  bool has_box(int i, int j) const {
    return i >= 1 && i <= shape.length() && j >= 1 && j <= shape.part(i - 1);
  }
  Entry at(int i, int j) const { return rows[i - 1][j - 1]; }

  friend bool operator==(const OrdinaryTableau&, const OrdinaryTableau&) =
      default;
};

// All boxes of a shifted tableau holding one entry. No two of them lie on
// the same diagonal; the strip may split into several edge-connected
// components, listed in order of their smallest box.
struct RibbonStrip {
  Entry entry;
  std::vector<Box> boxes;                    // row-major order
  std::vector<std::vector<Box>> components;  // each in row-major order

  bool distinct_diagonals() const;
  bool touches_main_diagonal(std::size_t component) const;
};

struct TableauStats {
  std::vector<int> m_unbarred;  // m_unbarred[k-1] = multiplicity of k
  std::vector<int> m_barred;
  int bar = 0;  // total barred entries
  int str = 0;  // total connected strip components (shifted only)
  int var = 0;  // upward steps in unbarred strips plus rightward steps in
                // barred strips (shifted only)
};

// --- validation ------------------------------------------------------

// Rules checked, in reporting order:
//   structure        rows do not match the shape / bad shape-rank pair
//   alphabet         entry level out of 1..n
//   profile          main-diagonal entry of row i is not i or i'
//   row-weak         row not weakly increasing
//   column-weak      column not weakly increasing
//   diagonal-strict  diagonal not strictly increasing
ValidationReport validate_shifted(const ShiftedTableau& st);

// Rules: structure, alphabet, row-start-bound (every row-i entry >= i'),
// row-weak, column-strict.
ValidationReport validate_ordinary(const OrdinaryTableau& t);

// --- exhaustive generation -------------------------------------------

// Visits every shifted tableau of shape mu and rank n exactly once, in
// row-major lexicographic order of the entries. threads > 1 fans the
// search out over first-row fillings; the emission order is the same for
// every thread count.
void for_each_shifted(const StrictPartition& mu, int n, int threads,
                      const std::function<void(const ShiftedTableau&)>& yield);
std::vector<ShiftedTableau> generate_shifted(const StrictPartition& mu, int n,
                                             int threads = 1);

void for_each_ordinary(const Partition& lam, int n, int threads,
                       const std::function<void(const OrdinaryTableau&)>& yield);
std::vector<OrdinaryTableau> generate_ordinary(const Partition& lam, int n,
                                               int threads = 1);

// --- strips, statistics, weights -------------------------------------

RibbonStrip ribbon_strip(const ShiftedTableau& st, Entry e);

TableauStats shifted_stats(const ShiftedTableau& st);

// Multiplicities and bar only; str/var stay zero.
TableauStats ordinary_stats(const OrdinaryTableau& t);

// The monomial prod_k x_k^(m_k - m_k').
LaurentPoly x_weight_shifted(const ShiftedTableau& st);
LaurentPoly x_weight_ordinary(const OrdinaryTableau& t);

// Entrywise t-weight: an unbarred entry weighs t when the box directly
// above belongs to the same strip, else 1; a barred entry weighs t^2 when
// the box directly to its right belongs to the same strip, else t; and
// every strip component not touching the main diagonal contributes a
// factor (1+t). The product always collapses to
// t^(var+bar) (1+t)^(str-n), which is re-checked on every call.
LaurentPoly t_weight_shifted(const ShiftedTableau& st);

}  // namespace icetab

#endif
