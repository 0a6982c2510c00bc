#ifndef ICETAB_UASM_HPP
#define ICETAB_UASM_HPP

#include <functional>
#include <vector>

#include "icetab/entry.hpp"
#include "icetab/laurent.hpp"
#include "icetab/partition.hpp"
#include "icetab/validation.hpp"

namespace icetab {

using IntMatrix = std::vector<std::vector<int>>;

// 2n x m matrix over {-1,0,1} with the U-turn boundary: non-zero entries
// alternate along rows (read right to left) and columns (read bottom to
// top) ending in 1, consecutive row pairs sum to 1, and column q sums to
// 1 exactly when q is a part of mu. Rows are labelled n, n', ..., 1, 1'
// from the top.
struct MuUASM {
  StrictPartition mu;
  int n = 0;
  IntMatrix cells;  // rows top to bottom

  int rows() const { return static_cast<int>(cells.size()); }
  int cols() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }

  friend bool operator==(const MuUASM&, const MuUASM&) = default;
};

enum class Sign : unsigned char { minus = 0, plus = 1 };

// +/- refinement of a U-turn matrix (or the diagonal-incidence pattern of
// a shifted tableau); same row labelling as MuUASM.
struct SignatureMatrix {
  StrictPartition mu;
  int n = 0;
  std::vector<std::vector<Sign>> cells;

  int rows() const { return static_cast<int>(cells.size()); }
  int cols() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }

  friend bool operator==(const SignatureMatrix&, const SignatureMatrix&) =
      default;
};

struct UasmStats {
  int neg = 0;  // number of -1 entries
  int bar = 0;  // plus cells of the signature in even rows from the top
  int ssi = 0;  // zeros whose nearest non-zero right neighbour is 1 and
                // whose nearest non-zero lower neighbour is 1 (odd rows)
                // or -1/absent (even rows)
  std::vector<int> m_unbarred;  // plus cells in the row labelled k
  std::vector<int> m_barred;    // plus cells in the row labelled k'
};

// --- validation ------------------------------------------------------

// Rules checked on a 2n x m candidate, after the dimension check:
//   entry-range         entries in {-1,0,1}
//   row-alternation     right-to-left row partial sums in {0,1}
//   column-alternation  bottom-to-top column partial sums in {0,1}
//   pair-sum            rows 2i-1 and 2i sum to 1 together
//   column-sum          column q sums to [q is a part of mu]
ValidationReport validate_uasm(const IntMatrix& cells,
                               const StrictPartition& mu, int n);
ValidationReport validate_uasm(const MuUASM& ua);

// Square matrix; non-zero entries alternate along each row and column and
// every row/column starts and ends with 1 (sums to 1).
ValidationReport validate_ordinary_asm(const IntMatrix& cells);

// n x m variant with free row reading direction replaced by: row partial
// sums from the right in {0,1}, every row sums to 1, and column sums as
// for the U-turn case.
ValidationReport validate_okada_asm(const IntMatrix& cells,
                                    const StrictPartition& mu, int n);

// --- signature refinement --------------------------------------------

// A cell becomes + when it is a 1 or a 0 whose nearest non-zero right
// neighbour is 1; everything else becomes -.
SignatureMatrix to_signature(const MuUASM& ua);

// Per row: the right-most + of each run of +'s becomes 1; the right-most
// - of each run of -'s becomes -1 when its immediate right neighbour is
// +; all else 0. Total on any sign matrix; the result carries no validity
// promise.
IntMatrix signature_to_cells(const SignatureMatrix& sm);

// --- statistics and weights ------------------------------------------

UasmStats uasm_stats(const MuUASM& ua);
LaurentPoly x_weight_uasm(const MuUASM& ua);   // prod x_k^(m_k - m_k')
LaurentPoly t_weight_uasm(const MuUASM& ua);   // t^(ssi+bar) (1+t)^neg

// --- exhaustive enumeration (independent oracle) ----------------------

// Hard bound on 2n*m for the brute-force searches.
inline constexpr int kBruteForceCellLimit = 36;

// Emits every matrix satisfying the U-turn conditions exactly once, in
// row-major lexicographic order (entries ordered -1 < 0 < 1), by
// depth-first row assignment with running column-sum pruning. Built
// directly on the defining conditions; shares nothing with the tableau
// machinery.
void for_each_uasm(const StrictPartition& mu, int n, int threads,
                   const std::function<void(const MuUASM&)>& yield);
std::vector<MuUASM> brute_force_uasms(const StrictPartition& mu, int n,
                                      int threads = 1);

// All n x n alternating sign matrices, same enumeration scheme.
std::vector<IntMatrix> brute_force_ordinary_asms(int n);

}  // namespace icetab

#endif
