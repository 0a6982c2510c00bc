#ifndef ICETAB_CHARPOLY_HPP
#define ICETAB_CHARPOLY_HPP

#include <optional>

#include "icetab/laurent.hpp"
#include "icetab/partition.hpp"

namespace icetab {

// The t-deformed Weyl denominator for sp(2n), fully expanded:
//   prod_i x_i^(n-i+1) * prod_i (1 + t x_i^-2)
//   * prod_{i<j} (1 + t x_i^-1 x_j)(1 + t x_i^-1 x_j^-1).
LaurentPoly weyl_denominator(int n);

// t-deformed symplectic character: sum over the sp(2n)-standard tableaux
// of shape lam of t^(2 bar) x^wgt. At t = 1 this is the classical
// symplectic Schur function.
LaurentPoly sp_character(const Partition& lam, int n, int threads = 1);

// Dimension of the irreducible sp(2n) representation indexed by lam,
// evaluated exactly; always equals the tableau count of sp_character.
BigInt sp_dimension(const Partition& lam, int n);

// Closed counting formulas, all evaluated in exact rational arithmetic.
BigInt asm_count(int n);              // n x n alternating sign matrices
BigInt uasm_count_product(int n);     // 2n x n U-turn matrices, product form
BigInt uasm_count_recurrence(int n);  // same value by the two-step recurrence

struct VerifyReport {
  Partition lambda;
  int n = 0;
  StrictPartition mu;  // lambda + staircase(n)

  // The same polynomial computed four independent ways.
  LaurentPoly product;      // weyl_denominator * sp_character
  LaurentPoly tableau_sum;  // over shifted tableaux of shape mu
  LaurentPoly uasm_sum;     // over brute-forced U-turn matrices
  LaurentPoly config_sum;   // over their square-ice images, cellwise weights

  bool polynomials_equal = false;
  bool x1_equal = false;  // at x = 1: equals (1+t)^(n^2) sp_character|x=1
  bool t1_equal = false;  // at x = 1, t = 1: equals 2^(n^2) sp_dimension
  BigInt t1_value, t1_expected;
  BigInt two_pow_neg_sum;  // sum over the matrices of 2^neg, same target
  std::optional<LaurentPoly::TermDiff> first_difference;

  bool ok() const { return polynomials_equal && x1_equal && t1_equal; }
};

// Expands the denominator-times-character product and re-derives it by
// three exhaustive weighted enumerations (tableaux, U-turn matrices,
// square-ice states), comparing everything exactly. Throws SizeLimit when
// the matrix enumeration is infeasible.
VerifyReport verify_identity(const Partition& lam, int n, int threads = 1);

}  // namespace icetab

#endif
