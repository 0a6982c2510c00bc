#ifndef ICETAB_BIJECTION_HPP
#define ICETAB_BIJECTION_HPP

#include "icetab/tableaux.hpp"
#include "icetab/uasm.hpp"

namespace icetab {

// Diagonal-incidence signature of a shifted tableau: the row labelled e
// holds + in column q exactly when the strip of e meets diagonal q (the
// boxes with j - i + 1 = q). Rows are labelled n, n', ..., 1, 1' from the
// top, so the result is directly comparable with to_signature() output.
SignatureMatrix diagonal_signature(const ShiftedTableau& st);

// Inverse reading: the + count of column q is the length of diagonal q,
// which pins the shape, and the row labels of the +'s are the entries of
// that diagonal in increasing order. Throws InvalidInput when the +
// counts cannot bound a shifted frame of the matrix's rank or the filled
// tableau fails validation.
ShiftedTableau tableau_from_signature(const SignatureMatrix& sm);

// The full correspondence between shifted tableaux and U-turn matrices:
// encode the strips as a signature, then collapse runs to non-zero
// entries (and back). Both directions re-validate their output and throw
// InvariantViolation on failure; such a failure is a bug, not bad input.
MuUASM tableau_to_uasm(const ShiftedTableau& st);
ShiftedTableau uasm_to_tableau(const MuUASM& ua);

}  // namespace icetab

#endif
