#pragma once

#include <vector>

#include "fanocascade/numeric.hpp"

namespace fano {

/// Dense integer matrix, row major. Sizes in this library stay tiny (at most
/// around 15 x 15) so no sparsity or pivot heuristics are needed, only
/// exactness.
using IntMat = std::vector<std::vector<Int>>;

IntMat identity_matrix(std::size_t n);

/// Exact determinant of a square matrix via fraction free (Bareiss)
/// elimination.
Int determinant(const IntMat& m);

/// Row Hermite normal form of the lattice spanned by the rows. Returns the
/// nonzero rows only, so the number of returned rows is the rank.
IntMat hermite_basis(const IntMat& rows);

/// Diagonal of the Smith normal form: invariant factors d_1 | d_2 | ... with
/// zeros at the end when the matrix has a kernel. The matrix need not be
/// square.
std::vector<Int> smith_invariant_factors(IntMat m);

IntMat mat_mul(const IntMat& a, const IntMat& b);

IntMat transpose(const IntMat& a);

}  // namespace fano
