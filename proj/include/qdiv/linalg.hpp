#pragma once

#include "qdiv/types.hpp"

namespace qdiv {

// <A, B>_HS = tr(A B*).
Complex hs_inner(const ComplexMatrix& A, const ComplexMatrix& B);

// The operator x (x) y, acting as z -> <z, y> x. Entry (i, j) is x_i conj(y_j).
ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y);

// Throws DimensionError unless A is square with dim >= 1.
void require_square(const ComplexMatrix& A, const char* what);

// Throws DimensionError unless A and B are square of equal size.
void require_same_dim(const ComplexMatrix& A, const ComplexMatrix& B, const char* what);

bool is_hermitian(const ComplexMatrix& A, double rel_tol);

// X X*, Hermitian by construction.
ComplexMatrix gram(const ComplexMatrix& X);

// (A + A*) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& A);

// Operator 2-norm of a Hermitian matrix (max |eigenvalue|).
double hermitian_norm2(const ComplexMatrix& A);

// U * A * U^dagger, or U * conj(A) * U^dagger for the antiunitary U o K, where K
// is entrywise conjugation in the standard basis.
ComplexMatrix conjugate_by(const ComplexMatrix& U, const ComplexMatrix& A, bool antiunitary);

double unitarity_defect(const ComplexMatrix& U);

}  // namespace qdiv
