#pragma once

#include "qdiv/types.hpp"

namespace qdiv {

// Column-major vectorization: vec(T)[i + n*j] = T(i, j).
ComplexVector vec(const ComplexMatrix& T);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index n);

// A linear map on B(H), stored as its n^2 x n^2 matrix in the vec basis.
struct Superoperator {
  Eigen::Index dim = 0;  // n, the matrix acts on C^{n^2}
  ComplexMatrix matrix;

  ComplexMatrix apply(const ComplexMatrix& T) const;
};

// L_A R_B : T -> A T B. Its matrix is kron(B^T, A).
Superoperator superop_lr(const ComplexMatrix& A, const ComplexMatrix& B);

ComplexMatrix kron(const ComplexMatrix& X, const ComplexMatrix& Y);

}  // namespace qdiv
