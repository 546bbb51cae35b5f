#include "qdiv/superop.hpp"

#include "qdiv/linalg.hpp"

namespace qdiv {

ComplexVector vec(const ComplexMatrix& T) {
  const Eigen::Index n = T.rows();
  ComplexVector v(n * T.cols());
  for (Eigen::Index j = 0; j < T.cols(); ++j) {
    for (Eigen::Index i = 0; i < n; ++i) v(i + n * j) = T(i, j);
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index n) {
  if (n <= 0 || v.size() != n * n) throw DimensionError("unvec: length is not n^2");
  ComplexMatrix T(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) T(i, j) = v(i + n * j);
  }
  return T;
}

ComplexMatrix kron(const ComplexMatrix& X, const ComplexMatrix& Y) {
  ComplexMatrix out(X.rows() * Y.rows(), X.cols() * Y.cols());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      out.block(i * Y.rows(), j * Y.cols(), Y.rows(), Y.cols()) = X(i, j) * Y;
    }
  }
  return out;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& T) const {
  if (T.rows() != dim || T.cols() != dim) throw DimensionError("Superoperator::apply: shape");
  return unvec(matrix * vec(T), dim);
}

Superoperator superop_lr(const ComplexMatrix& A, const ComplexMatrix& B) {
  require_same_dim(A, B, "superop_lr");
  return Superoperator{A.rows(), kron(B.transpose(), A)};
}

}  // namespace qdiv
