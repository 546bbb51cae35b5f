#include "support.hpp"

#include "qdiv/extended_real.hpp"
#include "qdiv/linalg.hpp"
#include "qdiv/operators.hpp"
#include "qdiv/scalar_function.hpp"
#include "qdiv/spectral.hpp"
#include "qdiv/superop.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace qdiv;
using qdiv::test::diag;

namespace {

const Complex I1{0.0, 1.0};

ComplexMatrix pauli_y() {
  ComplexMatrix Y(2, 2);
  Y << 0.0, -I1, I1, 0.0;
  return Y;
}

}  // namespace

// --- ExtendedReal -----------------------------------------------------------

TEST(ExtendedReal, ZeroTimesInfinityIsZero) {
  const auto z = ExtendedReal::finite(0.0) * ExtendedReal::infinity();
  EXPECT_TRUE(z.is_finite());
  EXPECT_EQ(z.value(), 0.0);
  EXPECT_TRUE((ExtendedReal::infinity() * ExtendedReal::finite(2.0)).is_infinite());
}

TEST(ExtendedReal, SumAbsorbsInfinity) {
  EXPECT_TRUE((ExtendedReal::finite(1.5) + ExtendedReal::infinity()).is_infinite());
  EXPECT_EQ((ExtendedReal::finite(1.5) + ExtendedReal::finite(2.0)).value(), 3.5);
}

TEST(ExtendedReal, RejectsNanAndNegativeInfinity) {
  EXPECT_THROW(ExtendedReal::finite(std::nan("")), DomainError);
  EXPECT_THROW(ExtendedReal::finite(-std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(ExtendedReal::finite(-1.0) * ExtendedReal::infinity(), DomainError);
  EXPECT_THROW(ExtendedReal::infinity().value(), DomainError);
}

TEST(ExtendedReal, FormatsAndParses) {
  EXPECT_EQ(ExtendedReal::infinity().to_fixed(12), "inf");
  EXPECT_EQ(ExtendedReal::finite(-1e-17).to_fixed(12), "0.000000000000");
  EXPECT_EQ(ExtendedReal::finite(std::log(2.0)).to_fixed(12), "0.693147180560");
  EXPECT_TRUE(ExtendedReal::parse("inf").is_infinite());
  EXPECT_EQ(ExtendedReal::parse("0.25").value(), 0.25);
  EXPECT_THROW(ExtendedReal::parse("-inf"), DomainError);
  EXPECT_THROW(ExtendedReal::parse("abc"), DomainError);
}

TEST(ExtendedReal, CompareIsCategorical) {
  const auto both = compare(ExtendedReal::infinity(), ExtendedReal::infinity());
  EXPECT_FALSE(both.category_mismatch);
  EXPECT_EQ(both.abs_diff, 0.0);
  EXPECT_TRUE(compare(ExtendedReal::finite(1.0), ExtendedReal::infinity()).category_mismatch);
  EXPECT_DOUBLE_EQ(compare(ExtendedReal::finite(1.0), ExtendedReal::finite(0.75)).abs_diff, 0.25);
}

// --- basic linear algebra ----------------------------------------------------

TEST(Linalg, HsInnerIsTraceOfAB_star) {
  SeededRng rng(3);
  for (int n = 1; n <= 5; ++n) {
    const ComplexMatrix A = ginibre(n, rng);
    const ComplexMatrix B = ginibre(n, rng);
    const Complex expected = (A * B.adjoint()).trace();
    EXPECT_NEAR(std::abs(hs_inner(A, B) - expected), 0.0, 1e-12 * (1 + std::abs(expected)));
  }
  EXPECT_THROW(hs_inner(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)), DimensionError);
}

TEST(Linalg, RankOneActsAsInnerProduct) {
  ComplexVector x(2), y(2), z(2);
  x << 1.0, I1;
  y << 2.0, 1.0;
  z << 0.5, -I1;
  const Complex zy = y.dot(z);  // <z, y> = y* z
  EXPECT_LT((rank_one(x, y) * z - zy * x).norm(), 1e-15);
}

TEST(Linalg, ConjugateByAntiunitaryConjugatesEntries) {
  const ComplexMatrix Y = pauli_y();
  const ComplexMatrix I2 = ComplexMatrix::Identity(2, 2);
  EXPECT_LT((conjugate_by(I2, Y, true) - Y.conjugate()).norm(), 1e-15);
  EXPECT_LT((conjugate_by(I2, Y, false) - Y).norm(), 1e-15);
}

// --- eigensolver ------------------------------------------------------------

TEST(Jacobi, PauliY) {
  const auto eig = eig_hermitian(pauli_y());
  EXPECT_NEAR(eig.values(0), -1.0, 1e-14);
  EXPECT_NEAR(eig.values(1), 1.0, 1e-14);
}

TEST(Jacobi, RejectsNonHermitian) {
  ComplexMatrix A(2, 2);
  A << 1.0, 2.0, 0.0, 1.0;
  EXPECT_THROW(eig_hermitian(A), ValidationError);
}

TEST(Jacobi, MatchesReferenceSolverOnRandomHermitian) {
  SeededRng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 8;
    const ComplexMatrix A = qdiv::test::random_hermitian(n, rng);
    const auto eig = eig_hermitian(A);
    const double scale = std::max(1.0, A.norm());

    const ComplexMatrix& V = eig.vectors;
    EXPECT_LT((V.adjoint() * V - ComplexMatrix::Identity(n, n)).norm(), 1e-12);
    EXPECT_LT((V * eig.values.cast<Complex>().asDiagonal() * V.adjoint() - A).norm(),
              1e-12 * scale);
    for (int k = 1; k < n; ++k) EXPECT_LE(eig.values(k - 1), eig.values(k));

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> reference(A);
    EXPECT_LT((eig.values - reference.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12 * scale);
  }
}

TEST(Jacobi, DegenerateSpectrum) {
  SeededRng rng(5);
  const ComplexMatrix U = haar_unitary(4, rng);
  const ComplexMatrix A = qdiv::test::similar(U, {1.0, 1.0, 3.0, 3.0});
  const auto spec = cluster_spectrum(A);
  ASSERT_EQ(spec.clusters.size(), 2u);
  EXPECT_EQ(spec.clusters[0].multiplicity, 2);
  EXPECT_NEAR(spec.clusters[1].eigenvalue, 3.0, 1e-12);
  ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
  for (const auto& c : spec.clusters) sum += c.projection;
  EXPECT_LT((sum - ComplexMatrix::Identity(4, 4)).norm(), 1e-12);
  EXPECT_LT((spec.reconstruct() - A).norm(), 1e-12);
}

// --- spectral calculus ------------------------------------------------------

TEST(SpectralFn, SquareRootSquares) {
  SeededRng rng(21);
  for (int n = 1; n <= 6; ++n) {
    const ComplexMatrix A = random_positive_definite(n, 50.0, rng).matrix();
    const ComplexMatrix R = apply_spectral_fn(A, functions::power(0.5));
    EXPECT_LT((R * R - A).norm(), 1e-12 * A.norm());
  }
}

TEST(SpectralFn, XlogxOfMaximallyMixed) {
  const ComplexMatrix A = 0.5 * ComplexMatrix::Identity(2, 2);
  EXPECT_NEAR(trace_fn(A, functions::xlogx()), -std::log(2.0), 1e-15);
}

TEST(SpectralFn, DomainChecks) {
  EXPECT_THROW(apply_spectral_fn(diag({-1.0, 1.0}), functions::power(0.5)), DomainError);
  EXPECT_THROW(apply_spectral_fn(diag({0.0, 1.0}), functions::power(-1.0)), DomainError);
  // Round-off negatives are treated as zero.
  const ComplexMatrix R = apply_spectral_fn(diag({-1e-17, 1.0}), functions::power(0.5));
  EXPECT_EQ(R(0, 0), Complex(0.0));
}

TEST(SpectralFn, SupportPowerIsPseudoInverse) {
  SeededRng rng(8);
  const ComplexMatrix U = haar_unitary(3, rng);
  const ComplexMatrix A = qdiv::test::similar(U, {0.0, 0.5, 2.0});
  const ComplexMatrix Ainv = support_power(cluster_spectrum(A), -1.0);
  const ComplexMatrix expected = qdiv::test::similar(U, {0.0, 2.0, 0.5});
  EXPECT_LT((Ainv - expected).norm(), 1e-12);
}

TEST(Support, ProjectionAndBasis) {
  SeededRng rng(4);
  const ComplexMatrix U = haar_unitary(4, rng);
  const ComplexMatrix A = qdiv::test::similar(U, {0.0, 0.0, 0.3, 0.7});
  const auto supp = support_projection(A);
  EXPECT_EQ(supp.rank, 2);
  EXPECT_LT((supp.projection * A - A).norm(), 1e-12);
  const ComplexMatrix V = projection_basis(supp.projection);
  EXPECT_EQ(V.cols(), 2);
  EXPECT_LT((V * V.adjoint() - supp.projection).norm(), 1e-12);
  EXPECT_EQ(compress_to_support(A, supp.projection).rows(), 2);
  EXPECT_THROW(projection_basis(diag({0.5, 1.0})), ValidationError);
}

TEST(Polar, UnitaryTimesModulus) {
  SeededRng rng(17);
  for (int n = 1; n <= 5; ++n) {
    ComplexMatrix X = ginibre(n, rng);
    if (n >= 3) X.col(0) = X.col(1);  // singular
    const auto polar = polar_unitary(X);
    EXPECT_LT(unitarity_defect(polar.unitary), 1e-10);
    EXPECT_LT((polar.unitary * polar.modulus - X).norm(), 1e-10 * std::max(1.0, X.norm()));
  }
}

// --- superoperators ----------------------------------------------------------

TEST(Superop, LeftRightMultiplication) {
  SeededRng rng(9);
  for (int n = 1; n <= 4; ++n) {
    const ComplexMatrix A = ginibre(n, rng);
    const ComplexMatrix B = ginibre(n, rng);
    const ComplexMatrix T = ginibre(n, rng);
    const Superoperator lr = superop_lr(A, B);
    EXPECT_LT((lr.apply(T) - A * T * B).norm(), 1e-12 * (1 + (A * T * B).norm()));
    EXPECT_EQ(unvec(vec(T), n), T);
  }
}

TEST(Superop, KronBlocks) {
  ComplexMatrix X(2, 2), Y(2, 2);
  X << 1.0, 2.0, 3.0, 4.0;
  Y << 0.0, 1.0, 1.0, 0.0;
  const ComplexMatrix K = kron(X, Y);
  EXPECT_EQ(K.rows(), 4);
  EXPECT_EQ(K(0, 3), Complex(2.0 * 1.0));
  EXPECT_EQ(K(3, 0), Complex(3.0 * 1.0));
  EXPECT_EQ(K(2, 2), Complex(4.0 * 0.0));
}

// --- scalar functions ---------------------------------------------------------

TEST(ScalarFunction, PowerFamily) {
  const auto sqrt_fn = functions::power(0.5);
  EXPECT_EQ(sqrt_fn(0.0), 0.0);
  EXPECT_DOUBLE_EQ(sqrt_fn(4.0), 2.0);
  EXPECT_TRUE(sqrt_fn.gamma()->is_finite());
  EXPECT_EQ(sqrt_fn.gamma()->value(), 0.0);
  EXPECT_TRUE(functions::power(2.0).gamma()->is_infinite());
  const auto inv = functions::power(-1.0);
  EXPECT_THROW(inv(0.0), DomainError);
  EXPECT_TRUE(inv.limit_at_zero()->infinite);
  EXPECT_THROW(sqrt_fn(-1.0), DomainError);
}

TEST(ScalarFunction, LinearAndXlogx) {
  const auto f = functions::linear(2.0);
  EXPECT_EQ(f(0.0), -2.0);
  EXPECT_EQ(f(3.0), 4.0);
  EXPECT_EQ(f.gamma()->value(), 2.0);
  EXPECT_EQ(functions::xlogx()(0.0), 0.0);
  EXPECT_DOUBLE_EQ(functions::xlogx()(std::exp(1.0)), std::exp(1.0));
}

TEST(ScalarFunction, WrongFlagIsCaught) {
  ScalarFunctionSpec::Declaration d;
  d.name = "decreasing-claimed-increasing";
  d.evaluate = [](double t) { return 1.0 / t; };
  d.domain = Domain::Positive;
  d.flags.strictly_increasing = true;
  EXPECT_THROW(ScalarFunctionSpec{d}, DomainError);

  ScalarFunctionSpec::Declaration c;
  c.name = "concave-claimed-convex";
  c.evaluate = [](double t) { return std::sqrt(t); };
  c.domain = Domain::NonNegative;
  c.value_at_zero = 0.0;
  c.flags.strictly_convex = true;
  EXPECT_THROW(ScalarFunctionSpec{c}, DomainError);
}

// --- positive operators -------------------------------------------------------

TEST(PositiveOperator, Validation) {
  ComplexMatrix skew(2, 2);
  skew << 1.0, 1.0, 0.0, 1.0;
  EXPECT_THROW(PositiveOperator{skew}, ValidationError);
  EXPECT_THROW(PositiveOperator{diag({1.0, -0.5})}, ValidationError);
  EXPECT_THROW(DensityOperator{diag({0.5, 0.4})}, ValidationError);
  const DensityOperator rho(diag({0.5, 0.5}));
  EXPECT_TRUE(rho.definite());
  EXPECT_NEAR(rho.trace(), 1.0, 1e-15);
  EXPECT_EQ(DensityOperator(diag({1.0, 0.0})).rank(), 1);
}

TEST(PositiveOperator, SupportRelations) {
  const PositiveOperator e1(diag({1.0, 0.0, 0.0}));
  const PositiveOperator e2(diag({0.0, 1.0, 0.0}));
  const PositiveOperator e12(diag({0.5, 0.5, 0.0}));
  EXPECT_TRUE(support_contained(e1, e12));
  EXPECT_FALSE(support_contained(e12, e1));
  EXPECT_TRUE(supports_orthogonal(e1, e2));
  EXPECT_FALSE(supports_orthogonal(e1, e12));
}

TEST(PositiveOperator, SqrtSquares) {
  SeededRng rng(30);
  const auto A = random_density(4, 2, rng);
  const ComplexMatrix R = A.sqrt();
  EXPECT_LT((R * R - A.matrix()).norm(), 1e-12);
}
