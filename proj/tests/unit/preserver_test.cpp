#include "support.hpp"

#include "qdiv/linalg.hpp"
#include "qdiv/preserver.hpp"
#include "qdiv/wigner.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qdiv;
using qdiv::test::diag;

namespace {

DivergenceSpec sandwiched(double alpha) {
  return {DivergenceTag::Sandwiched, alpha, std::nullopt, std::nullopt};
}

std::vector<DivergenceSpec> all_divergences() {
  return {
      {DivergenceTag::Umegaki, 2.0, std::nullopt, std::nullopt},
      {DivergenceTag::Renyi, 0.5, std::nullopt, std::nullopt},
      {DivergenceTag::Renyi, 2.0, std::nullopt, std::nullopt},
      sandwiched(0.5),
      sandwiched(3.0),
      {DivergenceTag::SandwichedCore, 2.0, std::nullopt, std::nullopt},
      {DivergenceTag::FDiv, 2.0, functions::xlogx(), std::nullopt},
      {DivergenceTag::FDiv, 2.0, functions::power(0.5), std::nullopt},
      {DivergenceTag::DFG, 2.0, functions::power(2.0), functions::power(0.5)},
      {DivergenceTag::DFG, 2.0, functions::power(-0.5), functions::power(1.0)},
  };
}

}  // namespace

TEST(DivergenceTag, RoundTrip) {
  for (const char* name : {"umegaki", "renyi", "sandwiched", "sandwiched-core", "fdiv", "dfg"}) {
    const auto tag = parse_divergence_tag(name);
    ASSERT_TRUE(tag.has_value()) << name;
    EXPECT_EQ(to_string(*tag), name);
  }
  EXPECT_FALSE(parse_divergence_tag("kl").has_value());
  DivergenceSpec missing{DivergenceTag::FDiv, 2.0, std::nullopt, std::nullopt};
  EXPECT_THROW(missing.validate(), DomainError);
  EXPECT_THROW(sandwiched(1.0).validate(), DomainError);
}

TEST(Invariance, ConjugationsPreserveEveryDivergence) {
  SeededRng rng(600);
  for (int n = 2; n <= 3; ++n) {
    const StateMap maps[] = {StateMap::unitary(haar_unitary(n, rng)), random_antiunitary(n, rng)};
    for (const auto& map : maps) {
      for (const auto& div : all_divergences()) {
        const InvarianceReport r = check_invariance(map, div, 60, 17, 1e-8);
        EXPECT_EQ(r.samples, 60u);
        EXPECT_EQ(r.infinity_mismatches, 0u) << div.describe();
        EXPECT_LE(r.max_abs_deviation, 1e-8) << div.describe();
        EXPECT_FALSE(r.witness.has_value()) << div.describe();
      }
    }
  }
}

TEST(Invariance, IdentityHasZeroDeviation) {
  const InvarianceReport r = check_invariance(StateMap::identity(3), sandwiched(2.0), 50, 3, 1e-12);
  EXPECT_EQ(r.max_abs_deviation, 0.0);
  EXPECT_TRUE(r.passed());
}

TEST(Invariance, MixedRanksReachBothBranches) {
  // Rank-one and intermediate samples make alpha > 1 infinite on some pairs.
  std::size_t infinite = 0;
  const auto div = sandwiched(2.0);
  SeededRng rng(5);
  const StateMap map = StateMap::identity(3);
  const InvarianceReport r = check_invariance(map, div, 30, 5, 1e-9);
  EXPECT_TRUE(r.passed());
  for (int k = 0; k < 30; ++k) {
    const DensityOperator A = random_density(3, 1 + k % 3, rng);
    const DensityOperator B = random_density(3, 1 + (k / 3) % 3, rng);
    if (div.evaluate(A, B).is_infinite()) ++infinite;
  }
  EXPECT_GT(infinite, 0u);
}

TEST(Invariance, DepolarizingChannelIsCaught) {
  const StateMap channel = StateMap::depolarizing_qubit(0.5);
  const InvarianceReport r = check_invariance(channel, sandwiched(2.0), 200, 7, 1e-9);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GT(r.witness->deviation, 1e-3);
  // The witness re-evaluates to the reported values.
  const DivergenceSpec d = sandwiched(2.0);
  const DensityOperator A(r.witness->A), B(r.witness->B);
  EXPECT_EQ(d.evaluate(A, B), r.witness->before);
}

TEST(Invariance, TabulatedMap) {
  SeededRng rng(601);
  const ComplexMatrix U = haar_unitary(2, rng);
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> table;
  for (int k = 0; k < 4; ++k) {
    const ComplexMatrix rho = random_density(2, 1 + k % 2, rng).matrix();
    table.emplace_back(rho, U * rho * U.adjoint());
  }
  const InvarianceReport good = check_invariance(StateMap::tabulated(table), sandwiched(0.5), 100, 0, 1e-9);
  EXPECT_EQ(good.samples, 16u);
  EXPECT_TRUE(good.passed());

  table[1].second = table[2].second;
  const InvarianceReport bad = check_invariance(StateMap::tabulated(table), sandwiched(0.5), 100, 0, 1e-9);
  EXPECT_FALSE(bad.passed());
}

TEST(Invariance, NonDensityOutputIsRejected) {
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> table = {
      {diag({1.0, 0.0}), diag({2.0, 0.0})}};
  EXPECT_THROW(check_invariance(StateMap::tabulated(table), sandwiched(2.0), 1, 0, 1e-9),
               ValidationError);
}

TEST(StateMapKinds, Validation) {
  EXPECT_THROW(StateMap::unitary(diag({1.0, 2.0})), ValidationError);
  EXPECT_THROW(StateMap::kraus({diag({1.0, 0.5})}), ValidationError);
  EXPECT_THROW(StateMap::identity(2).apply(diag({1.0, 0.0, 0.0})), DimensionError);
  const StateMap dep = StateMap::depolarizing_qubit(1.0);
  EXPECT_LT((dep.apply(diag({1.0, 0.0})) - diag({0.5, 0.5})).norm(), 1e-15);
}

// --- Wigner reconstruction ------------------------------------------------------

TEST(Wigner, ProbeInputs) {
  const auto probes = wigner_probe_inputs(3);
  ASSERT_EQ(probes.size(), 3u + 2u + 1u);
  EXPECT_EQ(probes[0].label, "E1");
  EXPECT_EQ(probes[3].label, "F2");
  EXPECT_EQ(probes.back().label, "G");
  EXPECT_EQ(wigner_probe_inputs(1).size(), 1u);
}

TEST(Wigner, IdentityGivesIdentity) {
  const auto rec = wigner_reconstruct(wigner_images(StateMap::identity(3)));
  EXPECT_FALSE(rec.antiunitary);
  EXPECT_LT(rec.residual, 1e-10);
  EXPECT_LT((rec.unitary - ComplexMatrix::Identity(3, 3)).norm(), 1e-10);
}

TEST(Wigner, HaarRoundTrip) {
  SeededRng rng(700);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = 1 + trial % 4;
    const bool anti = trial % 2 == 1;
    const ComplexMatrix U0 = haar_unitary(n, rng);
    const StateMap map = anti ? StateMap::antiunitary(U0) : StateMap::unitary(U0);
    const auto rec = wigner_reconstruct(wigner_images(map));
    EXPECT_LT(rec.residual, 1e-8);
    if (n >= 2) {
      EXPECT_EQ(rec.antiunitary, anti);
    }
    // Global phase convention: first entry of the first column real positive.
    EXPECT_GT(rec.unitary(0, 0).real(), 0.0);
    EXPECT_NEAR(rec.unitary(0, 0).imag(), 0.0, 1e-14);
    const auto v = verify_conjugation(map, rec.unitary, rec.antiunitary, 50, trial, 1e-8);
    EXPECT_TRUE(v.passed) << v.max_deviation;
  }
}

TEST(Wigner, TransposeIsAntiunitary) {
  const auto rec = wigner_reconstruct(wigner_images(StateMap::transpose(3)));
  EXPECT_TRUE(rec.antiunitary);
  EXPECT_LT(rec.residual, 1e-10);
}

TEST(Wigner, TamperedImagesNamePair) {
  auto images = wigner_images(StateMap::identity(3));
  images[3].projection = images[1].projection;  // F2 replaced by E2
  try {
    wigner_reconstruct(images);
    FAIL() << "expected NoRepresentationError";
  } catch (const NoRepresentationError& e) {
    EXPECT_EQ(e.first(), "E1");
    EXPECT_EQ(e.second(), "F2");
  }
}

TEST(Wigner, NonProjectionRejected) {
  auto images = wigner_images(StateMap::identity(2));
  images[0].projection *= 0.5;
  EXPECT_THROW(wigner_reconstruct(images), ValidationError);
  images.pop_back();
  EXPECT_THROW(wigner_reconstruct(images), ValidationError);
}

// --- verify_conjugation, orthogonality -------------------------------------------

TEST(VerifyConjugation, PhaseAndMismatch) {
  SeededRng rng(800);
  const ComplexMatrix U0 = haar_unitary(3, rng);
  const StateMap map = StateMap::unitary(U0);
  EXPECT_LT(verify_conjugation(map, U0, false, 20, 1, 1e-10).max_deviation, 1e-10);
  const ComplexMatrix phased = U0 * std::polar(1.0, 0.7);
  EXPECT_LT(verify_conjugation(map, phased, false, 20, 1, 1e-10).max_deviation, 1e-10);
  const auto other = verify_conjugation(map, haar_unitary(3, rng), false, 20, 1, 1e-8);
  EXPECT_GT(other.max_deviation, 0.1);
  EXPECT_FALSE(other.passed);
  EXPECT_THROW(verify_conjugation(map, diag({1.0, 1.0, 2.0}), false, 1, 1, 1e-8), ValidationError);
}

TEST(Orthogonality, MatchesProduct) {
  const auto f = functions::power(1.0);
  const auto g = functions::power(1.0);
  EXPECT_TRUE(orthogonality_indicator(DensityOperator(diag({1.0, 0.0})),
                                      DensityOperator(diag({0.0, 1.0})), f, g));
  const DensityOperator half(diag({0.5, 0.5}));
  EXPECT_FALSE(orthogonality_indicator(half, half, f, g));

  SeededRng rng(900);
  for (int k = 0; k < 40; ++k) {
    const DensityOperator A = random_density(3, 1, rng);
    const DensityOperator B = random_density(3, 1 + k % 2, rng);
    const bool product_zero = (A.matrix() * B.matrix()).norm() <= 1e-10;
    EXPECT_EQ(orthogonality_indicator(A, B, f, g), product_zero);
    EXPECT_FALSE(product_zero);
  }
  EXPECT_THROW(orthogonality_indicator(half, half, functions::power(-1.0), g), DomainError);
  EXPECT_THROW(orthogonality_indicator(half, half, f, functions::xlogx()), DomainError);
}
