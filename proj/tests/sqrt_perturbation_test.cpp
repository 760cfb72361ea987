#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lqu/error.hpp"
#include "lqu/heisenberg.hpp"
#include "lqu/quantum_state.hpp"
#include "lqu/random_states.hpp"
#include "lqu/sqrt_perturbation.hpp"
#include "test_util.hpp"

using namespace lqu;
using lqu::test::diag;
using lqu::test::near;

TEST(ExactSqrt, Examples) {
  EXPECT_TRUE(near(exact_sqrt(diag({0.25, 0.75})), diag({0.5, std::sqrt(0.75)}), 1e-15));
  EXPECT_TRUE(near(exact_sqrt(CMatrix::Identity(4, 4) / 4.0), CMatrix::Identity(4, 4) / 2.0, 1e-15));
  const CMatrix singlet = projector(test::singlet_vector());
  EXPECT_TRUE(near(exact_sqrt(singlet), singlet, 1e-14));
}

TEST(ExactSqrt, SquaresBack) {
  random::Engine rng(2);
  const CMatrix rho = random::mixed_state(rng, 6);
  const CMatrix s = exact_sqrt(rho);
  EXPECT_TRUE(near(s * s, rho, 1e-14));
  EXPECT_LE(hermiticity_residual(s), 1e-15);
}

TEST(ExactSqrt, ClampsNoiseButRejectsNegativeStates) {
  CMatrix m = diag({0.5, 0.5, -1e-12, 0.0});
  EXPECT_NO_THROW(exact_sqrt(m));
  try {
    exact_sqrt(diag({0.6, 0.6, -0.1, -0.1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_state);
  }
}

TEST(DividedDifference, Examples) {
  EXPECT_NEAR(divided_difference(0.81, 0.04).value, 1.0 / 1.1, 1e-15);
  EXPECT_NEAR(divided_difference(0.25, 0.25).value, 1.0, 1e-15);
  const KernelValue z = divided_difference(0.0, 0.0);
  EXPECT_EQ(z.value, 0.0);
  EXPECT_TRUE(z.singular);
  EXPECT_FALSE(divided_difference(0.81, 0.04).singular);
}

TEST(DividedDifference, MatchesRatioAwayFromDegeneracy) {
  for (auto [a, b] : {std::pair{0.3, 0.1}, std::pair{0.9, 0.01}, std::pair{1e-6, 0.5}}) {
    const double ratio = (std::sqrt(a) - std::sqrt(b)) / (a - b);
    EXPECT_NEAR(divided_difference(a, b).value, ratio, 1e-12 * ratio);
  }
}

TEST(DividedDifference, OneZeroEigenvalueIsRegular) {
  const KernelValue k = divided_difference(0.0, 0.25);
  EXPECT_NEAR(k.value, 2.0, 1e-15);
  EXPECT_FALSE(k.singular);
}

TEST(DividedDifference, NegativeInputThrows) {
  try {
    divided_difference(-0.1, 0.2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(PerturbativeSqrt, ZeroPerturbation) {
  random::Engine rng(4);
  const SpectralData s = eig_hermitian(random::full_rank_state(rng, 4));
  const SqrtExpansion ex = perturbative_sqrt(s, PerturbationMatrix(CMatrix::Zero(4, 4), 0.1, {2, 2}));
  EXPECT_LE(ex.rho1e.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_FALSE(ex.kernel_singular);
}

TEST(PerturbativeSqrt, DiagonalCaseUsesDerivative) {
  const SpectralData s = eig_hermitian(diag({0.1, 0.2, 0.3, 0.4}));
  const CMatrix c = diag({0.05, -0.02, 0.01, -0.04});
  const SqrtExpansion ex = perturbative_sqrt(s, PerturbationMatrix(c, 1.0, {2, 2}));
  const CMatrix expect = diag({0.05 / (2 * std::sqrt(0.1)), -0.02 / (2 * std::sqrt(0.2)),
                               0.01 / (2 * std::sqrt(0.3)), -0.04 / (2 * std::sqrt(0.4))});
  EXPECT_TRUE(near(ex.rho1e, expect, 1e-15));
}

TEST(PerturbativeSqrt, SolvesSylvesterEquation) {
  // √ρ0·X + X·√ρ0 = ρ1 defines the derivative of the square root.
  random::Engine rng(8);
  const CMatrix rho0 = random::full_rank_state(rng, 4);
  const CMatrix rho1 = random::traceless_hermitian(rng, 4);
  const SqrtExpansion ex = perturbative_sqrt(eig_hermitian(rho0), PerturbationMatrix(rho1, 1.0, {2, 2}));
  EXPECT_TRUE(near(ex.sqrt_rho0 * ex.rho1e + ex.rho1e * ex.sqrt_rho0, rho1, 1e-13));
  EXPECT_LE(hermiticity_residual(ex.rho1e), 1e-15);
}

TEST(PerturbativeSqrt, ErrorIsSecondOrder) {
  random::Engine rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix rho0 = random::full_rank_state(rng, 4);
    const CMatrix rho1 = random::traceless_hermitian(rng, 4);
    const SpectralData s = eig_hermitian(rho0);
    auto scaled_err = [&](double eps) {
      const SqrtExpansion ex = perturbative_sqrt(s, PerturbationMatrix(rho1, eps, {2, 2}));
      return (exact_sqrt(CMatrix(rho0 + eps * rho1)) - ex.evaluate()).norm() / (eps * eps);
    };
    const double hi = scaled_err(1e-2);
    const double lo = scaled_err(1e-4);
    EXPECT_LT(std::max(hi, lo) / std::min(hi, lo), 2.0);
  }
}

TEST(PerturbativeSqrt, BasisCovariantInDegenerateBlocks) {
  // Heisenberg thermal state: a three-fold degenerate triplet weight.
  const SpectralData h = eig_hermitian(heisenberg::hamiltonian_matrix(0.5));
  const SpectralData s = thermal_spectrum(h, 1.5);
  random::Engine rng(21);
  const CMatrix rho1 = random::traceless_hermitian(rng, 4);
  const SqrtExpansion a = perturbative_sqrt(s, PerturbationMatrix(rho1, 1.0, {2, 2}));

  // Remix the degenerate triplet columns with a random unitary.
  SpectralData t = s;
  std::vector<int> block;
  for (int k = 0; k < 4; ++k) {
    const auto same = std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                    [&](double v) { return std::abs(v - s.eigenvalues(k)) < 1e-14; });
    if (same == 3) block.push_back(k);
  }
  ASSERT_EQ(block.size(), 3u);
  const CMatrix g = random::ginibre(rng, 3, 3);
  const CMatrix u = Eigen::HouseholderQR<CMatrix>(g).householderQ();
  CMatrix cols(4, 3);
  for (int c = 0; c < 3; ++c) cols.col(c) = s.eigenvectors.col(block[c]);
  const CMatrix mixed = cols * u;
  for (int c = 0; c < 3; ++c) t.eigenvectors.col(block[c]) = mixed.col(c);

  const SqrtExpansion b = perturbative_sqrt(t, PerturbationMatrix(rho1, 1.0, {2, 2}));
  EXPECT_TRUE(near(a.rho1e, b.rho1e, 1e-10));
  EXPECT_TRUE(near(a.sqrt_rho0, b.sqrt_rho0, 1e-14));
}

TEST(PerturbativeSqrt, FlagsWeightOnTheKernel) {
  const SpectralData s = eig_hermitian(diag({0.5, 0.5, 0.0, 0.0}));
  CMatrix rho1 = CMatrix::Zero(4, 4);
  rho1(2, 3) = rho1(3, 2) = 0.1;
  EXPECT_TRUE(perturbative_sqrt(s, PerturbationMatrix(rho1, 1.0, {2, 2})).kernel_singular);

  CMatrix inside = CMatrix::Zero(4, 4);
  inside(0, 1) = inside(1, 0) = 0.1;
  EXPECT_FALSE(perturbative_sqrt(s, PerturbationMatrix(inside, 1.0, {2, 2})).kernel_singular);
}
