#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "lqu/entanglement.hpp"
#include "lqu/error.hpp"
#include "lqu/lqu_core.hpp"
#include "lqu/random_states.hpp"
#include "test_util.hpp"

using namespace lqu;

namespace {

CMatrix random_unitary(random::Engine& rng, int d) {
  return Eigen::HouseholderQR<CMatrix>(random::ginibre(rng, d, d)).householderQ();
}

CMatrix werner(double p) {
  return p * projector(test::bell_vector()) + (1.0 - p) * CMatrix::Identity(4, 4) / 4.0;
}

}  // namespace

TEST(Wootters, BellState) {
  const ConcurrenceResult c = concurrence_wootters(DensityMatrix(projector(test::bell_vector()), {2, 2}));
  EXPECT_NEAR(c.value, 1.0, 1e-10);
  EXPECT_EQ(c.method, ConcurrenceMethod::wootters);
}

TEST(Wootters, ProductStatesAreSeparable) {
  random::Engine rng(1);
  for (int k = 0; k < 10; ++k) {
    const CMatrix rho = kron(random::mixed_state(rng, 2), random::mixed_state(rng, 2));
    EXPECT_NEAR(concurrence_wootters(DensityMatrix(rho, {2, 2})).value, 0.0, 1e-10);
  }
}

TEST(Wootters, WernerFamily) {
  // C = max(0, (3p − 1)/2).
  EXPECT_NEAR(concurrence_wootters(DensityMatrix(werner(1.0 / 3.0), {2, 2})).value, 0.0, 1e-10);
  EXPECT_NEAR(concurrence_wootters(DensityMatrix(werner(1.0 / 3.0), {2, 2})).raw, 0.0, 1e-10);
  for (double p : {0.2, 0.5, 0.8}) {
    EXPECT_NEAR(concurrence_wootters(DensityMatrix(werner(p), {2, 2})).value,
                std::max(0.0, 1.5 * p - 0.5), 1e-10);
  }
}

TEST(Wootters, RejectsNonQubitPairs) {
  try {
    concurrence_wootters(DensityMatrix(CMatrix::Identity(6, 6) / 6.0, {2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::shape);
  }
}

TEST(Wootters, LocalUnitaryInvariance) {
  random::Engine rng(2);
  for (int k = 0; k < 10; ++k) {
    const CMatrix rho = random::mixed_state(rng, 4);
    const CMatrix u = kron(random_unitary(rng, 2), random_unitary(rng, 2));
    const double a = concurrence_wootters(DensityMatrix(rho, {2, 2})).value;
    const double b = concurrence_wootters(DensityMatrix(hermitize(u * rho * u.adjoint()), {2, 2})).value;
    EXPECT_NEAR(a, b, 1e-10);
  }
}

TEST(XStateConcurrence, MatchesWootters) {
  random::Engine rng(3);
  for (int k = 0; k < 100; ++k) {
    const XStateEntries x = random::x_state(rng);
    const ConcurrenceResult fast = concurrence_x_state(x);
    const ConcurrenceResult slow = concurrence_wootters(DensityMatrix(x.matrix(), {2, 2}));
    EXPECT_NEAR(fast.value, slow.value, 1e-10);
    EXPECT_EQ(fast.method, ConcurrenceMethod::x_state);
  }
}

TEST(XStateConcurrence, RejectsUnnormalizedEntries) {
  XStateEntries x;
  x.A = x.B_plus = x.B_minus = 1.0;
  x.D = 0.3;
  EXPECT_THROW(concurrence_x_state(x), Error);
}

TEST(LinearEntropy, Examples) {
  CVector product = CVector::Zero(4);
  product(0) = 1.0;
  EXPECT_NEAR(linear_entropy_of_entanglement(product), 0.0, 1e-15);
  EXPECT_NEAR(linear_entropy_of_entanglement(test::bell_vector()), 1.0, 1e-15);
  const double t = std::numbers::pi / 8.0;
  CVector schmidt = CVector::Zero(4);
  schmidt(0) = std::cos(t);
  schmidt(3) = std::sin(t);
  EXPECT_NEAR(linear_entropy_of_entanglement(schmidt), 0.5, 1e-15);
}

TEST(LinearEntropy, RequiresNormalizedVector) {
  CVector v = CVector::Zero(4);
  v(0) = 1.1;
  EXPECT_THROW(linear_entropy_of_entanglement(v), Error);
}

TEST(PureStates, LquEqualsLinearEntropyEqualsConcurrenceSquared) {
  random::Engine rng(4);
  const GeneratorSet g = build_generators(2);
  for (int k = 0; k < 20; ++k) {
    const CVector psi = random::pure_state(rng, 4);
    const DensityMatrix rho(projector(psi), {2, 2});
    const double lin = linear_entropy_of_entanglement(psi);
    const double c = concurrence_wootters(rho).value;
    EXPECT_NEAR(lqu_exact(rho, g).value, lin, 1e-10);
    EXPECT_NEAR(lin, c * c, 1e-10);
  }
}
