#include <cmath>

#include <gtest/gtest.h>

#include "lqu/error.hpp"
#include "lqu/heisenberg.hpp"
#include "lqu/quantum_state.hpp"
#include "lqu/random_states.hpp"
#include "lqu/su_algebra.hpp"
#include "test_util.hpp"

using namespace lqu;
using lqu::test::near;

TEST(Generators, QubitBasisIsPauli) {
  const GeneratorSet g = build_generators(2);
  ASSERT_EQ(g.size(), 3);
  EXPECT_TRUE(near(g[0], pauli_x(), 0.0));
  EXPECT_TRUE(near(g[1], pauli_y(), 0.0));
  EXPECT_TRUE(near(g[2], pauli_z(), 0.0));
}

TEST(Generators, NormalizationAndTracelessness) {
  for (int d = 2; d <= 5; ++d) {
    const GeneratorSet g = build_generators(d);
    ASSERT_EQ(g.size(), d * d - 1);
    for (int i = 0; i < g.size(); ++i) {
      EXPECT_NEAR(std::abs(g[i].trace()), 0.0, 1e-15);
      EXPECT_NEAR(hermiticity_residual(g[i]), 0.0, 0.0);
      for (int j = 0; j < g.size(); ++j) {
        EXPECT_NEAR(std::abs((g[i] * g[j]).trace() - cplx(i == j ? 2.0 : 0.0)), 0.0, 1e-14);
      }
    }
  }
}

TEST(Generators, RejectsDimensionBelowTwo) {
  EXPECT_THROW(build_generators(1), Error);
  try {
    build_generators(0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_dimension);
  }
}

TEST(StructureConstants, Su2IsLeviCivita) {
  const GeneratorSet g = build_generators(2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const double eps = (i - j) * (j - k) * (k - i) / 2.0;
        EXPECT_NEAR(g.f(i, j, k), eps, 1e-14);
        EXPECT_NEAR(g.g(i, j, k), 0.0, 1e-14);
      }
    }
  }
  EXPECT_TRUE(g.symmetric_constants_vanish());
}

TEST(StructureConstants, Su3KnownValues) {
  const GeneratorSet g = build_generators(3);
  // 1-based (1,2,3), (1,1,8), (4,5,8).
  EXPECT_NEAR(g.f(0, 1, 2), 1.0, 1e-14);
  EXPECT_NEAR(g.g(0, 0, 7), 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(g.g(3, 4, 7), 0.0, 1e-14);
  EXPECT_NEAR(g.g(3, 3, 7), -1.0 / (2.0 * std::sqrt(3.0)), 1e-14);
  EXPECT_NEAR(g.f(3, 4, 7), std::sqrt(3.0) / 2.0, 1e-14);
  EXPECT_FALSE(g.symmetric_constants_vanish());
}

TEST(StructureConstants, SymmetriesHoldExactly) {
  for (int d = 2; d <= 4; ++d) {
    const GeneratorSet g = build_generators(d);
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          EXPECT_EQ(g.f(i, j, k), -g.f(j, i, k));
          EXPECT_EQ(g.g(i, j, k), g.g(j, i, k));
        }
      }
    }
  }
}

TEST(StructureConstants, FreeFunctionMatchesGeneratorSet) {
  const GeneratorSet g = build_generators(3);
  const StructureConstants sc = structure_constants(g.generators());
  ASSERT_EQ(sc.n, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      for (int k = 0; k < 8; ++k) {
        EXPECT_EQ(sc.f_at(i, j, k), g.f(i, j, k));
        EXPECT_EQ(sc.g_at(i, j, k), g.g(i, j, k));
      }
    }
  }
}

TEST(StructureConstants, ProductRuleReconstructsProducts) {
  for (int d = 2; d <= 5; ++d) {
    EXPECT_LE(product_rule_residual(build_generators(d)), 1e-12) << "d=" << d;
  }
}

TEST(BlochVector, MaximallyMixedIsZero) {
  const GeneratorSet g = build_generators(3);
  const CMatrix rho = CMatrix::Identity(6, 6) / 6.0;
  EXPECT_LE(bloch_vector(rho, g, 2).components.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BlochVector, UpStateTimesMixed) {
  const GeneratorSet g = build_generators(2);
  CMatrix up = CMatrix::Zero(2, 2);
  up(0, 0) = 1.0;
  const CMatrix rho = kron(up, CMatrix::Identity(2, 2) / 2.0);
  const CVector v = bloch_vector(rho, g, 2).components;
  EXPECT_NEAR(std::abs(v(0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v(1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v(2) - 1.0), 0.0, 1e-15);
}

TEST(BlochVector, HeisenbergThermalStateHasNoLocalPolarization) {
  const GeneratorSet g = build_generators(2);
  for (double T : {0.1, 0.5, 2.0}) {
    for (double J : {0.5, 1.3}) {
      const DensityMatrix rho = thermal_state(heisenberg::hamiltonian(J), 1.0 / T);
      EXPECT_LE(bloch_vector(rho.data(), g, 2).components.cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(BlochVector, IsLinear) {
  random::Engine rng(11);
  const GeneratorSet g = build_generators(3);
  const CMatrix a = random::mixed_state(rng, 6);
  const CMatrix b = random::traceless_hermitian(rng, 6);
  const double s = 0.37;
  const CVector lhs = bloch_vector(a + s * b, g, 2).components;
  const CVector rhs = bloch_vector(a, g, 2).components + s * bloch_vector(b, g, 2).components;
  EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BlochVector, CarriesSourceTag) {
  const GeneratorSet g = build_generators(2);
  const auto v = bloch_vector(CMatrix::Zero(4, 4), g, 2, BlochSource::perturbation);
  EXPECT_EQ(v.source, BlochSource::perturbation);
}

TEST(BlochVector, ShapeMismatchThrows) {
  const GeneratorSet g = build_generators(2);
  try {
    bloch_vector(CMatrix::Identity(5, 5), g, 2);
    FAIL() << "expected a shape error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::shape);
  }
}

TEST(ContractSymmetric, FastPathGivesIdenticalResult) {
  random::Engine rng(5);
  for (int d : {2, 3}) {
    const GeneratorSet g = build_generators(d);
    const CVector v = random::ginibre(rng, g.size(), 1).col(0);
    const CMatrix fast = contract_symmetric(g, v, true);
    const CMatrix slow = contract_symmetric(g, v, false);
    EXPECT_TRUE(near(fast, slow, 0.0)) << "d=" << d;
  }
}
