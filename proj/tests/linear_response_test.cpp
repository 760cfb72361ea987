#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "lqu/error.hpp"
#include "lqu/heisenberg.hpp"
#include "lqu/linear_response.hpp"
#include "lqu/random_states.hpp"
#include "test_util.hpp"

using namespace lqu;
using lqu::test::near;

namespace {

struct RandomSystem {
  SpectralData h;
  RVector weights;
  DriveSpec drive;
};

RandomSystem random_system(random::Engine& rng, Bipartition p, double beta) {
  RandomSystem s;
  s.h = eig_hermitian(random::traceless_hermitian(rng, p.total()));
  s.weights = thermal_weights(s.h, beta);
  std::uniform_real_distribution<double> u(0.05, 1.5);
  s.drive = DriveSpec{random::traceless_hermitian(rng, p.total()), 0.03, u(rng), 0.2};
  return s;
}

}  // namespace

TEST(SpectralFunction, ResonantPoint) {
  const cplx f = spectral_function(0.5, 0.0, 0.5, 0.2);
  // 1/(−iδ) + 1/(2J − iδ) with J = 0.5, δ = 0.2.
  EXPECT_NEAR(f.real(), 1.0 / 1.04, 1e-12);
  EXPECT_NEAR(f.imag(), 5.0 + 0.2 / 1.04, 1e-12);
  EXPECT_NEAR(f.real(), 0.961538, 1e-6);
  EXPECT_NEAR(f.imag(), 5.192308, 1e-6);
}

TEST(SpectralFunction, StaticLimit) {
  const cplx f = spectral_function(0.7, 0.2, 0.0, 1e-9);
  EXPECT_NEAR(f.real(), 2.0 / 0.5, 1e-6);
  EXPECT_NEAR(spectral_function_undamped(0.7, 0.2, 0.0), 4.0, 1e-15);
}

TEST(SpectralFunction, AntisymmetryUnderConjugation) {
  random::Engine rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const double en = u(rng);
    const double em = u(rng);
    const double w = std::abs(u(rng));
    const double d = 0.01 + std::abs(u(rng));
    const cplx lhs = spectral_function(en, em, w, d);
    const cplx rhs = -std::conj(spectral_function(em, en, w, d));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(SpectralFunction, DomainErrors) {
  EXPECT_THROW(spectral_function(0.5, 0.0, 0.5, 0.0), Error);
  EXPECT_THROW(spectral_function(0.5, 0.0, 0.5, -0.1), Error);
  try {
    spectral_function_undamped(0.5, 0.0, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(DriveSpec, Validation) {
  DriveSpec d{two_qubit_operator("sz1"), 0.05, 0.5, 0.2};
  EXPECT_NO_THROW(d.validate());
  d.delta = 0.0;
  EXPECT_THROW(d.validate(), Error);
  d.delta = 0.2;
  d.omega = -1.0;
  EXPECT_THROW(d.validate(), Error);
  d.omega = 0.5;
  d.op(0, 1) = 1.0;
  EXPECT_THROW(d.validate(), Error);
}

TEST(TwoQubitOperators, Names) {
  EXPECT_TRUE(near(two_qubit_operator("sz1"), kron(pauli_z(), CMatrix::Identity(2, 2)), 0.0));
  EXPECT_TRUE(near(two_qubit_operator("sy2"), kron(CMatrix::Identity(2, 2), pauli_y()), 0.0));
  EXPECT_TRUE(is_two_qubit_operator_name("sx2"));
  EXPECT_FALSE(is_two_qubit_operator_name("sz3"));
  try {
    two_qubit_operator("sz3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::input);
  }
}

TEST(Rho1Driven, HermitianAndTraceless) {
  random::Engine rng(2);
  for (Bipartition p : {Bipartition{2, 2}, Bipartition{3, 2}, Bipartition{2, 3}}) {
    const RandomSystem s = random_system(rng, p, 1.3);
    const PerturbationMatrix r = rho1_driven(s.h, s.weights, s.drive, p);
    EXPECT_LE(hermiticity_residual(r.data()), 1e-12);
    EXPECT_LE(std::abs(r.data().trace()), 1e-12);
    EXPECT_EQ(r.epsilon(), s.drive.xi);
  }
}

TEST(Rho1Driven, IdentityDriveAndInfiniteTemperatureVanish) {
  random::Engine rng(3);
  RandomSystem s = random_system(rng, {2, 2}, 1.0);
  s.drive.op = 0.7 * CMatrix::Identity(4, 4);
  EXPECT_LE(rho1_driven(s.h, s.weights, s.drive, {2, 2}).data().cwiseAbs().maxCoeff(), 1e-15);

  RandomSystem hot = random_system(rng, {2, 2}, 0.0);
  EXPECT_LE(rho1_driven(hot.h, hot.weights, hot.drive, {2, 2}).data().cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Rho1Driven, MatrixElementsInTheEnergyBasis) {
  random::Engine rng(4);
  const RandomSystem s = random_system(rng, {2, 2}, 0.8);
  const CMatrix in_basis = s.h.to_eigenbasis(rho1_driven(s.h, s.weights, s.drive, {2, 2}).data());
  const CMatrix a = s.h.to_eigenbasis(s.drive.op);
  for (int n = 0; n < 4; ++n) {
    for (int m = 0; m < 4; ++m) {
      const cplx expect = a(n, m) * (s.weights(m) - s.weights(n)) *
                          spectral_function(s.h.eigenvalues(n), s.h.eigenvalues(m), s.drive.omega,
                                            s.drive.delta);
      EXPECT_NEAR(std::abs(in_basis(n, m) - expect), 0.0, 1e-13);
    }
  }
}

TEST(W1Driven, RouteEquivalence) {
  random::Engine rng(5);
  for (Bipartition p : {Bipartition{2, 2}, Bipartition{3, 2}, Bipartition{2, 3}, Bipartition{3, 3}}) {
    const GeneratorSet g = build_generators(p.d1);
    for (int trial = 0; trial < 3; ++trial) {
      const RandomSystem s = random_system(rng, p, 1.1);
      const CMatrix direct = build_w1_driven(s.h, s.weights, s.drive, g, p.d2);
      const PerturbationMatrix rho1 = rho1_driven(s.h, s.weights, s.drive, p);

      const SpectralData rho0_spec = thermal_spectrum(s.h, 1.1);
      EXPECT_TRUE(near(direct, build_w1_general(rho0_spec, rho1, g).w1, 1e-12));

      const CMatrix rho0 = s.h.eigenvectors * s.weights.cast<cplx>().asDiagonal() * s.h.eigenvectors.adjoint();
      EXPECT_TRUE(near(direct, build_w1_general(eig_hermitian(hermitize(rho0)), rho1, g).w1, 1e-12));
    }
  }
}

TEST(W1Driven, ZeroDriveStrength) {
  random::Engine rng(6);
  RandomSystem s = random_system(rng, {2, 2}, 1.0);
  s.drive.xi = 0.0;
  EXPECT_LE(build_w1_driven(s.h, s.weights, s.drive, build_generators(2), 2).cwiseAbs().maxCoeff(), 0.0);
}

TEST(W1Driven, HeisenbergStructure) {
  const heisenberg::Params p{0.5, 0.5, 0.05, 0.2, 0.5};
  const SpectralData h = eig_hermitian(heisenberg::hamiltonian_matrix(p.J));
  const RVector w = thermal_weights(h, p.beta());
  const DriveSpec d{two_qubit_operator("sz1"), p.xi, p.omega, p.delta};
  const CMatrix w1 = build_w1_driven(h, w, d, build_generators(2), 2);
  const auto cf = heisenberg::closed_form_w(p);
  const cplx off = cplx(0.0, 4.0 * p.xi * cf.e_plus * cf.re_f21);
  CMatrix expect = CMatrix::Zero(3, 3);
  expect(1, 0) = off;
  expect(0, 1) = -off;
  EXPECT_TRUE(near(w1, expect, 1e-14));
}

TEST(W1Driven, AllLocalDrivesGiveTheSameSpectrum) {
  const heisenberg::Params p{0.5, 0.7, 0.05, 0.2, 0.35};
  const RVector ref = heisenberg::pipeline_lqu(p, two_qubit_operator("sz1")).w_eigenvalues;
  for (const char* name : {"sx1", "sy1", "sx2", "sy2", "sz2"}) {
    const LquResult r = heisenberg::pipeline_lqu(p, two_qubit_operator(name));
    EXPECT_LE((r.w_eigenvalues - ref).cwiseAbs().maxCoeff(), 1e-14) << name;
  }
  // Different drives populate different entries.
  const CMatrix wz = heisenberg::pipeline_lqu(p, two_qubit_operator("sz1")).w.w1;
  const CMatrix wx = heisenberg::pipeline_lqu(p, two_qubit_operator("sx1")).w.w1;
  EXPECT_GT((wz - wx).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(LquDriven, MatchesGeneralPerturbativeRoute) {
  random::Engine rng(7);
  for (Bipartition p : {Bipartition{2, 2}, Bipartition{3, 2}}) {
    const GeneratorSet g = build_generators(p.d1);
    const RandomSystem s = random_system(rng, p, 0.9);
    const LquResult a = lqu_driven(s.h, s.weights, s.drive, g, p.d2);
    const LquResult b = lqu_perturbative(thermal_spectrum(s.h, 0.9), rho1_driven(s.h, s.weights, s.drive, p), g);
    EXPECT_NEAR(a.value, b.value, 1e-12);
    EXPECT_EQ(a.mode, LquMode::perturbative_driven);
  }
}
