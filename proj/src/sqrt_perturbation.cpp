#include "lqu/sqrt_perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lqu/error.hpp"

namespace lqu {

namespace {

constexpr double kNegativeEigenvalueLimit = -1e-8;

RVector clamped_eigenvalues(const RVector& ev) {
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < kNegativeEigenvalueLimit) {
      throw Error(ErrorKind::not_a_state,
                  "square root of a matrix with eigenvalue " + std::to_string(ev(i)));
    }
  }
  return ev.cwiseMax(0.0);
}

}  // namespace

CMatrix sqrt_from_spectrum(const SpectralData& spec) {
  // Eigenvalues below the solver's resolution are zero; their square roots
  // would otherwise turn 1e-17 noise into 1e-9 entries.
  RVector lam = clamped_eigenvalues(spec.eigenvalues);
  const double floor = kKernelZero * std::max(1.0, lam.size() ? lam.maxCoeff() : 0.0);
  lam = (lam.array() < floor).select(0.0, lam);
  const RVector roots = lam.cwiseSqrt();
  return hermitize(spec.eigenvectors * roots.cast<cplx>().asDiagonal() *
                   spec.eigenvectors.adjoint());
}

CMatrix exact_sqrt(const CMatrix& psd) { return sqrt_from_spectrum(eig_hermitian(psd)); }

CMatrix exact_sqrt(const DensityMatrix& state) { return exact_sqrt(state.data()); }

KernelValue divided_difference(double li, double lj) {
  if (!(li >= 0.0) || !(lj >= 0.0)) {
    throw Error(ErrorKind::domain, "divided_difference: negative eigenvalue");
  }
  if (li < kKernelZero && lj < kKernelZero) return {0.0, true};
  return {1.0 / (std::sqrt(li) + std::sqrt(lj)), false};
}

CMatrix apply_sqrt_kernel(const RVector& eigenvalues, const CMatrix& in_eigenbasis,
                          bool* singular) {
  const RVector lam = clamped_eigenvalues(eigenvalues);
  const Eigen::Index n = lam.size();
  CMatrix out(n, n);
  const double noise = 1e-12 * std::max(1.0, max_abs(in_eigenbasis));
  bool hit = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const KernelValue k = divided_difference(lam(i), lam(j));
      if (k.singular && std::abs(in_eigenbasis(i, j)) > noise) hit = true;
      out(i, j) = in_eigenbasis(i, j) * k.value;
    }
  }
  if (singular) *singular = hit;
  return out;
}

SqrtExpansion perturbative_sqrt(const SpectralData& rho0_spec, const PerturbationMatrix& rho1) {
  if (rho1.data().rows() != rho0_spec.size()) {
    throw Error(ErrorKind::shape, "perturbative_sqrt: ρ1 and ρ0 dimensions differ");
  }
  SqrtExpansion out;
  out.epsilon = rho1.epsilon();
  out.sqrt_rho0 = sqrt_from_spectrum(rho0_spec);
  const CMatrix kernel = apply_sqrt_kernel(
      rho0_spec.eigenvalues, rho0_spec.to_eigenbasis(rho1.data()), &out.kernel_singular);
  out.rho1e = hermitize(rho0_spec.from_eigenbasis(kernel));
  return out;
}

}  // namespace lqu
