#pragma once

#include "lqu/quantum_state.hpp"

namespace lqu {

/// Eigenvalues below this are treated as exact zeros by the first-order
/// kernel.
inline constexpr double kKernelZero = 1e-14;

/// Principal square root of a PSD Hermitian matrix via λ → √λ, with λ below
/// kKernelZero·max(1, λmax) (solver noise, or small negatives) mapped to 0.
/// Throws Error(not_a_state) if any eigenvalue is below -1e-8.
CMatrix exact_sqrt(const CMatrix& psd);
CMatrix exact_sqrt(const DensityMatrix& state);

/// √ from already-computed spectral data (same clamping rule).
CMatrix sqrt_from_spectrum(const SpectralData& spec);

struct KernelValue {
  double value = 0.0;
  bool singular = false;
};

/// (√λi − √λj)/(λi − λj), evaluated as 1/(√λi + √λj). At λi = λj > 0 this is
/// the derivative 1/(2√λ). When both arguments lie below kKernelZero the
/// first-order expansion does not exist; the result is 0 with `singular` set.
/// Throws Error(domain) for negative input.
KernelValue divided_difference(double li, double lj);

/// ρ^{1/2} ≈ sqrt_rho0 + epsilon·rho1e.
struct SqrtExpansion {
  CMatrix sqrt_rho0;
  CMatrix rho1e;
  double epsilon = 0.0;
  bool kernel_singular = false;

  CMatrix evaluate() const { return sqrt_rho0 + epsilon * rho1e; }
};

/// ρ1e_ij = ⟨ψi|ρ1|ψj⟩·divided_difference(λi, λj) in the eigenbasis of ρ0,
/// rotated back to the computational basis. Eigenvalues of ρ0 within
/// -1e-8 of zero are clamped.
SqrtExpansion perturbative_sqrt(const SpectralData& rho0_spec, const PerturbationMatrix& rho1);

/// The same kernel applied to a matrix already expressed in the ρ0
/// eigenbasis; `singular` is set if a non-zero entry met the singular kernel.
CMatrix apply_sqrt_kernel(const RVector& eigenvalues, const CMatrix& in_eigenbasis,
                          bool* singular);

}  // namespace lqu
