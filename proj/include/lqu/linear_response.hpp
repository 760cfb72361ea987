#pragma once

#include <string>
#include <string_view>

#include "lqu/lqu_core.hpp"
#include "lqu/quantum_state.hpp"
#include "lqu/su_algebra.hpp"

namespace lqu {

/// Harmonic drive H1 = −Â f0 cos(ωt). Only ξ = ε·2πf0 is carried; ε and f0
/// never appear separately.
struct DriveSpec {
  CMatrix op;
  double xi = 0.0;
  double omega = 0.0;
  double delta = 0.2;

  /// Throws Error(domain/contract) if δ ≤ 0, ω < 0, ξ non-finite or Â not
  /// Hermitian.
  void validate() const;
};

/// F_nm(ω) = 1/(E_n − E_m − ω − iδ) + 1/(E_n − E_m + ω − iδ).
/// Throws Error(domain) for δ ≤ 0.
cplx spectral_function(double e_n, double e_m, double omega, double delta);

/// The δ → 0 limit 1/(Δ − ω) + 1/(Δ + ω), Δ = E_n − E_m. Throws Error(domain)
/// on resonance |Δ| = ω.
double spectral_function_undamped(double e_n, double e_m, double omega);

/// ρ1 in the computational basis from its H0-eigenbasis elements
/// ⟨n|Â|m⟩(λ_m − λ_n)F_nm(ω). The returned matrix is the unit-ξ response with
/// epsilon() = ξ, so epsilon()·data() is the full first-order correction.
/// `weights` are the thermal occupations in the order of `h_spec`.
PerturbationMatrix rho1_driven(const SpectralData& h_spec, const RVector& weights,
                               const DriveSpec& drive, Bipartition parts);

/// w1 straight from the triple sum over H0 eigenstates
///   −2ξ Σ_{n,m,l} √λn (√λm − √λl) F_ml(ω) ⟨m|Â|l⟩ ⟨n|T_i⊗𝕀|m⟩ ⟨l|T_j⊗𝕀|n⟩ − ξ G_ij·L¹
/// without forming ρ1 or ρ1e.
CMatrix build_w1_driven(const SpectralData& h_spec, const RVector& weights,
                        const DriveSpec& drive, const GeneratorSet& gen, int d2);

/// First-order LQU of the driven thermal state: spectral w0 plus the
/// triple-sum w1.
LquResult lqu_driven(const SpectralData& h_spec, const RVector& weights, const DriveSpec& drive,
                     const GeneratorSet& gen, int d2);

/// Local Pauli operators of a two-qubit system: sx1, sy1, sz1 act on the
/// first spin, sx2, sy2, sz2 on the second. Throws Error(input) otherwise.
CMatrix two_qubit_operator(std::string_view name);

bool is_two_qubit_operator_name(std::string_view name);

}  // namespace lqu
