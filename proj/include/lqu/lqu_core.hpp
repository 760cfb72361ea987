#pragma once

#include <string>
#include <vector>

#include "lqu/quantum_state.hpp"
#include "lqu/su_algebra.hpp"

namespace lqu {

enum class LquMode { exact, perturbative_general, perturbative_driven, closed_form };

const char* to_string(LquMode mode);

struct ValidityFlags {
  /// ρ1 had weight on the joint kernel of ρ0, where ρ1e is undefined.
  bool kernel_singular = false;
  /// Reported LQU left [0, 2/d1]; happens in perturbative modes when the
  /// drive is too strong for first order to be meaningful.
  bool out_of_range = false;

  bool any() const { return kernel_singular || out_of_range; }
  std::vector<std::string> labels() const;
  ValidityFlags& operator|=(const ValidityFlags& o) {
    kernel_singular |= o.kernel_singular;
    out_of_range |= o.out_of_range;
    return *this;
  }
};

/// w = w0 + w1 on the (d1²−1)-dimensional generator space.
struct WMatrix {
  CMatrix w0;
  CMatrix w1;
  int d1 = 2;

  CMatrix total() const { return w1.size() ? CMatrix(w0 + w1) : w0; }
};

struct LquResult {
  /// Raw 2/d1 − max eig(w); never clamped.
  double value = 0.0;
  double max_eigenvalue = 0.0;
  /// All eigenvalues of the Hermitized w, ascending.
  RVector w_eigenvalues;
  WMatrix w;
  LquMode mode = LquMode::exact;
  ValidityFlags flags;

  /// Value clamped to [0, 1] for display.
  double reported() const;
};

/// Wigner–Yanase skew information −½Tr([√ρ, K]²) = Tr(ρK²) − Tr(√ρK√ρK).
/// Throws Error(shape) or Error(contract) if K does not match or is not
/// Hermitian.
double skew_information(const DensityMatrix& state, const CMatrix& observable);

/// Same, reusing a precomputed √ρ (for scans over many observables).
double skew_information(const CMatrix& rho, const CMatrix& sqrt_rho, const CMatrix& observable);

/// w0_ij = Tr[√ρ (T_i⊗𝕀) √ρ (T_j⊗𝕀)] − G_ij·L with √ρ from exact_sqrt.
CMatrix build_w0_exact(const DensityMatrix& state, const GeneratorSet& gen);

/// w0 from spectral data: Σ_nm √λn √λm ⟨n|T_i⊗𝕀|m⟩⟨m|T_j⊗𝕀|n⟩ − G_ij·L.
/// `eigenvalues` need not be sorted.
CMatrix build_w0_spectral(const CMatrix& eigenvectors, const RVector& eigenvalues,
                          const GeneratorSet& gen, int d2);
CMatrix build_w0_spectral(const SpectralData& rho0_spec, const GeneratorSet& gen, int d2);

struct W1 {
  CMatrix w1;
  bool kernel_singular = false;
};

/// w1_ij = 2ε Tr[√ρ0 (T_i⊗𝕀) ρ1e (T_j⊗𝕀)] − ε G_ij·L¹, with ρ1e from
/// perturbative_sqrt and ε = rho1.epsilon().
W1 build_w1_general(const SpectralData& rho0_spec, const PerturbationMatrix& rho1,
                    const GeneratorSet& gen);

/// Hermitizes w, diagonalizes it and forms 2/d1 − max eigenvalue.
LquResult lqu_from_w(WMatrix w, LquMode mode, ValidityFlags flags = {});

LquResult lqu_exact(const DensityMatrix& state, const GeneratorSet& gen);

/// First-order LQU of ρ0 + ερ1; w0 comes from the spectral form so the result
/// is strictly first order.
LquResult lqu_perturbative(const SpectralData& rho0_spec, const PerturbationMatrix& rho1,
                           const GeneratorSet& gen);

/// Direct minimum of I(ρ, (n·σ)⊗𝕀) over `directions` unit vectors n on a
/// Fibonacci sphere. Qubit A only (d1 = 2); throws Error(shape) otherwise.
/// Always ≥ the eigen-route value, approaching it as the grid refines.
double lqu_brute_force_qubit(const DensityMatrix& state, int directions);

/// V†(T_k ⊗ 𝕀)V for every generator.
std::vector<CMatrix> generators_in_basis(const CMatrix& eigenvectors, const GeneratorSet& gen,
                                         int d2);

}  // namespace lqu
