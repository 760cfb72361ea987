#pragma once

#include <string>
#include <vector>

#include "lqu/linalg.hpp"

namespace lqu {

namespace tolerance {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double psd = -1e-10;
}  // namespace tolerance

/// Dimensions of a bipartite space H_A ⊗ H_B.
struct Bipartition {
  int d1 = 2;
  int d2 = 2;

  int total() const { return d1 * d2; }
  bool operator==(const Bipartition&) const = default;
};

struct ValidationReport {
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Residual report for a candidate density matrix. Never throws; a shape
/// mismatch shows up as a failure entry.
ValidationReport validate(const CMatrix& data, Bipartition parts);

/// Hermitian, unit-trace, PSD operator on C^{d1} ⊗ C^{d2}.
class DensityMatrix {
 public:
  /// Throws Error(not_a_state) listing the failed checks, or Error(shape).
  DensityMatrix(CMatrix data, Bipartition parts);

  /// Skips validation. For internal construction from quantities that are a
  /// state by construction (thermal states, assembled X states).
  static DensityMatrix trusted(CMatrix data, Bipartition parts);

  const CMatrix& data() const { return data_; }
  Bipartition parts() const { return parts_; }
  int d1() const { return parts_.d1; }
  int d2() const { return parts_.d2; }
  int dim() const { return parts_.total(); }

 private:
  DensityMatrix() = default;
  CMatrix data_;
  Bipartition parts_;
};

/// First-order correction ρ1 together with its scale ε; the correction to the
/// state is ε·data. ε is applied once, by whoever assembles w or ρ0 + ερ1.
class PerturbationMatrix {
 public:
  /// Throws Error(contract) unless `data` is Hermitian and traceless at 1e-12.
  PerturbationMatrix(CMatrix data, double epsilon, Bipartition parts);

  const CMatrix& data() const { return data_; }
  double epsilon() const { return epsilon_; }
  Bipartition parts() const { return parts_; }
  CMatrix scaled() const { return epsilon_ * data_; }

 private:
  CMatrix data_;
  double epsilon_;
  Bipartition parts_;
};

/// Eigen-decomposition A = V Λ V†, eigenvalues ascending. Within degenerate
/// blocks the basis is whatever the solver returns; outside them each column
/// has its largest-magnitude component real and positive.
struct SpectralData {
  RVector eigenvalues;
  CMatrix eigenvectors;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  CMatrix reconstruct() const;
  /// V† op V.
  CMatrix to_eigenbasis(const CMatrix& op) const;
  /// V op V†.
  CMatrix from_eigenbasis(const CMatrix& op) const;
};

/// Throws Error(contract) if `a` is not Hermitian to 1e-12 (relative to its
/// scale for large-norm inputs).
SpectralData eig_hermitian(const CMatrix& a);

class Hamiltonian {
 public:
  /// Throws Error(contract) unless Hermitian to 1e-12.
  Hamiltonian(CMatrix data, Bipartition parts);

  const CMatrix& data() const { return data_; }
  Bipartition parts() const { return parts_; }

 private:
  CMatrix data_;
  Bipartition parts_;
};

/// Boltzmann weights e^{-βE_n}/Z in the order of `spec`, computed with the
/// ground energy shifted out so large β cannot overflow.
RVector thermal_weights(const SpectralData& h_spec, double beta);

/// Z = Σ e^{-βE_n}. May overflow for extreme β; the weights never do.
double partition_function(const SpectralData& h_spec, double beta);

/// ρ0 = e^{-βH}/Z. Throws Error(domain) for negative or non-finite β.
DensityMatrix thermal_state(const Hamiltonian& h, double beta);

/// Spectral data of the thermal state, sharing the Hamiltonian's
/// eigenvectors, sorted by ascending weight.
SpectralData thermal_spectrum(const SpectralData& h_spec, double beta);

/// Tr_B ρ.
CMatrix partial_trace_B(const DensityMatrix& state);
CMatrix partial_trace_B(const CMatrix& op, Bipartition parts);

/// Re-expresses an operator on A⊗B as an operator on B⊗A.
CMatrix swap_subsystems(const CMatrix& op, Bipartition parts);

/// LQU is defined for measurements on A; this view measures on B instead.
DensityMatrix transpose_bipartition(const DensityMatrix& state);

/// |ψ⟩⟨ψ| for a normalized vector.
CMatrix projector(const CVector& psi);

}  // namespace lqu
