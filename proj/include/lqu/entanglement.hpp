#pragma once

#include "lqu/quantum_state.hpp"
#include "lqu/x_state.hpp"

namespace lqu {

enum class ConcurrenceMethod { wootters, x_state };

struct ConcurrenceResult {
  double value = 0.0;
  ConcurrenceMethod method = ConcurrenceMethod::wootters;
  /// Before clamping at zero; negative values locate the separability
  /// boundary for root finding.
  double raw = 0.0;
};

/// Wootters: √μ1 − √μ2 − √μ3 − √μ4 over the descending eigenvalues of
/// ρ(σy⊗σy)ρ*(σy⊗σy). The √μ are taken as singular values of √ρ(σy⊗σy)√ρ*,
/// whose Gram matrix is the Hermitian √ρ ρ̃ √ρ.
/// Throws Error(shape) unless the state is 2⊗2.
ConcurrenceResult concurrence_wootters(const DensityMatrix& state);

/// 2D·max(0, |C| − A). Throws Error(contract) if the entries do not have
/// unit trace.
ConcurrenceResult concurrence_x_state(const XStateEntries& entries);

/// 2(1 − Tr ρ_A²) for a normalized pure state on `parts` (2⊗2 by default).
/// Throws Error(contract) if |ψ| deviates from 1 by more than 1e-10.
double linear_entropy_of_entanglement(const CVector& psi, Bipartition parts = {2, 2});

}  // namespace lqu
