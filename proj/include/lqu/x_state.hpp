#pragma once

#include "lqu/linalg.hpp"

namespace lqu {

/// Two-qubit X state in the computational basis |00⟩,|01⟩,|10⟩,|11⟩:
///
///   ρ = D · | A   0   0   0 |
///           | 0   B+  C   0 |
///           | 0   C*  B-  0 |
///           | 0   0   0   A |
///
/// Omega is carried along for the driven Heisenberg model, where |C| equals
/// sinh(βJ/2)·Omega; it is not needed to assemble ρ.
struct XStateEntries {
  double A = 0.0;
  double B_plus = 0.0;
  double B_minus = 0.0;
  cplx C{0.0, 0.0};
  double D = 0.0;
  double Omega = 1.0;

  /// D(2A + B+ + B-) − 1.
  double trace_residual() const { return D * (2.0 * A + B_plus + B_minus) - 1.0; }
  CMatrix matrix() const;
};

}  // namespace lqu
