#include "lqu/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "lqu/error.hpp"
#include "lqu/sqrt_perturbation.hpp"

namespace lqu {

CMatrix XStateEntries::matrix() const {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = A;
  m(1, 1) = B_plus;
  m(1, 2) = C;
  m(2, 1) = std::conj(C);
  m(2, 2) = B_minus;
  m(3, 3) = A;
  return D * m;
}

ConcurrenceResult concurrence_wootters(const DensityMatrix& state) {
  if (state.d1() != 2 || state.d2() != 2) {
    throw Error(ErrorKind::shape, "concurrence is defined here for two qubits only");
  }
  // √μ are the singular values of √ρ (σy⊗σy) √ρ*, whose Gram matrix is
  // √ρ ρ̃ √ρ. Taking them directly avoids square roots of eigenvalue noise.
  const CMatrix yy = kron(pauli_y(), pauli_y());
  const CMatrix root = exact_sqrt(state);
  Eigen::JacobiSVD<CMatrix> svd(root * yy * root.conjugate());
  RVector mu = svd.singularValues();
  std::sort(mu.data(), mu.data() + mu.size(), std::greater<>());
  ConcurrenceResult out;
  out.method = ConcurrenceMethod::wootters;
  out.raw = mu(0) - mu(1) - mu(2) - mu(3);
  out.value = std::max(0.0, out.raw);
  return out;
}

ConcurrenceResult concurrence_x_state(const XStateEntries& entries) {
  if (std::abs(entries.trace_residual()) > 1e-12) {
    throw Error(ErrorKind::contract, "X-state entries do not have unit trace");
  }
  ConcurrenceResult out;
  out.method = ConcurrenceMethod::x_state;
  out.raw = 2.0 * entries.D * (std::abs(entries.C) - entries.A);
  out.value = std::max(0.0, out.raw);
  return out;
}

double linear_entropy_of_entanglement(const CVector& psi, Bipartition parts) {
  if (psi.size() != parts.total()) {
    throw Error(ErrorKind::shape, "pure state length does not match the bipartition");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::contract, "pure state is not normalized");
  }
  const CMatrix reduced = partial_trace_B(projector(psi), parts);
  const double purity = (reduced * reduced).trace().real();
  return 2.0 * (1.0 - purity);
}

}  // namespace lqu
