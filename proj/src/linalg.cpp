#include "lqu/linalg.hpp"

#include "lqu/error.hpp"

namespace lqu {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_dimension:
      return "invalid-dimension";
    case ErrorKind::shape:
      return "shape";
    case ErrorKind::domain:
      return "domain";
    case ErrorKind::contract:
      return "contract";
    case ErrorKind::not_a_state:
      return "not-a-state";
    case ErrorKind::input:
      return "input";
  }
  return "unknown";
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double hermiticity_residual(const CMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(a - a.adjoint());
}

double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

CMatrix hermitize(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace lqu
