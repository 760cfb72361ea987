#pragma once

#include <complex>

#include <Eigen/Dense>

namespace lqu {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Largest |a_ij - (a^†)_ij|.
double hermiticity_residual(const CMatrix& a);

/// Largest absolute entry; the norm used for every elementwise tolerance.
double max_abs(const CMatrix& a);

CMatrix hermitize(const CMatrix& a);

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

}  // namespace lqu
