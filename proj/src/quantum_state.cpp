#include "lqu/quantum_state.hpp"

#include <cmath>
#include <sstream>

#include "lqu/error.hpp"

namespace lqu {

namespace {

std::string describe(const std::vector<std::string>& items) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) os << "; ";
    os << items[i];
  }
  return os.str();
}

void require_shape(const CMatrix& data, Bipartition parts, const char* what) {
  if (parts.d1 < 1 || parts.d2 < 1 || data.rows() != data.cols() ||
      data.rows() != parts.total()) {
    std::ostringstream os;
    os << what << ": matrix is " << data.rows() << "x" << data.cols()
       << " but bipartition is " << parts.d1 << "x" << parts.d2;
    throw Error(ErrorKind::shape, os.str());
  }
}

}  // namespace

ValidationReport validate(const CMatrix& data, Bipartition parts) {
  ValidationReport report;
  if (parts.d1 < 1 || parts.d2 < 1 || data.rows() != data.cols() ||
      data.rows() != parts.total()) {
    report.failures.push_back("shape");
    return report;
  }
  report.hermiticity_residual = hermiticity_residual(data);
  report.trace_residual = std::abs(data.trace() - cplx(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitize(data), Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();

  std::ostringstream os;
  if (report.hermiticity_residual > tolerance::hermitian) {
    os << "hermiticity residual " << report.hermiticity_residual;
    report.failures.push_back(os.str());
    os.str("");
  }
  if (report.trace_residual > tolerance::trace) {
    os << "trace residual " << report.trace_residual;
    report.failures.push_back(os.str());
    os.str("");
  }
  if (report.min_eigenvalue < tolerance::psd) {
    os << "not positive semidefinite (min eigenvalue " << report.min_eigenvalue << ")";
    report.failures.push_back(os.str());
  }
  return report;
}

DensityMatrix::DensityMatrix(CMatrix data, Bipartition parts) {
  require_shape(data, parts, "DensityMatrix");
  const ValidationReport report = validate(data, parts);
  if (!report.ok()) {
    throw Error(ErrorKind::not_a_state, "not a density matrix: " + describe(report.failures));
  }
  data_ = std::move(data);
  parts_ = parts;
}

DensityMatrix DensityMatrix::trusted(CMatrix data, Bipartition parts) {
  require_shape(data, parts, "DensityMatrix");
  DensityMatrix out;
  out.data_ = std::move(data);
  out.parts_ = parts;
  return out;
}

PerturbationMatrix::PerturbationMatrix(CMatrix data, double epsilon, Bipartition parts)
    : data_(std::move(data)), epsilon_(epsilon), parts_(parts) {
  require_shape(data_, parts_, "PerturbationMatrix");
  const double scale = std::max(1.0, max_abs(data_));
  if (hermiticity_residual(data_) > tolerance::hermitian * scale) {
    throw Error(ErrorKind::contract, "perturbation is not Hermitian");
  }
  if (std::abs(data_.trace()) > tolerance::trace * scale) {
    throw Error(ErrorKind::contract, "perturbation is not traceless");
  }
  if (!std::isfinite(epsilon_)) {
    throw Error(ErrorKind::domain, "perturbation scale is not finite");
  }
}

CMatrix SpectralData::reconstruct() const {
  return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

CMatrix SpectralData::to_eigenbasis(const CMatrix& op) const {
  return eigenvectors.adjoint() * op * eigenvectors;
}

CMatrix SpectralData::from_eigenbasis(const CMatrix& op) const {
  return eigenvectors * op * eigenvectors.adjoint();
}

SpectralData eig_hermitian(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::shape, "eig_hermitian: matrix is not square");
  }
  const double scale = std::max(1.0, max_abs(a));
  if (hermiticity_residual(a) > tolerance::hermitian * scale) {
    throw Error(ErrorKind::contract, "eig_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitize(a));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::contract, "eig_hermitian: eigensolver did not converge");
  }
  SpectralData out{solver.eigenvalues(), solver.eigenvectors()};

  for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) {
    auto col = out.eigenvectors.col(c);
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index r = 0; r < col.size(); ++r) {
      // Near-ties resolve to the lowest index so the phase is reproducible.
      const double mag = std::abs(col(r));
      if (mag > best_mag + 1e-12) {
        best_mag = mag;
        best = r;
      }
    }
    if (best_mag > 0.0) col *= std::conj(col(best)) / best_mag;
  }
  return out;
}

Hamiltonian::Hamiltonian(CMatrix data, Bipartition parts)
    : data_(std::move(data)), parts_(parts) {
  require_shape(data_, parts_, "Hamiltonian");
  const double scale = std::max(1.0, max_abs(data_));
  if (hermiticity_residual(data_) > tolerance::hermitian * scale) {
    throw Error(ErrorKind::contract, "Hamiltonian is not Hermitian");
  }
}

RVector thermal_weights(const SpectralData& h_spec, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw Error(ErrorKind::domain, "inverse temperature must be finite and >= 0");
  }
  const double e_min = h_spec.eigenvalues.minCoeff();
  RVector w = (-beta * (h_spec.eigenvalues.array() - e_min)).exp();
  return w / w.sum();
}

double partition_function(const SpectralData& h_spec, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw Error(ErrorKind::domain, "inverse temperature must be finite and >= 0");
  }
  return (-beta * h_spec.eigenvalues.array()).exp().sum();
}

DensityMatrix thermal_state(const Hamiltonian& h, double beta) {
  const SpectralData spec = eig_hermitian(h.data());
  const RVector w = thermal_weights(spec, beta);
  CMatrix rho = spec.eigenvectors * w.cast<cplx>().asDiagonal() * spec.eigenvectors.adjoint();
  return DensityMatrix::trusted(hermitize(rho), h.parts());
}

SpectralData thermal_spectrum(const SpectralData& h_spec, double beta) {
  const RVector w = thermal_weights(h_spec, beta);
  const int n = h_spec.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w(a) < w(b); });
  SpectralData out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(h_spec.eigenvectors.rows(), n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues(i) = w(order[static_cast<std::size_t>(i)]);
    out.eigenvectors.col(i) = h_spec.eigenvectors.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

CMatrix partial_trace_B(const CMatrix& op, Bipartition parts) {
  require_shape(op, parts, "partial_trace_B");
  const int d1 = parts.d1;
  const int d2 = parts.d2;
  CMatrix out = CMatrix::Zero(d1, d1);
  for (int a = 0; a < d1; ++a) {
    for (int ap = 0; ap < d1; ++ap) {
      cplx s = 0.0;
      for (int b = 0; b < d2; ++b) s += op(a * d2 + b, ap * d2 + b);
      out(a, ap) = s;
    }
  }
  return out;
}

CMatrix partial_trace_B(const DensityMatrix& state) {
  return partial_trace_B(state.data(), state.parts());
}

CMatrix swap_subsystems(const CMatrix& op, Bipartition parts) {
  require_shape(op, parts, "swap_subsystems");
  const int d1 = parts.d1;
  const int d2 = parts.d2;
  CMatrix out(op.rows(), op.cols());
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b)
      for (int ap = 0; ap < d1; ++ap)
        for (int bp = 0; bp < d2; ++bp)
          out(b * d1 + a, bp * d1 + ap) = op(a * d2 + b, ap * d2 + bp);
  return out;
}

DensityMatrix transpose_bipartition(const DensityMatrix& state) {
  return DensityMatrix::trusted(swap_subsystems(state.data(), state.parts()),
                                Bipartition{state.d2(), state.d1()});
}

CMatrix projector(const CVector& psi) { return psi * psi.adjoint(); }

}  // namespace lqu
