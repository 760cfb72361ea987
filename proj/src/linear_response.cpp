#include "lqu/linear_response.hpp"

#include <cmath>
#include <string>

#include "lqu/error.hpp"

namespace lqu {

void DriveSpec::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorKind::domain, "drive broadening delta must be > 0");
  }
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorKind::domain, "drive frequency omega must be >= 0");
  }
  if (!std::isfinite(xi)) throw Error(ErrorKind::domain, "drive strength xi is not finite");
  if (op.rows() != op.cols()) throw Error(ErrorKind::shape, "drive operator is not square");
  if (hermiticity_residual(op) > tolerance::hermitian * std::max(1.0, max_abs(op))) {
    throw Error(ErrorKind::contract, "drive operator is not Hermitian");
  }
}

cplx spectral_function(double e_n, double e_m, double omega, double delta) {
  if (!(delta > 0.0)) {
    throw Error(ErrorKind::domain, "spectral_function requires delta > 0");
  }
  const double gap = e_n - e_m;
  return 1.0 / cplx(gap - omega, -delta) + 1.0 / cplx(gap + omega, -delta);
}

double spectral_function_undamped(double e_n, double e_m, double omega) {
  const double gap = e_n - e_m;
  if (gap - omega == 0.0 || gap + omega == 0.0) {
    throw Error(ErrorKind::domain, "undamped spectral function is singular at resonance");
  }
  return 1.0 / (gap - omega) + 1.0 / (gap + omega);
}

PerturbationMatrix rho1_driven(const SpectralData& h_spec, const RVector& weights,
                               const DriveSpec& drive, Bipartition parts) {
  drive.validate();
  const int n = h_spec.size();
  if (weights.size() != n || drive.op.rows() != n || parts.total() != n) {
    throw Error(ErrorKind::shape, "rho1_driven: spectrum, weights and drive sizes differ");
  }
  const CMatrix a = h_spec.to_eigenbasis(drive.op);
  const RVector& e = h_spec.eigenvalues;
  CMatrix r(n, n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      r(p, q) = a(p, q) * (weights(q) - weights(p)) *
                spectral_function(e(p), e(q), drive.omega, drive.delta);
    }
  }
  return PerturbationMatrix(hermitize(h_spec.from_eigenbasis(r)), drive.xi, parts);
}

CMatrix build_w1_driven(const SpectralData& h_spec, const RVector& weights,
                        const DriveSpec& drive, const GeneratorSet& gen, int d2) {
  drive.validate();
  const int n = h_spec.size();
  if (weights.size() != n || drive.op.rows() != n || gen.dim() * d2 != n) {
    throw Error(ErrorKind::shape, "build_w1_driven: spectrum, weights and drive sizes differ");
  }
  const RVector& e = h_spec.eigenvalues;
  const RVector roots = weights.cwiseMax(0.0).cwiseSqrt();
  const CMatrix a = h_spec.to_eigenbasis(drive.op);
  const std::vector<CMatrix> t = generators_in_basis(h_spec.eigenvectors, gen, d2);

  // F_ml and the m,l-dependent factors are shared by every (i,j).
  CMatrix fa(n, n);
  for (int m = 0; m < n; ++m) {
    for (int l = 0; l < n; ++l) {
      fa(m, l) = spectral_function(e(m), e(l), drive.omega, drive.delta) * a(m, l);
    }
  }

  const int g = gen.size();
  CMatrix w1(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      cplx sum = 0.0;
      for (int nn = 0; nn < n; ++nn) {
        for (int m = 0; m < n; ++m) {
          const cplx left = roots(nn) * t[i](nn, m);
          if (left == cplx(0.0, 0.0)) continue;
          for (int l = 0; l < n; ++l) {
            sum += left * (roots(m) - roots(l)) * fa(m, l) * t[j](l, nn);
          }
        }
      }
      w1(i, j) = -2.0 * drive.xi * sum;
    }
  }

  if (!gen.symmetric_constants_vanish()) {
    CVector l1 = CVector::Zero(g);
    for (int k = 0; k < g; ++k) {
      cplx s = 0.0;
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          s += a(p, q) * (weights(q) - weights(p)) *
               spectral_function(e(p), e(q), drive.omega, drive.delta) * t[k](q, p);
        }
      }
      l1(k) = s;
    }
    w1 -= drive.xi * contract_symmetric(gen, l1);
  }
  return w1;
}

LquResult lqu_driven(const SpectralData& h_spec, const RVector& weights, const DriveSpec& drive,
                     const GeneratorSet& gen, int d2) {
  WMatrix w{build_w0_spectral(h_spec.eigenvectors, weights, gen, d2),
            build_w1_driven(h_spec, weights, drive, gen, d2), gen.dim()};
  return lqu_from_w(std::move(w), LquMode::perturbative_driven);
}

bool is_two_qubit_operator_name(std::string_view name) {
  return name.size() == 3 && name[0] == 's' && (name[1] == 'x' || name[1] == 'y' || name[1] == 'z') &&
         (name[2] == '1' || name[2] == '2');
}

CMatrix two_qubit_operator(std::string_view name) {
  if (!is_two_qubit_operator_name(name)) {
    throw Error(ErrorKind::input, "unknown drive operator '" + std::string(name) +
                                      "' (expected one of sx1 sy1 sz1 sx2 sy2 sz2)");
  }
  const CMatrix pauli = name[1] == 'x' ? pauli_x() : name[1] == 'y' ? pauli_y() : pauli_z();
  const CMatrix id = CMatrix::Identity(2, 2);
  return name[2] == '1' ? kron(pauli, id) : kron(id, pauli);
}

}  // namespace lqu
