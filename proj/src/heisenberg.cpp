#include "lqu/heisenberg.hpp"

#include <cmath>

#include "lqu/error.hpp"
#include "lqu/su_algebra.hpp"

namespace lqu::heisenberg {

namespace {

double lorentz_denominator(double J, double omega, double delta) {
  const double d2 = delta * delta;
  return ((J + omega) * (J + omega) + d2) * ((J - omega) * (J - omega) + d2);
}

const GeneratorSet& su2() {
  static const GeneratorSet gen = build_generators(2);
  return gen;
}

}  // namespace

void Params::validate() const {
  if (!(J > 0.0) || !std::isfinite(J)) throw Error(ErrorKind::domain, "J must be > 0");
  if (!(T > 0.0) || !std::isfinite(T)) throw Error(ErrorKind::domain, "T must be > 0");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw Error(ErrorKind::domain, "delta must be > 0");
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw Error(ErrorKind::domain, "omega must be >= 0");
  if (!std::isfinite(xi)) throw Error(ErrorKind::domain, "xi must be finite");
}

CMatrix hamiltonian_matrix(double J) {
  const CMatrix sx = 0.5 * pauli_x();
  const CMatrix sy = 0.5 * pauli_y();
  const CMatrix sz = 0.5 * pauli_z();
  return J * (kron(sx, sx) + kron(sy, sy) + kron(sz, sz));
}

Hamiltonian hamiltonian(double J) { return Hamiltonian(hamiltonian_matrix(J), {2, 2}); }

double re_f21(double J, double omega, double delta) {
  return 2.0 * J * (J * J - omega * omega + delta * delta) / lorentz_denominator(J, omega, delta);
}

double im_f21(double J, double omega, double delta) {
  return 2.0 * delta * (J * J + omega * omega + delta * delta) /
         lorentz_denominator(J, omega, delta);
}

double partition_function(double J, double T) {
  const double bj = J / T;
  return std::exp(0.75 * bj) + 3.0 * std::exp(-0.25 * bj);
}

ClosedFormW closed_form_w(const Params& p) {
  p.validate();
  // Ratios to Z are formed with e^{3βJ/4} divided out: q = e^{−βJ}.
  const double x = p.beta() * p.J / 4.0;
  const double q = std::exp(-4.0 * x);
  const double norm = 1.0 + 3.0 * q;
  const double cosh_over_z = 0.5 * (std::exp(-2.0 * x) + q) / norm;
  const double sinh_over_z = 0.5 * (std::exp(-2.0 * x) - q) / norm;

  ClosedFormW out;
  out.partition = partition_function(p.J, p.T);
  out.re_f21 = re_f21(p.J, p.omega, p.delta);
  out.im_f21 = im_f21(p.J, p.omega, p.delta);
  out.a = 4.0 * cosh_over_z;
  out.e_plus = 2.0 * sinh_over_z;
  out.b = 4.0 * out.e_plus * out.re_f21;
  return out;
}

double closed_form_lqu(const Params& p) {
  const ClosedFormW w = closed_form_w(p);
  return 1.0 - (w.a + std::abs(p.xi * w.b));
}

double omega_factor(const Params& p) {
  p.validate();
  const double im = im_f21(p.J, p.omega, p.delta);
  return std::sqrt(1.0 + 4.0 * p.xi * p.xi * im * im);
}

XStateEntries x_state(const Params& p) {
  p.validate();
  const double bj = p.beta() * p.J;
  const double s = std::sinh(bj / 2.0);
  const double c = std::cosh(bj / 2.0);
  const double re = re_f21(p.J, p.omega, p.delta);
  const double im = im_f21(p.J, p.omega, p.delta);
  XStateEntries x;
  x.A = std::exp(-bj / 2.0);
  x.B_plus = c + 2.0 * p.xi * s * re;
  x.B_minus = c - 2.0 * p.xi * s * re;
  x.C = -s * cplx(1.0, 2.0 * p.xi * im);
  x.D = 1.0 / (std::exp(bj / 2.0) + 3.0 * std::exp(-bj / 2.0));
  x.Omega = omega_factor(p);
  return x;
}

ConcurrenceResult closed_form_concurrence(const Params& p) {
  p.validate();
  const double q = std::exp(-p.beta() * p.J);
  const double norm = 1.0 + 3.0 * q;
  ConcurrenceResult out;
  out.method = ConcurrenceMethod::x_state;
  out.raw = std::abs((1.0 - q) / norm) * omega_factor(p) - 2.0 * q / norm;
  out.value = std::max(0.0, out.raw);
  return out;
}

CriticalTemperatures critical_temperatures(const Params& p) {
  p.validate();
  CriticalTemperatures out;
  out.omega_factor = omega_factor(p);
  out.tc0 = p.J / std::log(3.0);
  out.tc1 = p.J / std::log((out.omega_factor + 2.0) / out.omega_factor);
  return out;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw Error(ErrorKind::domain, "bisect_root: no sign change on the bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CMatrix driven_state(const Params& p, const CMatrix& drive_op) {
  p.validate();
  const SpectralData h = eig_hermitian(hamiltonian_matrix(p.J));
  const RVector weights = thermal_weights(h, p.beta());
  const DriveSpec drive{drive_op, p.xi, p.omega, p.delta};
  const PerturbationMatrix rho1 = rho1_driven(h, weights, drive, {2, 2});
  const CMatrix rho0 = h.eigenvectors * weights.cast<cplx>().asDiagonal() * h.eigenvectors.adjoint();
  return hermitize(rho0 + rho1.scaled());
}

LquResult pipeline_lqu(const Params& p, const CMatrix& drive_op) {
  p.validate();
  const SpectralData h = eig_hermitian(hamiltonian_matrix(p.J));
  const RVector weights = thermal_weights(h, p.beta());
  const DriveSpec drive{drive_op, p.xi, p.omega, p.delta};
  return lqu_driven(h, weights, drive, su2(), 2);
}

double pipeline_concurrence_raw(const Params& p) {
  const DensityMatrix rho(driven_state(p, two_qubit_operator("sz1")), {2, 2});
  return concurrence_wootters(rho).raw;
}

double critical_temperature_bisection(const Params& p, double tol, ConcurrenceSource source,
                                      double lo_factor, double hi_factor) {
  auto raw_at = [&p, source](double t) {
    Params q = p;
    q.T = t;
    return source == ConcurrenceSource::closed_form ? closed_form_concurrence(q).raw
                                                    : pipeline_concurrence_raw(q);
  };
  return bisect_root(raw_at, lo_factor * p.J, hi_factor * p.J, tol);
}

}  // namespace lqu::heisenberg
