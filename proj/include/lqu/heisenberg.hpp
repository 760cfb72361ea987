#pragma once

#include <functional>

#include "lqu/entanglement.hpp"
#include "lqu/linear_response.hpp"
#include "lqu/lqu_core.hpp"
#include "lqu/quantum_state.hpp"
#include "lqu/x_state.hpp"

namespace lqu::heisenberg {

/// Two spin-1/2 particles, H0 = J S1·S2 with S = σ/2; ħ = k_B = 1. The drive
/// couples through a local spin operator with strength ξ.
struct Params {
  double J = 0.5;
  double T = 1.0;
  double xi = 0.0;
  double delta = 0.2;
  double omega = 0.0;

  double beta() const { return 1.0 / T; }
  /// Throws Error(domain) unless J > 0, T > 0, δ > 0, ω ≥ 0 and ξ finite.
  void validate() const;
};

CMatrix hamiltonian_matrix(double J);
Hamiltonian hamiltonian(double J);

/// Exact energies: singlet −3J/4, triplet J/4 (three-fold).
inline double singlet_energy(double J) { return -0.75 * J; }
inline double triplet_energy(double J) { return 0.25 * J; }

/// Closed-form ingredients of w = w0 + w1 for Â = σz⊗𝕀:
///   w0 = a·𝕀3,  w1 = [[0, −iξb, 0], [iξb, 0, 0], [0, 0, 0]]
/// with a = 4cosh(βJ/4)/Z, b = 4e⁺ Re F21, e⁺ = 2sinh(βJ/4)/Z and F21 the
/// triplet–singlet spectral function (gap J).
struct ClosedFormW {
  double a = 0.0;
  double b = 0.0;
  double e_plus = 0.0;
  double re_f21 = 0.0;
  double im_f21 = 0.0;
  double partition = 0.0;
};

/// Re F21 = 2J(J² − ω² + δ²) / ([(J+ω)² + δ²][(J−ω)² + δ²]).
double re_f21(double J, double omega, double delta);
/// Im F21 = 2δ(J² + ω² + δ²) / ([(J+ω)² + δ²][(J−ω)² + δ²]).
double im_f21(double J, double omega, double delta);

/// Z = e^{3βJ/4} + 3e^{−βJ/4}.
double partition_function(double J, double T);

ClosedFormW closed_form_w(const Params& p);

/// 1 − (a + ξ|b|).
double closed_form_lqu(const Params& p);

/// Ω = √(1 + 4ξ² Im[F21]²).
double omega_factor(const Params& p);

/// ρ0 + ξρ1 for Â = σz⊗𝕀 in X form: A = e^{−βJ/2},
/// B± = cosh(βJ/2) ± 2ξ sinh(βJ/2) Re F21, C = −sinh(βJ/2)(1 + 2iξ Im F21),
/// D = e^{βJ/4}/Z.
XStateEntries x_state(const Params& p);

/// |(e^{3βJ/4} − e^{−βJ/4})/Z|·Ω − 2e^{−βJ/4}/Z, clamped at zero in `value`.
ConcurrenceResult closed_form_concurrence(const Params& p);

struct CriticalTemperatures {
  double tc0 = 0.0;
  double tc1 = 0.0;
  double omega_factor = 1.0;
};

/// T_c⁰ = J/ln 3 and T_c¹ = J/ln((Ω+2)/Ω); independent of p.T.
CriticalTemperatures critical_temperatures(const Params& p);

/// Bisection for a sign change of `f` on [lo, hi] until the bracket is
/// narrower than `tol`. Throws Error(domain) if f(lo) and f(hi) share a sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

/// ρ0 + ξρ1 assembled through the general linear-response path for a drive
/// operator on the two-qubit space (default σz⊗𝕀).
CMatrix driven_state(const Params& p, const CMatrix& drive_op);

/// Pipeline LQU: H0 spectrum, thermal weights, driven w0 + w1.
LquResult pipeline_lqu(const Params& p, const CMatrix& drive_op);

/// Raw Wootters concurrence of driven_state(p, σz⊗𝕀).
double pipeline_concurrence_raw(const Params& p);

enum class ConcurrenceSource {
  /// The closed-form raw expression; defined at every T.
  closed_form,
  /// Wootters on driven_state(). First order stops being a state at low T,
  /// so the bracket must stay where ρ0 + ξρ1 is positive semidefinite.
  pipeline,
};

/// Critical temperature by bisection on the raw concurrence over
/// T ∈ [lo_factor·J, hi_factor·J]. p.T is ignored.
double critical_temperature_bisection(const Params& p, double tol = 1e-10,
                                      ConcurrenceSource source = ConcurrenceSource::closed_form,
                                      double lo_factor = 0.01, double hi_factor = 10.0);

}  // namespace lqu::heisenberg
