#include "lqu/lqu_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lqu/error.hpp"
#include "lqu/sqrt_perturbation.hpp"

namespace lqu {

namespace {

constexpr double kRangeSlack = 1e-10;

// Σ_nm a_nm b_mn = Tr(a b).
cplx trace_of_product(const CMatrix& a, const CMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

CVector diagonal_expectations(const std::vector<CMatrix>& in_basis, const RVector& weights) {
  CVector out(static_cast<Eigen::Index>(in_basis.size()));
  for (std::size_t k = 0; k < in_basis.size(); ++k) {
    out(static_cast<Eigen::Index>(k)) =
        (in_basis[k].diagonal().array() * weights.cast<cplx>().array()).sum();
  }
  return out;
}

}  // namespace

const char* to_string(LquMode mode) {
  switch (mode) {
    case LquMode::exact:
      return "exact";
    case LquMode::perturbative_general:
      return "perturbative-general";
    case LquMode::perturbative_driven:
      return "perturbative-driven";
    case LquMode::closed_form:
      return "closed-form";
  }
  return "unknown";
}

std::vector<std::string> ValidityFlags::labels() const {
  std::vector<std::string> out;
  if (kernel_singular) out.emplace_back("kernel-singular");
  if (out_of_range) out.emplace_back("out-of-range");
  return out;
}

double LquResult::reported() const { return std::clamp(value, 0.0, 1.0); }

double skew_information(const CMatrix& rho, const CMatrix& sqrt_rho, const CMatrix& observable) {
  if (observable.rows() != rho.rows() || observable.cols() != rho.cols()) {
    throw Error(ErrorKind::shape, "skew_information: observable and state sizes differ");
  }
  const double scale = std::max(1.0, max_abs(observable));
  if (hermiticity_residual(observable) > tolerance::hermitian * scale) {
    throw Error(ErrorKind::contract, "skew_information: observable is not Hermitian");
  }
  const CMatrix sk = sqrt_rho * observable;
  const cplx first = trace_of_product(rho, observable * observable);
  const cplx second = trace_of_product(sk, sk);
  return (first - second).real();
}

double skew_information(const DensityMatrix& state, const CMatrix& observable) {
  return skew_information(state.data(), exact_sqrt(state), observable);
}

std::vector<CMatrix> generators_in_basis(const CMatrix& eigenvectors, const GeneratorSet& gen,
                                         int d2) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(gen.size()));
  for (const CMatrix& t : gen.generators()) {
    out.push_back(eigenvectors.adjoint() * lift_to_bipartite(t, d2) * eigenvectors);
  }
  return out;
}

CMatrix build_w0_exact(const DensityMatrix& state, const GeneratorSet& gen) {
  if (state.d1() != gen.dim()) {
    throw Error(ErrorKind::shape, "build_w0_exact: generator dimension differs from d1");
  }
  const CMatrix root = exact_sqrt(state);
  const int n = gen.size();
  std::vector<CMatrix> rooted;
  rooted.reserve(static_cast<std::size_t>(n));
  for (const CMatrix& t : gen.generators()) {
    rooted.push_back(root * lift_to_bipartite(t, state.d2()));
  }
  CMatrix w(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = trace_of_product(rooted[i], rooted[j]);
  }
  const BlochVector l = bloch_vector(state.data(), gen, state.d2());
  return w - contract_symmetric(gen, l.components);
}

CMatrix build_w0_spectral(const CMatrix& eigenvectors, const RVector& eigenvalues,
                          const GeneratorSet& gen, int d2) {
  if (eigenvectors.rows() != gen.dim() * d2 || eigenvalues.size() != eigenvectors.cols()) {
    throw Error(ErrorKind::shape, "build_w0_spectral: spectral data does not match d1*d2");
  }
  const RVector roots = eigenvalues.cwiseMax(0.0).cwiseSqrt();
  const std::vector<CMatrix> t = generators_in_basis(eigenvectors, gen, d2);
  const int n = gen.size();
  const CMatrix weight = (roots * roots.transpose()).cast<cplx>();
  CMatrix w(n, n);
  for (int i = 0; i < n; ++i) {
    const CMatrix scaled = weight.cwiseProduct(t[i]);
    for (int j = 0; j < n; ++j) w(i, j) = trace_of_product(scaled, t[j]);
  }
  return w - contract_symmetric(gen, diagonal_expectations(t, eigenvalues));
}

CMatrix build_w0_spectral(const SpectralData& rho0_spec, const GeneratorSet& gen, int d2) {
  return build_w0_spectral(rho0_spec.eigenvectors, rho0_spec.eigenvalues, gen, d2);
}

W1 build_w1_general(const SpectralData& rho0_spec, const PerturbationMatrix& rho1,
                    const GeneratorSet& gen) {
  const Bipartition parts = rho1.parts();
  if (parts.d1 != gen.dim() || rho0_spec.size() != parts.total()) {
    throw Error(ErrorKind::shape, "build_w1_general: dimensions of ρ0, ρ1 and generators differ");
  }
  W1 out;
  const double eps = rho1.epsilon();
  const CMatrix rho1e = apply_sqrt_kernel(
      rho0_spec.eigenvalues, rho0_spec.to_eigenbasis(rho1.data()), &out.kernel_singular);
  const RVector roots = rho0_spec.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  const std::vector<CMatrix> t = generators_in_basis(rho0_spec.eigenvectors, gen, parts.d2);
  const int n = gen.size();
  out.w1.resize(n, n);
  for (int i = 0; i < n; ++i) {
    const CMatrix left = roots.cast<cplx>().asDiagonal() * t[i] * rho1e;
    for (int j = 0; j < n; ++j) out.w1(i, j) = 2.0 * eps * trace_of_product(left, t[j]);
  }
  const BlochVector l1 =
      bloch_vector(rho1.data(), gen, parts.d2, BlochSource::perturbation);
  out.w1 -= eps * contract_symmetric(gen, l1.components);
  return out;
}

LquResult lqu_from_w(WMatrix w, LquMode mode, ValidityFlags flags) {
  const CMatrix total = hermitize(w.total());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(total, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::contract, "w eigensolver did not converge");
  }
  LquResult out;
  out.w_eigenvalues = solver.eigenvalues();
  out.max_eigenvalue = out.w_eigenvalues.maxCoeff();
  out.value = 2.0 / w.d1 - out.max_eigenvalue;
  out.mode = mode;
  out.w = std::move(w);
  out.flags = flags;
  if (out.value < -kRangeSlack || out.value > 2.0 / out.w.d1 + kRangeSlack) {
    out.flags.out_of_range = true;
  }
  return out;
}

LquResult lqu_exact(const DensityMatrix& state, const GeneratorSet& gen) {
  WMatrix w{build_w0_exact(state, gen), CMatrix(), state.d1()};
  return lqu_from_w(std::move(w), LquMode::exact);
}

LquResult lqu_perturbative(const SpectralData& rho0_spec, const PerturbationMatrix& rho1,
                           const GeneratorSet& gen) {
  W1 w1 = build_w1_general(rho0_spec, rho1, gen);
  WMatrix w{build_w0_spectral(rho0_spec, gen, rho1.parts().d2), std::move(w1.w1), gen.dim()};
  ValidityFlags flags;
  flags.kernel_singular = w1.kernel_singular;
  return lqu_from_w(std::move(w), LquMode::perturbative_general, flags);
}

double lqu_brute_force_qubit(const DensityMatrix& state, int directions) {
  if (state.d1() != 2) throw Error(ErrorKind::shape, "brute-force LQU needs a qubit on side A");
  if (directions < 1) throw Error(ErrorKind::domain, "need at least one direction");
  const CMatrix sqrt_rho = exact_sqrt(state);
  const CMatrix sx = lift_to_bipartite(pauli_x(), state.d2());
  const CMatrix sy = lift_to_bipartite(pauli_y(), state.d2());
  const CMatrix sz = lift_to_bipartite(pauli_z(), state.d2());
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < directions; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / directions;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * k;
    const CMatrix K = r * std::cos(phi) * sx + r * std::sin(phi) * sy + z * sz;
    best = std::min(best, skew_information(state.data(), sqrt_rho, K));
  }
  return best;
}

}  // namespace lqu
