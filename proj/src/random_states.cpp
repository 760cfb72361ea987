#include "lqu/random_states.hpp"

#include <cmath>
#include <numbers>

namespace lqu::random {

CMatrix ginibre(Engine& rng, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) g(i, j) = cplx(n(rng), n(rng));
  }
  return g;
}

CMatrix mixed_state(Engine& rng, int dim) {
  const CMatrix g = ginibre(rng, dim, dim);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return hermitize(rho);
}

CMatrix full_rank_state(Engine& rng, int dim) {
  CMatrix rho = 0.5 * mixed_state(rng, dim);
  rho.diagonal().array() += 0.5 / dim;
  return rho;
}

CVector pure_state(Engine& rng, int dim) {
  CVector v = ginibre(rng, dim, 1).col(0);
  return v / v.norm();
}

CMatrix traceless_hermitian(Engine& rng, int dim) {
  const CMatrix g = ginibre(rng, dim, dim);
  CMatrix h = 0.5 * (g + g.adjoint());
  h.diagonal().array() -= h.trace() / static_cast<double>(dim);
  return h / h.norm();
}

XStateEntries x_state(Engine& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  XStateEntries e;
  e.A = u(rng);
  e.B_plus = u(rng);
  e.B_minus = u(rng);
  const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng) *
                   std::sqrt(e.B_plus * e.B_minus);
  e.C = std::polar(r, phase(rng));
  e.D = 1.0 / (2.0 * e.A + e.B_plus + e.B_minus);
  return e;
}

}  // namespace lqu::random
