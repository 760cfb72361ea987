#pragma once

#include <random>

#include "lqu/linalg.hpp"
#include "lqu/x_state.hpp"

namespace lqu::random {

using Engine = std::mt19937_64;

/// Ginibre matrix with independent standard-normal real and imaginary parts.
CMatrix ginibre(Engine& rng, int rows, int cols);

/// ½·GG†/Tr(GG†) + ½·𝕀/dim; full rank with every eigenvalue ≥ 1/(2·dim).
CMatrix full_rank_state(Engine& rng, int dim);

/// GG†/Tr(GG†); generically full rank but with no spectral floor.
CMatrix mixed_state(Engine& rng, int dim);

/// Haar-random normalized vector.
CVector pure_state(Engine& rng, int dim);

/// Traceless Hermitian with unit Frobenius norm.
CMatrix traceless_hermitian(Engine& rng, int dim);

/// Valid X state with equal corner entries: A, B± > 0, |C|² ≤ B+B−, unit trace.
XStateEntries x_state(Engine& rng);

}  // namespace lqu::random
