#pragma once

#include <vector>

#include "lqu/linalg.hpp"

namespace lqu {

/// Generalized Gell-Mann basis of su(d) with Tr(T_i T_j) = 2 δ_ij, together
/// with the structure constants of the product rule
///
///   T_i T_j = i Σ_k f_ijk T_k + Σ_k g_ijk T_k + (2/d) δ_ij 𝕀.
///
/// Ordering is the standard Gell-Mann one: for k = 1..d-1, the symmetric and
/// antisymmetric off-diagonal pairs (j,k) for j < k, interleaved, followed by
/// the k-th diagonal generator. d = 2 gives (σx, σy, σz); d = 3 gives λ1..λ8.
/// Indices are zero-based everywhere in the API.
///
/// Immutable after construction.
class GeneratorSet {
 public:
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(generators_.size()); }

  const CMatrix& operator[](int i) const { return generators_[i]; }
  const std::vector<CMatrix>& generators() const { return generators_; }

  double f(int i, int j, int k) const { return f_[index(i, j, k)]; }
  double g(int i, int j, int k) const { return g_[index(i, j, k)]; }

  /// True when every g_ijk is zero (d = 2), which lets w-assembly skip the
  /// G_ij·L terms.
  bool symmetric_constants_vanish() const { return g_vanishes_; }

 private:
  friend GeneratorSet build_generators(int d);

  std::size_t index(int i, int j, int k) const {
    const auto n = static_cast<std::size_t>(size());
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
           static_cast<std::size_t>(k);
  }

  int dim_ = 0;
  std::vector<CMatrix> generators_;
  std::vector<double> f_;
  std::vector<double> g_;
  bool g_vanishes_ = false;
};

/// Dense rank-3 tensors, flattened as ((i*n)+j)*n+k.
struct StructureConstants {
  int n = 0;
  std::vector<double> f;
  std::vector<double> g;

  double f_at(int i, int j, int k) const { return f[(i * n + j) * n + k]; }
  double g_at(int i, int j, int k) const { return g[(i * n + j) * n + k]; }
};

/// Throws Error(invalid_dimension) for d < 2.
GeneratorSet build_generators(int d);

/// f_ijk = Tr([T_i,T_j] T_k)/(4i), g_ijk = Tr({T_i,T_j} T_k)/4, evaluated on
/// the supplied matrices. Imaginary residues below 1e-12 are dropped.
StructureConstants structure_constants(const std::vector<CMatrix>& generators);
StructureConstants structure_constants(const GeneratorSet& gen);

/// max_{i,j} max-abs of T_iT_j − [iΣf T_k + Σg T_k + (2/d)δ_ij 𝕀].
double product_rule_residual(const GeneratorSet& gen);

/// T_k ⊗ 𝕀_{d2}.
CMatrix lift_to_bipartite(const CMatrix& local, int d2);

enum class BlochSource { equilibrium, perturbation };

struct BlochVector {
  CVector components;
  BlochSource source = BlochSource::equilibrium;
};

/// Components Tr(op · T_k ⊗ 𝕀_{d2}). `op` may be any square matrix of size
/// d1·d2 (a state, or a first-order correction).
BlochVector bloch_vector(const CMatrix& op, const GeneratorSet& gen, int d2,
                         BlochSource source = BlochSource::equilibrium);

/// Σ_k g_ijk v_k for every (i,j): the G_ij·L matrix that enters w. With the
/// fast path enabled the sum is skipped outright when every g_ijk is zero.
CMatrix contract_symmetric(const GeneratorSet& gen, const CVector& v, bool fast_path = true);

}  // namespace lqu
