#include "lqu/su_algebra.hpp"

#include <cmath>
#include <string>

#include "lqu/error.hpp"

namespace lqu {

namespace {

constexpr double kResidueCut = 1e-12;

// Tr(a b) without forming the product.
cplx trace_of_product(const CMatrix& a, const CMatrix& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

double real_part_checked(cplx z) {
  // Residues from exact arithmetic on the Gell-Mann entries are at rounding
  // level; anything larger means the input was not a valid generator list.
  if (std::abs(z.imag()) > kResidueCut) {
    throw Error(ErrorKind::contract,
                "structure constant has imaginary part " + std::to_string(z.imag()));
  }
  return z.real();
}

}  // namespace

StructureConstants structure_constants(const std::vector<CMatrix>& generators) {
  StructureConstants sc;
  sc.n = static_cast<int>(generators.size());
  const auto n = static_cast<std::size_t>(sc.n);
  sc.f.assign(n * n * n, 0.0);
  sc.g.assign(n * n * n, 0.0);
  for (int i = 0; i < sc.n; ++i) {
    for (int j = 0; j < sc.n; ++j) {
      const CMatrix prod = generators[i] * generators[j];
      const CMatrix rev = generators[j] * generators[i];
      const CMatrix comm = prod - rev;
      const CMatrix anti = prod + rev;
      for (int k = 0; k < sc.n; ++k) {
        const std::size_t idx = (static_cast<std::size_t>(i) * n + j) * n + k;
        sc.f[idx] = real_part_checked(trace_of_product(comm, generators[k]) / (4.0 * kI));
        sc.g[idx] = real_part_checked(trace_of_product(anti, generators[k]) / 4.0);
      }
    }
  }
  return sc;
}

StructureConstants structure_constants(const GeneratorSet& gen) {
  return structure_constants(gen.generators());
}

GeneratorSet build_generators(int d) {
  if (d < 2) {
    throw Error(ErrorKind::invalid_dimension,
                "SU(d) generators need d >= 2, got " + std::to_string(d));
  }
  GeneratorSet gen;
  gen.dim_ = d;
  gen.generators_.reserve(static_cast<std::size_t>(d * d - 1));
  for (int k = 1; k < d; ++k) {
    for (int j = 0; j < k; ++j) {
      CMatrix sym = CMatrix::Zero(d, d);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      gen.generators_.push_back(sym);

      CMatrix asym = CMatrix::Zero(d, d);
      asym(j, k) = -kI;
      asym(k, j) = kI;
      gen.generators_.push_back(asym);
    }
    CMatrix diag = CMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (k * (k + 1.0)));
    for (int j = 0; j < k; ++j) diag(j, j) = scale;
    diag(k, k) = -k * scale;
    gen.generators_.push_back(diag);
  }

  StructureConstants sc = structure_constants(gen.generators_);
  gen.f_ = std::move(sc.f);
  gen.g_ = std::move(sc.g);
  gen.g_vanishes_ = true;
  for (double v : gen.g_) {
    if (v != 0.0) {
      gen.g_vanishes_ = false;
      break;
    }
  }
  return gen;
}

double product_rule_residual(const GeneratorSet& gen) {
  const int n = gen.size();
  const int d = gen.dim();
  const CMatrix id = CMatrix::Identity(d, d);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CMatrix rhs = (i == j ? 2.0 / d : 0.0) * id;
      for (int k = 0; k < n; ++k) {
        rhs += cplx(gen.g(i, j, k), gen.f(i, j, k)) * gen[k];
      }
      worst = std::max(worst, max_abs(gen[i] * gen[j] - rhs));
    }
  }
  return worst;
}

CMatrix lift_to_bipartite(const CMatrix& local, int d2) {
  return kron(local, CMatrix::Identity(d2, d2));
}

BlochVector bloch_vector(const CMatrix& op, const GeneratorSet& gen, int d2,
                         BlochSource source) {
  const int d1 = gen.dim();
  if (d2 < 1 || op.rows() != op.cols() || op.rows() != d1 * d2) {
    throw Error(ErrorKind::shape, "bloch_vector: operator is " +
                                      std::to_string(op.rows()) + "x" +
                                      std::to_string(op.cols()) + ", expected " +
                                      std::to_string(d1 * d2) + " square");
  }
  BlochVector out;
  out.source = source;
  out.components.resize(gen.size());
  // Tr(op · T⊗𝕀) = Σ_{a,a'} T_{a'a} Σ_b op_{(a,b),(a',b)}, i.e. contract T with
  // the partial trace of op over B.
  CMatrix reduced = CMatrix::Zero(d1, d1);
  for (int a = 0; a < d1; ++a) {
    for (int ap = 0; ap < d1; ++ap) {
      cplx s = 0.0;
      for (int b = 0; b < d2; ++b) s += op(a * d2 + b, ap * d2 + b);
      reduced(a, ap) = s;
    }
  }
  for (int k = 0; k < gen.size(); ++k) {
    out.components(k) = trace_of_product(reduced, gen[k]);
  }
  return out;
}

CMatrix contract_symmetric(const GeneratorSet& gen, const CVector& v, bool fast_path) {
  const int n = gen.size();
  CMatrix out = CMatrix::Zero(n, n);
  if (fast_path && gen.symmetric_constants_vanish()) return out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k) s += gen.g(i, j, k) * v(k);
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace lqu
