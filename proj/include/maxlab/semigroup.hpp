#ifndef MAXLAB_SEMIGROUP_HPP
#define MAXLAB_SEMIGROUP_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxlab/core.hpp"
#include "maxlab/rng.hpp"
#include "maxlab/spectral.hpp"

namespace maxlab {

enum class GeneratorKind {
  diffusion,         // e^{-tL} positive, selfadjoint, contractive on every L^q
  contraction_only,  // selfadjoint and contractive, not necessarily positive
  general            // only mu-selfadjoint; used for negative controls
};

inline std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::diffusion: return "diffusion";
    case GeneratorKind::contraction_only: return "contraction-only";
    case GeneratorKind::general: return "general";
  }
  return "general";
}

inline GeneratorKind generator_kind_from_string(const std::string& s) {
  if (s == "diffusion") return GeneratorKind::diffusion;
  if (s == "contraction-only") return GeneratorKind::contraction_only;
  if (s == "general") return GeneratorKind::general;
  throw DomainError("unknown generator kind '" + s + "'");
}

/// The operator L of T_t = e^{-tL}, together with its spectral decomposition.
class SemigroupGenerator {
 public:
  explicit SemigroupGenerator(MuSymmetricOperator op,
                              GeneratorKind kind = GeneratorKind::general)
      : op_(std::make_shared<const MuSymmetricOperator>(std::move(op))),
        dec_(std::make_shared<const SpectralDecomposition>(decompose(*op_))),
        kind_(kind) {}

  SemigroupGenerator(const WeightedSpace& space, const RealMatrix& l,
                     GeneratorKind kind = GeneratorKind::general)
      : SemigroupGenerator(MuSymmetricOperator(space, l), kind) {}

  const WeightedSpace& space() const noexcept { return op_->space(); }
  const MuSymmetricOperator& op() const noexcept { return *op_; }
  const RealMatrix& matrix() const noexcept { return op_->entries(); }
  const SpectralDecomposition& spectrum() const noexcept { return *dec_; }
  GeneratorKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return op_->size(); }
  bool injective() const { return dec_->kernel_dimension() == 0; }

 private:
  std::shared_ptr<const MuSymmetricOperator> op_;
  std::shared_ptr<const SpectralDecomposition> dec_;
  GeneratorKind kind_;
};

/// Positive semidefinite in the mu inner product.
inline bool is_positive_semidefinite(const SemigroupGenerator& gen, double tol = 1e-10) {
  return gen.spectrum().eigenvalues.front() >= -tol;
}

/// Invariants making e^{-tL} a symmetric diffusion semigroup: PSD,
/// nonpositive off-diagonal entries, nonnegative row sums and nonnegative
/// weighted column sums.
inline std::vector<std::string> diffusion_violations(const SemigroupGenerator& gen,
                                                     double tol = 1e-10) {
  std::vector<std::string> out;
  if (!is_positive_semidefinite(gen, tol)) out.emplace_back("negative eigenvalue");
  const auto& l = gen.matrix();
  const auto& mu = gen.space();
  const std::size_t n = gen.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && l(i, j) > tol)
        out.push_back("positive off-diagonal entry at (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
      row += l(i, j);
      col += mu.weight(j) * l(j, i);
    }
    if (row < -tol) out.push_back("negative row sum in row " + std::to_string(i));
    if (col / mu.weight(i) < -tol)
      out.push_back("negative weighted column sum in column " + std::to_string(i));
  }
  return out;
}

inline SemigroupGenerator make_diffusion(const WeightedSpace& space, const RealMatrix& l,
                                         double tol = 1e-10) {
  SemigroupGenerator gen(MuSymmetricOperator(space, l, tol), GeneratorKind::diffusion);
  const auto bad = diffusion_violations(gen, tol);
  if (!bad.empty()) throw DomainError("not a diffusion generator: " + bad.front());
  return gen;
}

/// L = c (I - P) for a nonnegative mu-symmetric P with row sums <= 1.
inline SemigroupGenerator diffusion_from_transition(const WeightedSpace& space,
                                                    const RealMatrix& p, double c,
                                                    double tol = 1e-10) {
  const std::size_t n = space.size();
  if (p.rows() != n || p.cols() != n) throw DimensionError("transition matrix shape mismatch");
  if (!(c >= 0.0)) throw DomainError("rate scale must be nonnegative");
  RealMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p(i, j) < -tol) throw DomainError("transition matrix has a negative entry");
      l(i, j) = c * ((i == j ? 1.0 : 0.0) - p(i, j));
    }
  return make_diffusion(space, l, tol);
}

struct ContractionReport {
  bool pass = true;
  double worst_norm = 0.0;
  std::vector<double> failing_times;
};

/// Endpoint contraction on L^1 and L^inf via exact norms, L^2 spectrally.
inline ContractionReport verify_contraction_property(const SemigroupGenerator& gen,
                                                     std::span<const double> t_grid,
                                                     double tol = 1e-10) {
  ContractionReport rep;
  const auto& dec = gen.spectrum();
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("contraction t-grid must be positive");
    const auto tt = spectral_matrix(dec, [t](double l) { return Complex(std::exp(-t * l)); });
    double l2 = 0.0;
    for (double l : dec.eigenvalues) l2 = std::max(l2, std::exp(-t * l));
    const double worst = std::max({operator_norm(gen.space(), tt, 1.0),
                                   operator_norm(gen.space(), tt, kInf), l2});
    rep.worst_norm = std::max(rep.worst_norm, worst);
    if (worst > 1.0 + tol) {
      rep.pass = false;
      rep.failing_times.push_back(t);
    }
  }
  return rep;
}

inline std::vector<double> default_contraction_grid() { return geometric_grid(1e-3, 1e2, 24); }

inline SemigroupGenerator make_contraction(const WeightedSpace& space, const RealMatrix& l,
                                           double tol = 1e-10) {
  SemigroupGenerator gen(MuSymmetricOperator(space, l, tol), GeneratorKind::contraction_only);
  if (!is_positive_semidefinite(gen, tol))
    throw DomainError("contraction generator must be positive semidefinite");
  const auto grid = default_contraction_grid();
  if (!verify_contraction_property(gen, grid, tol).pass)
    throw DomainError("e^{-tL} is not contractive at the endpoints");
  return gen;
}

struct GeneratorOptions {
  double c = 1.0;                // rate scale
  bool injective = true;         // shift by floor*I when the spectrum reaches below floor
  double injectivity_floor = 1e-3;
  double weight_min = 0.5;       // point masses drawn uniformly from [weight_min, weight_max]
  double weight_max = 2.0;
  double edge_probability = 0.6;
};

/// Seeded random generator on n points.
///
/// diffusion: a nonnegative mu-symmetric P (mu_i P_ij = mu_j P_ji) with row
/// sums <= 1, L = c (I - P).
///
/// contraction-only: the same construction with a signed P whose absolute
/// row sums are <= 1. Then ||e^{ctP}||_q <= e^{ct} at q = 1, inf, so
/// e^{-tL} = e^{-ct} e^{ctP} contracts every L^q, while every negative entry
/// of P yields a positive off-diagonal entry of L. At least one such entry is
/// forced when n >= 2; the 2 x 2 case with P = [[0,-1],[-1,0]] is
/// L = [[1,1],[1,1]].
inline SemigroupGenerator random_generator(std::size_t n, std::uint64_t seed,
                                           GeneratorKind kind,
                                           const GeneratorOptions& opts = {}) {
  if (n == 0) throw DomainError("random_generator needs n >= 1");
  if (kind == GeneratorKind::general)
    throw DomainError("random_generator draws diffusion or contraction-only kinds");
  Rng rng(seed);
  std::vector<double> mu(n);
  for (auto& m : mu) m = rng.uniform(opts.weight_min, opts.weight_max);
  WeightedSpace space(mu);

  RealMatrix w(n, n);
  const bool signed_entries = kind == GeneratorKind::contraction_only;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!rng.coin(i == j ? 0.3 : opts.edge_probability)) continue;
      double v = rng.uniform(0.05, 1.0);
      if (signed_entries && rng.coin()) v = -v;
      w(i, j) = w(j, i) = v;
    }
  if (signed_entries && n >= 2) {
    const std::size_t a = rng.index(n);
    std::size_t b = rng.index(n - 1);
    if (b >= a) ++b;
    const double v = -rng.uniform(0.3, 1.0);
    w(a, b) = w(b, a) = v;
  }
  double worst_row = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::abs(w(i, j)) / mu[i];
    worst_row = std::max(worst_row, s);
  }
  // half the draws are Markov (some row sum exactly 1), half strictly substochastic
  const double target = rng.coin() ? 1.0 : rng.uniform(0.6, 1.0);
  const double scale = worst_row > 0.0 ? target / worst_row : 0.0;

  RealMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      l(i, j) = opts.c * ((i == j ? 1.0 : 0.0) - scale * w(i, j) / mu[i]);

  SemigroupGenerator gen(MuSymmetricOperator(space, l), kind);
  if (opts.injective && gen.spectrum().eigenvalues.front() < opts.injectivity_floor) {
    for (std::size_t i = 0; i < n; ++i) l(i, i) += opts.injectivity_floor;
    gen = SemigroupGenerator(MuSymmetricOperator(space, l), kind);
  }
  return gen;
}

// ---------------------------------------------------------------------------
// Evolution

inline void require_right_half_plane(Complex z) {
  if (z.real() < 0.0) throw DomainError("semigroup evaluated at Re z < 0");
}

/// e^{-zL} as a matrix.
inline ComplexMatrix evolution_matrix(const SemigroupGenerator& gen, Complex z) {
  require_right_half_plane(z);
  return spectral_matrix(gen.spectrum(), [z](double l) { return std::exp(-z * l); });
}

/// T_z f = e^{-zL} f, Re z >= 0.
inline ScalarField evolve(const SemigroupGenerator& gen, Complex z, std::span<const Complex> f) {
  require_right_half_plane(z);
  return apply_spectral_function(gen.spectrum(), [z](double l) { return std::exp(-z * l); }, f);
}

/// Tensor extension T_z ⊗ I_B: evolve applied to every column.
inline BochnerField tensor_evolve(const SemigroupGenerator& gen, Complex z,
                                  const BochnerField& field) {
  require_right_half_plane(z);
  return BochnerField(
      apply_spectral_function(gen.spectrum(), [z](double l) { return std::exp(-z * l); },
                              field.values()),
      field.norm());
}

/// λ^{iu} on the positive spectrum, 1 on the kernel.
inline Complex imaginary_power_symbol(double lambda, double u) {
  if (lambda <= 0.0) return 1.0;
  return std::exp(Complex(0.0, u * std::log(lambda)));
}

inline ScalarField imaginary_power(const SemigroupGenerator& gen, double u,
                                   std::span<const Complex> f) {
  return apply_spectral_function(
      gen.spectrum(), [u](double l) { return imaginary_power_symbol(l, u); }, f);
}

inline ComplexMatrix imaginary_power_matrix(const SemigroupGenerator& gen, double u) {
  return spectral_matrix(gen.spectrum(),
                         [u](double l) { return imaginary_power_symbol(l, u); });
}

/// Half-opening angle of the sector on which a symmetric diffusion
/// semigroup continues to contractions of L^p: π (1/2 - |1/p - 1/2|).
inline double stein_angle(double p) {
  if (!(p > 1.0) || std::isinf(p)) throw HypothesisError("stein_angle needs 1 < p < inf");
  return kPi * (0.5 - std::abs(1.0 / p - 0.5));
}

/// Sample lattice z = t e^{iθ} of the closed sector |arg z| <= psi.
class SectorGrid {
 public:
  SectorGrid(double psi, std::vector<double> radii, std::vector<double> angles)
      : psi_(psi), radii_(std::move(radii)), angles_(std::move(angles)) {
    if (!(psi_ >= 0.0) || !(psi_ < kPi / 2)) throw DomainError("sector angle must be in [0, pi/2)");
    if (radii_.empty() || angles_.empty()) throw DomainError("empty sector grid");
    for (std::size_t k = 0; k < radii_.size(); ++k)
      if (!(radii_[k] > 0.0) || (k > 0 && !(radii_[k] > radii_[k - 1])))
        throw DomainError("sector radii must be positive and increasing");
    for (double a : angles_)
      if (std::abs(a) > psi_ + 1e-15) throw DomainError("sector angle sample outside [-psi, psi]");
  }

  static SectorGrid make(double psi, double t_min = 1e-3, double t_max = 1e2,
                         std::size_t radius_count = 24, std::size_t angle_count = 9) {
    return SectorGrid(psi, geometric_grid(t_min, t_max, radius_count),
                      angle_count == 1 ? std::vector<double>{0.0}
                                       : uniform_grid(-psi, psi, angle_count));
  }

  /// Inserts the geometric midpoint between consecutive radii and the
  /// arithmetic midpoint between consecutive angles; the old grid is a subset.
  SectorGrid refined() const {
    std::vector<double> r, a;
    for (std::size_t k = 0; k < radii_.size(); ++k) {
      if (k > 0) r.push_back(std::sqrt(radii_[k - 1] * radii_[k]));
      r.push_back(radii_[k]);
    }
    for (std::size_t k = 0; k < angles_.size(); ++k) {
      if (k > 0) a.push_back(0.5 * (angles_[k - 1] + angles_[k]));
      a.push_back(angles_[k]);
    }
    return SectorGrid(psi_, std::move(r), std::move(a));
  }

  double psi() const noexcept { return psi_; }
  const std::vector<double>& radii() const noexcept { return radii_; }
  const std::vector<double>& angles() const noexcept { return angles_; }

  /// Points ordered radius-major.
  std::vector<Complex> points() const {
    std::vector<Complex> z;
    z.reserve(radii_.size() * angles_.size());
    for (double t : radii_)
      for (double th : angles_) z.push_back(std::polar(t, th));
    return z;
  }

 private:
  double psi_;
  std::vector<double> radii_;
  std::vector<double> angles_;
};

struct SectorProbeRow {
  Complex z;
  double p;
  double norm_lb;
};

struct SectorProbeReport {
  std::vector<SectorProbeRow> rows;
  double max_norm = 0.0;
  bool pass = true;
};

/// Randomized lower bounds on ||e^{-zL}||_p over a sector grid inside the
/// Stein angle. Passing means no sampled operator exceeds 1 + 1e-9.
inline SectorProbeReport sector_contraction_probe(const SemigroupGenerator& gen, double p,
                                                  const SectorGrid& grid, int trials,
                                                  std::uint64_t seed) {
  if (grid.psi() > stein_angle(p) + 1e-15)
    throw HypothesisError("sector angle exceeds the Stein angle for p = " + std::to_string(p));
  SectorProbeReport rep;
  std::uint64_t idx = 0;
  for (Complex z : grid.points()) {
    const auto tz = evolution_matrix(gen, z);
    const double lb =
        p == 2.0 ? [&] {
          // exact on L^2(mu): the operator is normal with symbol e^{-zλ}
          double m = 0.0;
          for (double l : gen.spectrum().eigenvalues) m = std::max(m, std::abs(std::exp(-z * l)));
          return m;
        }()
                 : operator_norm_lower_bound(gen.space(), tz, p, trials, seed + idx);
    ++idx;
    rep.rows.push_back({z, p, lb});
    rep.max_norm = std::max(rep.max_norm, lb);
  }
  rep.pass = rep.max_norm <= 1.0 + 1e-9;
  return rep;
}

}  // namespace maxlab

#endif  // MAXLAB_SEMIGROUP_HPP
