#ifndef MAXLAB_ERGODIC_HPP
#define MAXLAB_ERGODIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxlab/core.hpp"
#include "maxlab/rng.hpp"
#include "maxlab/semigroup.hpp"
#include "maxlab/spectral.hpp"

namespace maxlab {

/// (1/t) ∫_0^t e^{-sλ} ds = (1 - e^{-tλ}) / (tλ), with value 1 at tλ = 0.
inline double ergodic_symbol(double t, double lambda) {
  const double x = t * lambda;
  if (x == 0.0) return 1.0;
  return -std::expm1(-x) / x;
}

inline void require_positive_time(double t) {
  if (!(t > 0.0)) throw DomainError("ergodic average needs t > 0");
}

/// A(T, t) f = (1/t) ∫_0^t T_s f ds, evaluated in closed form on the spectrum.
inline ScalarField ergodic_average(const SemigroupGenerator& gen, double t,
                                   std::span<const Complex> f) {
  require_positive_time(t);
  return apply_spectral_function(
      gen.spectrum(), [t](double l) { return Complex(ergodic_symbol(t, l)); }, f);
}

inline BochnerField ergodic_average(const SemigroupGenerator& gen, double t,
                                    const BochnerField& field) {
  require_positive_time(t);
  return BochnerField(
      apply_spectral_function(gen.spectrum(),
                              [t](double l) { return Complex(ergodic_symbol(t, l)); },
                              field.values()),
      field.norm());
}

/// Geometric grid standing in for t > 0: [1e-4, 1e3] with 57 points.
inline std::vector<double> default_ergodic_grid() { return geometric_grid(1e-4, 1e3, 57); }

/// Inserts the geometric midpoint between neighbours; the input is a subset.
inline std::vector<double> refine_grid(std::span<const double> grid) {
  std::vector<double> out;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (k > 0) out.push_back(std::sqrt(grid[k - 1] * grid[k]));
    out.push_back(grid[k]);
  }
  return out;
}

namespace detail {

inline void require_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) throw DomainError("empty time grid");
  for (double t : t_grid) require_positive_time(t);
}

}  // namespace detail

/// sup over t in the grid of |A_B(T, t) F|_B, pointwise.
inline RealField vector_maximal_ergodic(const SemigroupGenerator& gen, const BochnerField& field,
                                        std::span<const double> t_grid) {
  detail::require_grid(t_grid);
  const auto& dec = gen.spectrum();
  const ComplexMatrix coeffs = dec.coefficients(field.values());
  RealField out(field.points(), 0.0);
  std::vector<Complex> g(dec.size());
  for (double t : t_grid) {
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = ergodic_symbol(t, dec.eigenvalues[k]);
    const BochnerField avg(dec.synthesize(g, coeffs), field.norm());
    sup_into(out, pointwise_banach_norm(avg));
  }
  return out;
}

/// sup over t in the grid of |A(T, t) f|, pointwise.
inline RealField maximal_ergodic(const SemigroupGenerator& gen, std::span<const Complex> f,
                                 std::span<const double> t_grid) {
  ComplexMatrix col(f.size(), 1);
  col.set_column(0, f);
  return vector_maximal_ergodic(gen, BochnerField(std::move(col), BanachNorm(1, 2.0)), t_grid);
}

/// Hopf-Dunford-Schwartz constant 2 (p / (p - 1))^{1/p}.
inline double hds_bound(double p) {
  if (!(p > 1.0) || std::isinf(p)) throw HypothesisError("hds_bound needs 1 < p < inf");
  return 2.0 * std::pow(p / (p - 1.0), 1.0 / p);
}

struct EnsembleSpec {
  std::size_t n = 8;      // largest point count; sizes are drawn from [n_min, n]
  std::size_t n_min = 2;
  std::size_t count = 20; // number of generators
  GeneratorKind kind = GeneratorKind::diffusion;
  double c = 1.0;
  bool identity = false;  // L = 0, T_t = I for every t

  void validate() const {
    if (n == 0 || n_min == 0 || n_min > n) throw DomainError("ensemble needs 1 <= n_min <= n");
    if (count == 0) throw DomainError("empty ensemble");
    if (!(c >= 0.0)) throw DomainError("ensemble rate scale must be nonnegative");
  }
};

/// The g-th member of an ensemble; deterministic in (spec, seed, g).
inline SemigroupGenerator ensemble_member(const EnsembleSpec& spec, std::uint64_t seed,
                                          std::size_t g, bool injective = true) {
  Rng pick = Rng::stream(seed, 0x9e3779b9ULL + g);
  const std::size_t n = spec.n_min + pick.index(spec.n - spec.n_min + 1);
  const std::uint64_t gen_seed = seed * 1000003ULL + g;
  if (spec.identity) {
    Rng w(gen_seed);
    std::vector<double> mu(n);
    for (auto& m : mu) m = w.uniform(0.5, 2.0);
    return make_diffusion(WeightedSpace(mu), RealMatrix(n, n));
  }
  GeneratorOptions opts;
  opts.c = spec.c;
  opts.injective = injective;
  return random_generator(n, gen_seed, spec.kind, opts);
}

/// Random test fields: Gaussian, or a few spikes on a small background
/// (spikes are what maximal operators amplify most).
inline ScalarField random_field(Rng& rng, std::size_t n) {
  ScalarField f(n);
  if (rng.coin(0.7)) {
    for (auto& v : f) v = rng.complex_normal();
  } else {
    for (auto& v : f) v = 0.01 * rng.complex_normal();
    const std::size_t spikes = 1 + rng.index(2);
    for (std::size_t k = 0; k < spikes; ++k) f[rng.index(n)] += rng.complex_normal() * 10.0;
  }
  return f;
}

inline ComplexMatrix random_table(Rng& rng, std::size_t n, std::size_t d) {
  ComplexMatrix m(n, d);
  for (std::size_t j = 0; j < d; ++j) m.set_column(j, random_field(rng, n));
  return m;
}

struct ErgodicRow {
  std::uint64_t seed;  // seed of the generator the row was measured on
  std::size_t n;
  double p;
  double ratio;
  double bound;
  bool pass;
};

struct ErgodicReport {
  double p = 2.0;
  double bound = 0.0;
  std::vector<double> ratios;         // scalar ||A f||_p / ||f||_p
  std::vector<double> vector_ratios;  // ||A_B F||_p / ||F||_{p,B}
  double adversarial_ratio = 0.0;     // best ratio found by hill climbing (0 if not run)
  std::vector<ErgodicRow> scalar_rows;
  std::vector<ErgodicRow> vector_rows;
  bool pass = true;

  double max_ratio() const {
    double m = adversarial_ratio;
    for (double r : ratios) m = std::max(m, r);
    for (double r : vector_ratios) m = std::max(m, r);
    return m;
  }
};

struct HdsOptions {
  int trials = 5;            // fields per generator
  std::size_t d = 4;         // fibre dimension for the vector suite
  double r = 3.0;            // fibre exponent
  bool adversarial = false;  // hill-climb on f for the first generators
  int climb_steps = 150;
  std::size_t climb_generators = 3;
};

namespace detail {

inline double ergodic_ratio(const SemigroupGenerator& gen, std::span<const Complex> f,
                            std::span<const double> t_grid, double p) {
  const RealField m = maximal_ergodic(gen, f, t_grid);
  return lp_norm(gen.space(), std::span<const double>(m), p) /
         lp_norm(gen.space(), f, p);
}

inline double hill_climb(const SemigroupGenerator& gen, ScalarField f,
                         std::span<const double> t_grid, double p, int steps, Rng& rng) {
  double best = ergodic_ratio(gen, f, t_grid, p);
  double step = 0.5;
  for (int s = 0; s < steps; ++s) {
    ScalarField trial = f;
    for (auto& v : trial) v += step * std::abs(v + 1e-3) * rng.complex_normal();
    if (lp_norm(gen.space(), std::span<const Complex>(trial), p) == 0.0) continue;
    const double r = ergodic_ratio(gen, trial, t_grid, p);
    if (r > best) {
      best = r;
      f = std::move(trial);
    } else {
      step = std::max(step * 0.97, 1e-3);
    }
  }
  return best;
}

}  // namespace detail

/// Scalar and vector maximal-ergodic ratios over a seeded ensemble, for
/// each p, against the Hopf-Dunford-Schwartz constant.
inline std::vector<ErgodicReport> hds_experiment(const EnsembleSpec& ensemble,
                                                 std::span<const double> p_list,
                                                 std::span<const double> t_grid,
                                                 std::uint64_t seed,
                                                 const HdsOptions& opts = {}) {
  ensemble.validate();
  detail::require_grid(t_grid);
  std::vector<ErgodicReport> reports;
  for (double p : p_list) {
    ErgodicReport rep;
    rep.p = p;
    rep.bound = hds_bound(p);
    const BanachNorm fibre(opts.d, opts.r);
    for (std::size_t g = 0; g < ensemble.count; ++g) {
      const auto gen = ensemble_member(ensemble, seed, g);
      const std::uint64_t gen_seed = seed * 1000003ULL + g;
      const std::size_t n = gen.size();
      Rng rng = Rng::stream(seed ^ 0x5bd1e995ULL, g);
      ScalarField best_f;
      double best = -1.0;
      for (int trial = 0; trial < opts.trials; ++trial) {
        const ScalarField f = random_field(rng, n);
        const double r = detail::ergodic_ratio(gen, f, t_grid, p);
        rep.ratios.push_back(r);
        rep.scalar_rows.push_back({gen_seed, n, p, r, rep.bound, r <= rep.bound + 1e-9});
        if (r > best) {
          best = r;
          best_f = f;
        }
        const BochnerField field(random_table(rng, n, opts.d), fibre);
        const RealField mv = vector_maximal_ergodic(gen, field, t_grid);
        const double rv = lp_norm(gen.space(), std::span<const double>(mv), p) /
                          bochner_norm(gen.space(), field, p);
        rep.vector_ratios.push_back(rv);
        rep.vector_rows.push_back({gen_seed, n, p, rv, rep.bound, rv <= rep.bound + 1e-9});
      }
      if (opts.adversarial && g < opts.climb_generators) {
        rep.adversarial_ratio = std::max(
            rep.adversarial_ratio,
            detail::hill_climb(gen, best_f, t_grid, p, opts.climb_steps, rng));
      }
    }
    rep.pass = rep.max_ratio() <= rep.bound + 1e-9;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace maxlab

#endif  // MAXLAB_ERGODIC_HPP
