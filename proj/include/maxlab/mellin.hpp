#ifndef MAXLAB_MELLIN_HPP
#define MAXLAB_MELLIN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxlab/core.hpp"
#include "maxlab/ergodic.hpp"
#include "maxlab/rng.hpp"
#include "maxlab/semigroup.hpp"
#include "maxlab/spectral.hpp"

namespace maxlab {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// ---------------------------------------------------------------------------
// The multiplier and its Fourier dual

/// m_θ(λ) = exp(-e^{iθ} λ) - (1 - e^{-λ}) / λ, with m_θ(0) = 0.
inline Complex m_theta(double theta, double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("m_theta needs lambda >= 0");
  if (!(std::abs(theta) < kPi / 2)) throw DomainError("m_theta needs |theta| < pi/2");
  if (lambda == 0.0) return 0.0;
  return std::exp(-std::polar(lambda, theta)) - ergodic_symbol(1.0, lambda);
}

/// Fourier transform of u -> m_θ(e^u) (kernel e^{-iux}), so that
/// m_θ(λ) = (1/2π) ∫ n̂_θ(u) λ^{iu} du:
///   n̂_θ(u) = (e^{-θu} - (1 + iu)^{-1}) Γ(-iu).
/// The singularity at u = 0 is removable, with value -(1 + iθ).
inline Complex n_hat(double theta, double u) {
  const Complex i(0.0, 1.0);
  if (std::abs(u) < 1e-6) {
    // first-order expansion about u = 0
    const Complex slope = kEulerGamma * theta - i * kEulerGamma + i * (0.5 * theta * theta + 1.0);
    return -1.0 - i * theta + u * slope;
  }
  return (std::exp(-theta * u) - 1.0 / (1.0 + i * u)) * complex_gamma(-i * u);
}

/// |n̂_θ(u)| e^{(π/2 - |θ|)|u|}, the quantity bounded by the decay constant.
inline double decay_ratio(double theta, double u) {
  return std::abs(n_hat(theta, u)) * std::exp((kPi / 2 - std::abs(theta)) * std::abs(u));
}

struct MultiplierSample {
  double theta;
  double u;
  Complex value;       // n̂_θ(u)
  double bound_ratio;  // |value| e^{(π/2 - |θ|)|u|}
};

inline std::vector<double> theta_grid(double psi, std::size_t count) {
  return count == 1 ? std::vector<double>{0.0} : uniform_grid(-psi, psi, count);
}

inline std::vector<MultiplierSample> multiplier_table(double psi, std::span<const double> u_grid,
                                                      std::size_t theta_count = 9) {
  if (!(psi >= 0.0) || !(psi < kPi / 2)) throw DomainError("multiplier table needs 0 <= psi < pi/2");
  std::vector<MultiplierSample> rows;
  for (double th : theta_grid(psi, theta_count))
    for (double u : u_grid) {
      const Complex v = n_hat(th, u);
      rows.push_back({th, u, v, std::abs(v) * std::exp((kPi / 2 - std::abs(th)) * std::abs(u))});
    }
  return rows;
}

/// max over the θ-grid in [-psi, psi] and u_grid of |n̂_θ(u)| e^{(π/2-|θ|)|u|}.
inline double decay_constant(double psi, std::span<const double> u_grid,
                             std::size_t theta_count = 9) {
  if (u_grid.empty()) throw DomainError("empty u grid");
  double c = 0.0;
  for (const auto& row : multiplier_table(psi, u_grid, theta_count)) c = std::max(c, row.bound_ratio);
  return c;
}

struct DecayStability {
  double coarse = 0.0;
  double fine = 0.0;
  double relative_change = 0.0;
  bool stable = false;
};

/// decay_constant on a (u, θ) grid and on its doubling; stable when the two
/// agree within `rel_tol`.
inline DecayStability decay_constant_stability(double psi, double u_max = 40.0,
                                               std::size_t u_count = 801,
                                               std::size_t theta_count = 9,
                                               double rel_tol = 0.05) {
  DecayStability s;
  const auto coarse_u = uniform_grid(-u_max, u_max, u_count);
  const auto fine_u = uniform_grid(-u_max, u_max, 2 * u_count - 1);
  s.coarse = decay_constant(psi, coarse_u, theta_count);
  s.fine = decay_constant(psi, fine_u, 2 * theta_count - 1);
  s.relative_change = std::abs(s.fine - s.coarse) / s.coarse;
  s.stable = std::isfinite(s.fine) && s.relative_change < rel_tol;
  return s;
}

// ---------------------------------------------------------------------------
// Mellin reconstruction

struct MellinOptions {
  double u_max = 40.0;  // truncation U
  double step = 0.01;   // trapezoid step h
};

struct MellinResult {
  Complex value;     // quadrature
  Complex direct;    // m_θ(λ)
  double error = 0.0;
  bool within(double tol) const noexcept { return error <= tol; }
};

/// Trapezoidal value of (1/2π) ∫_{-U}^{U} n̂_θ(u) λ^{iu} du.
inline MellinResult mellin_reconstruct(double theta, double lambda, const MellinOptions& opts = {}) {
  if (!(lambda > 0.0)) throw DomainError("Mellin reconstruction needs lambda > 0");
  if (!(opts.u_max > 0.0) || !(opts.step > 0.0)) throw DomainError("bad quadrature parameters");
  const auto panels = static_cast<long>(std::llround(opts.u_max / opts.step));
  const double h = opts.u_max / static_cast<double>(panels);
  const double log_lambda = std::log(lambda);
  Complex sum{};
  for (long k = -panels; k <= panels; ++k) {
    const double u = h * static_cast<double>(k);
    const double w = (k == -panels || k == panels) ? 0.5 : 1.0;
    sum += w * n_hat(theta, u) * std::exp(Complex(0.0, u * log_lambda));
  }
  MellinResult r;
  r.value = sum * h / (2.0 * kPi);
  r.direct = m_theta(theta, lambda);
  r.error = std::abs(r.value - r.direct);
  return r;
}

/// Bound on the part of the integral beyond |u| = U, given the decay constant.
inline double mellin_tail_bound(double theta, double u_max, double decay_c) {
  const double gap = kPi / 2 - std::abs(theta);
  return decay_c * std::exp(-gap * u_max) / gap / kPi;
}

// ---------------------------------------------------------------------------
// Operators

/// m_θ(tL) applied to every column of F (direct formula on all eigenvalues).
inline BochnerField apply_m_theta(const SemigroupGenerator& gen, double theta, double t,
                                  const BochnerField& field) {
  if (!(t > 0.0)) throw DomainError("apply_m_theta needs t > 0");
  return BochnerField(
      apply_spectral_function(gen.spectrum(),
                              [theta, t](double l) { return m_theta(theta, t * std::max(l, 0.0)); },
                              field.values()),
      field.norm());
}

/// ||T_z F - A(t) F - m_θ(tL) F||_{2,B} for z = t e^{iθ}.
inline double decomposition_residual(const SemigroupGenerator& gen, Complex z,
                                     const BochnerField& field) {
  if (z == Complex{}) throw DomainError("decomposition needs z != 0");
  require_right_half_plane(z);
  const double t = std::abs(z);
  const double theta = std::arg(z);
  const auto tz = tensor_evolve(gen, z, field);
  const auto avg = ergodic_average(gen, t, field);
  const auto mt = apply_m_theta(gen, theta, t, field);
  const ComplexMatrix diff = tz.values() - avg.values() - mt.values();
  return bochner_norm(gen.space(), BochnerField(diff, field.norm()), 2.0);
}

/// sup over the sector grid of |T_z F|_B, pointwise.
inline RealField sector_maximal(const SemigroupGenerator& gen, const BochnerField& field,
                                const SectorGrid& grid) {
  const auto& dec = gen.spectrum();
  const ComplexMatrix coeffs = dec.coefficients(field.values());
  RealField out(field.points(), 0.0);
  std::vector<Complex> g(dec.size());
  for (Complex z : grid.points()) {
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::exp(-z * dec.eigenvalues[k]);
    sup_into(out, pointwise_banach_norm(BochnerField(dec.synthesize(g, coeffs), field.norm())));
  }
  return out;
}

/// sup over (t, θ) in the grid of |m_θ(tL) F|_B, pointwise.
inline RealField multiplier_maximal(const SemigroupGenerator& gen, const BochnerField& field,
                                    const SectorGrid& grid) {
  const auto& dec = gen.spectrum();
  const ComplexMatrix coeffs = dec.coefficients(field.values());
  RealField out(field.points(), 0.0);
  std::vector<Complex> g(dec.size());
  for (double t : grid.radii())
    for (double th : grid.angles()) {
      for (std::size_t k = 0; k < g.size(); ++k)
        g[k] = m_theta(th, t * std::max(dec.eigenvalues[k], 0.0));
      sup_into(out, pointwise_banach_norm(BochnerField(dec.synthesize(g, coeffs), field.norm())));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Interpolation planner

struct BipPlan {
  double p = 2.0;
  double r = 2.0;
  double theta = 0.5;  // interpolation parameter
  double psi = 0.0;    // target sector angle
  double q = 2.0;      // exponent of the UMD endpoint
  double sigma = 0.0;  // H^inf calculus angle
  double omega = 0.0;  // power angle, sigma * theta
};

/// Checks every relation a plan must satisfy; returns the first violation.
inline std::optional<std::string> bip_plan_violation(const BipPlan& plan) {
  if (!(std::abs(2.0 / plan.p - 1.0) < plan.theta)) return "|2/p - 1| < theta fails";
  if (!(std::abs(2.0 / plan.r - 1.0) < plan.theta)) return "|2/r - 1| < theta fails";
  if (!(plan.theta < 1.0)) return "theta < 1 fails";
  if (!(plan.psi < kPi / 2 * (1.0 - plan.theta))) return "psi < (pi/2)(1 - theta) fails";
  if (!(plan.q > 1.0) || !std::isfinite(plan.q)) return "1 < q < inf fails";
  const double lhs = 1.0 / plan.p;
  const double rhs = (1.0 - plan.theta) / 2.0 + plan.theta / plan.q;
  if (std::abs(lhs - rhs) > 1e-12) return "1/p = (1 - theta)/2 + theta/q fails";
  if (!(plan.sigma > kPi / 2)) return "sigma > pi/2 fails";
  if (!(plan.omega < kPi / 2 - plan.psi)) return "omega < pi/2 - psi fails";
  return std::nullopt;
}

/// Exponent bookkeeping for the bounded-imaginary-powers corollary: pick θ
/// (the smallest admissible value plus `margin` unless one is requested),
/// then q from 1/p = (1-θ)/2 + θ/q, σ as the mean of π/2 and (π/2-ψ)/θ,
/// and ω = σθ.
inline BipPlan bip_plan(double p, double r, double psi,
                        std::optional<double> requested_theta = std::nullopt,
                        double margin = 0.05) {
  if (!(p > 1.0) || std::isinf(p) || !(r > 1.0) || std::isinf(r))
    throw HypothesisError("bip_plan needs 1 < p, r < inf");
  if (!(psi >= 0.0)) throw HypothesisError("bip_plan needs psi >= 0");
  const double need_p = std::abs(2.0 / p - 1.0);
  const double need_r = std::abs(2.0 / r - 1.0);
  const double theta_min = std::max(need_p, need_r);
  const double theta_cap = std::min(1.0, 1.0 - 2.0 * psi / kPi);  // θ < cap keeps ψ admissible

  BipPlan plan;
  plan.p = p;
  plan.r = r;
  plan.psi = psi;
  if (requested_theta) {
    plan.theta = *requested_theta;
    if (!(need_p < plan.theta))
      throw HypothesisError("|2/p - 1| = " + std::to_string(need_p) +
                            " >= theta = " + std::to_string(plan.theta));
    if (!(need_r < plan.theta))
      throw HypothesisError("|2/r - 1| = " + std::to_string(need_r) +
                            " >= theta = " + std::to_string(plan.theta));
    if (!(plan.theta < theta_cap))
      throw HypothesisError("psi >= (pi/2)(1 - theta) for theta = " + std::to_string(plan.theta));
  } else {
    if (!(theta_min < theta_cap))
      throw HypothesisError("no admissible theta: max(|2/p-1|, |2/r-1|) = " +
                            std::to_string(theta_min) + " but psi requires theta < " +
                            std::to_string(theta_cap));
    plan.theta = theta_min + margin;
    if (!(plan.theta < theta_cap)) plan.theta = 0.5 * (theta_min + theta_cap);
    if (plan.theta <= 0.0) plan.theta = 0.5 * theta_cap;
  }
  const double denom = 1.0 / p - (1.0 - plan.theta) / 2.0;
  plan.q = plan.theta / denom;
  plan.sigma = 0.5 * (kPi / 2 + (kPi / 2 - psi) / plan.theta);
  plan.omega = plan.sigma * plan.theta;
  if (auto bad = bip_plan_violation(plan)) throw HypothesisError("invalid plan: " + *bad);
  return plan;
}

// ---------------------------------------------------------------------------
// Experiments

struct MaximalExperimentOptions {
  int trials = 5;  // fields per generator and dimension
  double t_min = 1e-3;
  double t_max = 1e2;
  std::size_t radius_count = 24;
  std::size_t angle_count = 9;
  std::optional<double> theta;  // interpolation parameter for the plan
};

struct DimensionRow {
  std::size_t d;
  double c_emp;
};

struct TriangleRow {
  std::size_t d;
  std::size_t generator;
  int trial;
  double maximal;     // ||M F||_p
  double ergodic;     // ||A_B F||_p
  double multiplier;  // ||sup |m_θ(tL) F|_B||_p
  double field;       // ||F||_{p,B}
};

struct MaximalExperimentResult {
  BipPlan plan;
  std::vector<DimensionRow> profile;
  std::vector<TriangleRow> triangle;
  std::size_t triangle_violations = 0;
  double dimension_ratio = 0.0;  // C_emp(d_max) / C_emp(d_min)
  bool pass = false;
};

/// Empirical constant C_emp(d) = max ||M^ψ_B F||_p / ||F||_{p,B} over the
/// ensemble, for B = (C^d, l^r), together with the pointwise triangle split
/// into the ergodic part and the multiplier part.
inline MaximalExperimentResult maximal_theorem_experiment(
    const EnsembleSpec& ensemble, double p, double r, double psi,
    std::span<const std::size_t> d_list, std::uint64_t seed,
    const MaximalExperimentOptions& opts = {}) {
  ensemble.validate();
  if (d_list.empty()) throw DomainError("empty dimension list");
  MaximalExperimentResult res;
  res.plan = bip_plan(p, r, psi, opts.theta);
  const SectorGrid grid = SectorGrid::make(psi, opts.t_min, opts.t_max, opts.radius_count,
                                           opts.angle_count);
  std::vector<SemigroupGenerator> gens;
  for (std::size_t g = 0; g < ensemble.count; ++g) gens.push_back(ensemble_member(ensemble, seed, g));

  for (std::size_t d : d_list) {
    const BanachNorm fibre(d, r);
    fibre.require_umd();
    double c_emp = 0.0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto& gen = gens[g];
      Rng rng = Rng::stream(seed ^ 0x2545f491ULL, g * 4099ULL + d);
      for (int trial = 0; trial < opts.trials; ++trial) {
        const BochnerField field(random_table(rng, gen.size(), d), fibre);
        const double fnorm = bochner_norm(gen.space(), field, p);
        const RealField mf = sector_maximal(gen, field, grid);
        const RealField af = vector_maximal_ergodic(gen, field, grid.radii());
        const RealField nf = multiplier_maximal(gen, field, grid);
        TriangleRow row{d,
                        g,
                        trial,
                        lp_norm(gen.space(), std::span<const double>(mf), p),
                        lp_norm(gen.space(), std::span<const double>(af), p),
                        lp_norm(gen.space(), std::span<const double>(nf), p),
                        fnorm};
        if (row.maximal > row.ergodic + row.multiplier + 1e-9 * fnorm) ++res.triangle_violations;
        c_emp = std::max(c_emp, row.maximal / fnorm);
        res.triangle.push_back(row);
      }
    }
    res.profile.push_back({d, c_emp});
  }
  const auto lo = std::min_element(res.profile.begin(), res.profile.end(),
                                   [](auto& a, auto& b) { return a.d < b.d; });
  const auto hi = std::max_element(res.profile.begin(), res.profile.end(),
                                   [](auto& a, auto& b) { return a.d < b.d; });
  res.dimension_ratio = hi->c_emp / lo->c_emp;
  res.pass = res.dimension_ratio <= 2.0 && res.triangle_violations == 0;
  return res;
}

struct ConvergenceRow {
  double rho;
  double error;  // e(ρ)
};

struct ConvergenceProfile {
  std::vector<ConvergenceRow> rows;
  bool monotone = true;
  double slope = 0.0;  // least-squares slope of log e against log ρ
  bool pass(double slope_tol = 0.2) const {
    return monotone && std::abs(slope - 1.0) <= slope_tol;
  }
};

namespace detail {

// e^{w} - 1 without cancellation for small |w|
inline Complex complex_expm1(Complex w) {
  const double a = w.real(), b = w.imag();
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

}  // namespace detail

/// e(ρ) = max_x sup{ |T_z F(x) - F(x)|_B : z in the sector grid, |z| <= ρ }
/// for a decreasing list of radii; the sample set for ρ_k is every radius
/// ρ_j <= ρ_k times every angle, so e is non-increasing by construction up
/// to roundoff.
inline ConvergenceProfile pointwise_convergence_profile(const SemigroupGenerator& gen,
                                                        const BochnerField& field, double psi,
                                                        std::span<const double> radii,
                                                        std::size_t angle_count = 9) {
  if (radii.empty()) throw DomainError("empty radius list");
  for (std::size_t k = 0; k < radii.size(); ++k)
    if (!(radii[k] > 0.0) || (k > 0 && !(radii[k] < radii[k - 1])))
      throw DomainError("radii must be positive and strictly decreasing");
  const auto angles = theta_grid(psi, angle_count);
  const auto& dec = gen.spectrum();
  const ComplexMatrix coeffs = dec.coefficients(field.values());
  std::vector<double> per_radius(radii.size(), 0.0);
  std::vector<Complex> g(dec.size());
  for (std::size_t k = 0; k < radii.size(); ++k)
    for (double th : angles) {
      const Complex z = std::polar(radii[k], th);
      for (std::size_t j = 0; j < g.size(); ++j)
        g[j] = detail::complex_expm1(-z * dec.eigenvalues[j]);
      const RealField diff =
          pointwise_banach_norm(BochnerField(dec.synthesize(g, coeffs), field.norm()));
      per_radius[k] = std::max(per_radius[k], *std::max_element(diff.begin(), diff.end()));
    }
  ConvergenceProfile prof;
  // radii decrease, so e(ρ_k) = max over j >= k
  double running = 0.0;
  std::vector<double> e(radii.size());
  for (std::size_t k = radii.size(); k-- > 0;) {
    running = std::max(running, per_radius[k]);
    e[k] = running;
  }
  for (std::size_t k = 0; k < radii.size(); ++k) {
    prof.rows.push_back({radii[k], e[k]});
    if (k > 0 && e[k] > e[k - 1] + 1e-12) prof.monotone = false;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const auto& row : prof.rows) {
    if (!(row.error > 0.0)) continue;
    const double x = std::log(row.rho), y = std::log(row.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  prof.slope = m >= 2 ? (m * sxy - sx * sy) / (m * sxx - sx * sx)
                      : std::numeric_limits<double>::quiet_NaN();
  return prof;
}

struct ImaginaryPowerRow {
  double u;
  double norm_lb;
};

struct ImaginaryPowerFit {
  std::vector<ImaginaryPowerRow> rows;
  double k = 1.0;      // smallest K with norm_lb <= K e^{ω|u|} on the grid
  double omega = 0.0;  // least-squares slope of log norm_lb against |u|, floored at 0
};

/// Randomized lower bounds on ||L^{iu}||_p over u_grid and a fitted
/// envelope K e^{ω|u|}.
inline ImaginaryPowerFit imaginary_power_estimate(const SemigroupGenerator& gen, double p,
                                                  std::span<const double> u_grid, int trials,
                                                  std::uint64_t seed) {
  if (!gen.injective()) throw HypothesisError("imaginary powers need an injective generator");
  if (u_grid.empty()) throw DomainError("empty u grid");
  ImaginaryPowerFit fit;
  for (std::size_t k = 0; k < u_grid.size(); ++k) {
    const double u = u_grid[k];
    const double lb = u == 0.0 ? 1.0
                               : operator_norm_lower_bound(gen.space(),
                                                           imaginary_power_matrix(gen, u), p,
                                                           trials, seed + k);
    fit.rows.push_back({u, lb});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& row : fit.rows) {
    const double x = std::abs(row.u), y = std::log(row.norm_lb);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(fit.rows.size());
  const double den = m * sxx - sx * sx;
  fit.omega = den > 0.0 ? std::max(0.0, (m * sxy - sx * sy) / den) : 0.0;
  fit.k = 0.0;
  for (const auto& row : fit.rows)
    fit.k = std::max(fit.k, row.norm_lb * std::exp(-fit.omega * std::abs(row.u)));
  return fit;
}

}  // namespace maxlab

#endif  // MAXLAB_MELLIN_HPP
