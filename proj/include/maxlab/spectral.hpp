#ifndef MAXLAB_SPECTRAL_HPP
#define MAXLAB_SPECTRAL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxlab/core.hpp"
#include "maxlab/rng.hpp"

namespace maxlab {

/// A real n x n matrix that is selfadjoint for <f, g>_mu, i.e.
/// mu_i A_ij = mu_j A_ji.
class MuSymmetricOperator {
 public:
  MuSymmetricOperator(WeightedSpace space, RealMatrix entries, double abs_tol = 1e-10)
      : space_(std::move(space)), a_(std::move(entries)) {
    const std::size_t n = space_.size();
    if (a_.rows() != n || a_.cols() != n)
      throw DimensionError("operator shape differs from point count");
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        scale = std::max(scale, std::abs(space_.weight(i) * a_(i, j)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double gap =
            std::abs(space_.weight(i) * a_(i, j) - space_.weight(j) * a_(j, i));
        if (gap > abs_tol * scale)
          throw DomainError("operator is not mu-selfadjoint at (" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
      }
  }

  const WeightedSpace& space() const noexcept { return space_; }
  const RealMatrix& entries() const noexcept { return a_; }
  std::size_t size() const noexcept { return a_.rows(); }

 private:
  WeightedSpace space_;
  RealMatrix a_;
};

struct JacobiOptions {
  int max_sweeps = 100;
  double off_threshold = 1e-13;  // relative to the Frobenius norm
  double kernel_snap = 1e-12;    // relative to max |lambda|
};

/// Eigenvalues ascending; column k of `eigenvectors` is v_k, with
/// Σ_x mu_x v_k(x) v_l(x) = δ_kl.
struct SpectralDecomposition {
  WeightedSpace space;
  std::vector<double> eigenvalues;
  RealMatrix eigenvectors;
  int sweeps = 0;

  std::size_t size() const noexcept { return eigenvalues.size(); }

  std::size_t kernel_dimension() const {
    return static_cast<std::size_t>(
        std::count(eigenvalues.begin(), eigenvalues.end(), 0.0));
  }

  /// Coefficient table c(k, j) = <F_j, v_k>_mu for each column F_j of F.
  ComplexMatrix coefficients(const ComplexMatrix& fields) const {
    const std::size_t n = size();
    if (fields.rows() != n) throw DimensionError("field length differs from point count");
    ComplexMatrix c(n, fields.cols());
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x) {
        const double w = space.weight(x) * eigenvectors(x, k);
        if (w == 0.0) continue;
        for (std::size_t j = 0; j < fields.cols(); ++j) c(k, j) += w * fields(x, j);
      }
    return c;
  }

  /// Σ_k g_k c(k, j) v_k for precomputed spectral values g_k.
  ComplexMatrix synthesize(std::span<const Complex> g, const ComplexMatrix& coeffs) const {
    const std::size_t n = size();
    if (g.size() != n || coeffs.rows() != n)
      throw DimensionError("spectral synthesis shape mismatch");
    ComplexMatrix out(n, coeffs.cols());
    for (std::size_t k = 0; k < n; ++k) {
      if (g[k] == Complex{}) continue;
      for (std::size_t x = 0; x < n; ++x) {
        const Complex w = g[k] * eigenvectors(x, k);
        for (std::size_t j = 0; j < coeffs.cols(); ++j) out(x, j) += w * coeffs(k, j);
      }
    }
    return out;
  }

  /// g evaluated on the spectrum; rejects non-finite values.
  template <typename G>
  std::vector<Complex> evaluate(G&& g) const {
    std::vector<Complex> values(size());
    for (std::size_t k = 0; k < size(); ++k) {
      const Complex v = g(eigenvalues[k]);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("spectral function is not finite at eigenvalue " +
                          std::to_string(eigenvalues[k]));
      values[k] = v;
    }
    return values;
  }
};

namespace detail {

inline void jacobi_rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

inline double off_diagonal_norm(const RealMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi on the symmetrized matrix D^{1/2} A D^{-1/2}, D = diag(mu).
inline SpectralDecomposition decompose(const MuSymmetricOperator& op,
                                       const JacobiOptions& opts = {}) {
  const std::size_t n = op.size();
  const auto& mu = op.space();
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = std::sqrt(mu.weight(i) / mu.weight(j)) * op.entries()(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = 0.5 * (m(i, j) + m(j, i));

  double frob = 0.0;
  for (double x : m.data()) frob += x * x;
  frob = std::sqrt(frob);

  RealMatrix w = RealMatrix::identity(n);
  int sweep = 0;
  while (detail::off_diagonal_norm(m) > opts.off_threshold * frob) {
    if (sweep == opts.max_sweeps)
      throw ConvergenceError("Jacobi sweep cap reached without convergence");
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (m(p, q) != 0.0) detail::jacobi_rotate(m, w, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m(a, a) < m(b, b); });

  SpectralDecomposition dec{mu, std::vector<double>(n), RealMatrix(n, n), sweep};
  double largest = 0.0;
  for (std::size_t k = 0; k < n; ++k) largest = std::max(largest, std::abs(m(k, k)));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    double lambda = m(src, src);
    if (std::abs(lambda) < opts.kernel_snap * largest || lambda == 0.0) lambda = 0.0;
    dec.eigenvalues[k] = lambda;
    // fix the sign so the largest-modulus component is positive
    std::size_t lead = 0;
    for (std::size_t x = 1; x < n; ++x)
      if (std::abs(w(x, src)) > std::abs(w(lead, src))) lead = x;
    const double sign = w(lead, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t x = 0; x < n; ++x)
      dec.eigenvectors(x, k) = sign * w(x, src) / std::sqrt(mu.weight(x));
  }
  return dec;
}

/// g(A) as a matrix: G_ij = Σ_k g(λ_k) v_k(i) v_k(j) mu_j.
template <typename G>
ComplexMatrix spectral_matrix(const SpectralDecomposition& dec, G&& g) {
  const auto values = dec.evaluate(std::forward<G>(g));
  const std::size_t n = dec.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (values[k] == Complex{}) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex gi = values[k] * dec.eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += gi * dec.eigenvectors(j, k) * dec.space.weight(j);
    }
  }
  return out;
}

/// Σ_k g(λ_k) <f, v_k>_mu v_k
template <typename G>
ScalarField apply_spectral_function(const SpectralDecomposition& dec, G&& g,
                                    std::span<const Complex> f) {
  ComplexMatrix col(f.size(), 1);
  col.set_column(0, f);
  const auto values = dec.evaluate(std::forward<G>(g));
  return dec.synthesize(values, dec.coefficients(col)).column(0);
}

/// Columnwise form of apply_spectral_function.
template <typename G>
ComplexMatrix apply_spectral_function(const SpectralDecomposition& dec, G&& g,
                                      const ComplexMatrix& fields) {
  const auto values = dec.evaluate(std::forward<G>(g));
  return dec.synthesize(values, dec.coefficients(fields));
}

/// max |A - Σ λ_k v_k <., v_k>_mu| over entries.
inline double reconstruction_error(const MuSymmetricOperator& op,
                                   const SpectralDecomposition& dec) {
  const auto rebuilt = spectral_matrix(dec, [](double l) { return Complex(l); });
  return max_abs_diff(rebuilt, to_complex(op.entries()));
}

// ---------------------------------------------------------------------------
// Gamma function

namespace detail {

// Lanczos approximation, g = 7, nine coefficients (the set used by
// Numerical Recipes 2nd ed. and most reference implementations).
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log Γ(z) for Re z >= 1/2
inline Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i)
    series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace detail

/// Γ(z) off the poles {0, -1, -2, ...}. Reflection is used for Re z < 1/2.
inline Complex complex_gamma(Complex z) {
  const double nearest = std::round(z.real());
  if (nearest <= 0.0 && std::abs(z - nearest) < 1e-8)
    throw DomainError("complex_gamma evaluated within 1e-8 of a pole");
  if (z.real() < 0.5) {
    // Γ(z) Γ(1 - z) = π / sin(π z)
    return kPi / (std::sin(kPi * z) * std::exp(detail::lanczos_log_gamma(1.0 - z)));
  }
  if (z.imag() == 0.0 && z.real() == std::round(z.real()) && z.real() <= 20.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(z.real()); ++k) f *= k;
    return f;
  }
  return std::exp(detail::lanczos_log_gamma(z));
}

// ---------------------------------------------------------------------------
// Operator norms

/// Exact weighted endpoint norms: p = inf (max row sum) or p = 1
/// (max over j of (1/mu_j) Σ_i mu_i |A_ij|).
inline double operator_norm(const WeightedSpace& space, const ComplexMatrix& a, double p) {
  const std::size_t n = space.size();
  if (a.rows() != n || a.cols() != n) throw DimensionError("operator shape mismatch");
  double best = 0.0;
  if (std::isinf(p)) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += std::abs(a(i, j));
      best = std::max(best, s);
    }
    return best;
  }
  if (p == 1.0) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += space.weight(i) * std::abs(a(i, j));
      best = std::max(best, s / space.weight(j));
    }
    return best;
  }
  throw DomainError("exact operator norms are only available for p = 1 and p = inf");
}

inline double operator_norm(const WeightedSpace& space, const RealMatrix& a, double p) {
  return operator_norm(space, to_complex(a), p);
}

namespace detail {

// x_i -> |x_i|^{e} sgn(x_i)
inline ScalarField signed_power(std::span<const Complex> x, double e) {
  ScalarField y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::abs(x[i]);
    y[i] = r == 0.0 ? Complex{} : std::pow(r, e) * (x[i] / r);
  }
  return y;
}

inline double plain_lp(std::span<const Complex> x, double p) {
  double scale = 0.0;
  for (Complex z : x) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (Complex z : x) s += std::pow(std::abs(z) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

}  // namespace detail

struct NormEstimateOptions {
  int ascent_steps = 60;  // p-norm power iterations per random start
};

/// Lower bound on ||A||_{L^p(mu) -> L^p(mu)}, 1 < p < inf. Every value
/// considered is an attained ratio ||Af||_p / ||f||_p, so the result never
/// exceeds the true norm. Starts from `trials` seeded random complex f and
/// climbs each with the dual-vector power iteration for the p-norm.
inline double operator_norm_lower_bound(const WeightedSpace& space, const ComplexMatrix& a,
                                        double p, int trials, std::uint64_t seed,
                                        const NormEstimateOptions& opts = {}) {
  const std::size_t n = space.size();
  if (a.rows() != n || a.cols() != n) throw DimensionError("operator shape mismatch");
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("lower-bound estimator needs 1 < p < inf");
  if (trials < 1) throw DomainError("need at least one trial");
  const double q = p / (p - 1.0);

  // B = D^{1/p} A D^{-1/p} acts isometrically like A between unweighted l^p
  ComplexMatrix b(n, n), bh(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = std::pow(space.weight(i) / space.weight(j), 1.0 / p) * a(i, j);
      bh(j, i) = std::conj(b(i, j));
    }

  double best = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
    ScalarField x(n);
    for (auto& v : x) v = rng.complex_normal();
    double xn = detail::plain_lp(x, p);
    if (xn == 0.0) continue;
    for (auto& v : x) v /= xn;
    for (int step = 0; step <= opts.ascent_steps; ++step) {
      const ScalarField y = b.apply(x);
      const double gamma = detail::plain_lp(y, p);
      best = std::max(best, gamma);
      if (gamma == 0.0 || step == opts.ascent_steps) break;
      const ScalarField z = bh.apply(detail::signed_power(y, p - 1.0));
      ScalarField next = detail::signed_power(z, q - 1.0);
      const double nn = detail::plain_lp(next, p);
      if (nn == 0.0) break;
      for (auto& v : next) v /= nn;
      double change = 0.0;
      for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next[i] - x[i]));
      x = std::move(next);
      if (change < 1e-15) {
        best = std::max(best, detail::plain_lp(b.apply(x), p));
        break;
      }
    }
  }
  return best;
}

inline double operator_norm_lower_bound(const WeightedSpace& space, const RealMatrix& a,
                                        double p, int trials, std::uint64_t seed) {
  return operator_norm_lower_bound(space, to_complex(a), p, trials, seed);
}

}  // namespace maxlab

#endif  // MAXLAB_SPECTRAL_HPP
