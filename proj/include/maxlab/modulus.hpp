#ifndef MAXLAB_MODULUS_HPP
#define MAXLAB_MODULUS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "maxlab/core.hpp"
#include "maxlab/rng.hpp"
#include "maxlab/semigroup.hpp"
#include "maxlab/spectral.hpp"

namespace maxlab {

/// Linear modulus of a matrix operator on a finite weighted space: the
/// entrywise absolute value. It has the same weighted L^1 and L^inf norms
/// as T and satisfies |Tf| <= |T| |f|.
inline RealMatrix linear_modulus(const ComplexMatrix& t) {
  RealMatrix m(t.rows(), t.cols());
  for (std::size_t k = 0; k < t.data().size(); ++k) m.data()[k] = std::abs(t.data()[k]);
  return m;
}

inline RealMatrix linear_modulus(const WeightedSpace& space, const ComplexMatrix& t) {
  if (t.rows() != space.size() || t.cols() != space.size())
    throw DimensionError("operator shape differs from point count");
  return linear_modulus(t);
}

/// 0 = s_0 < s_1 < ... < s_n = t
class Subdivision {
 public:
  explicit Subdivision(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2 || points_.front() != 0.0)
      throw DomainError("subdivision must start at 0 and contain at least one interval");
    for (std::size_t k = 1; k < points_.size(); ++k)
      if (!(points_[k] > points_[k - 1]))
        throw DomainError("subdivision points must be strictly increasing");
  }

  static Subdivision uniform(double t, std::size_t pieces) {
    if (!(t > 0.0) || pieces == 0) throw DomainError("uniform subdivision needs t > 0, pieces >= 1");
    std::vector<double> s(pieces + 1);
    for (std::size_t k = 0; k <= pieces; ++k)
      s[k] = t * static_cast<double>(k) / static_cast<double>(pieces);
    s.back() = t;
    return Subdivision(std::move(s));
  }

  static Subdivision dyadic(double t, int level) {
    return uniform(t, std::size_t{1} << level);
  }

  double length() const noexcept { return points_.back(); }
  const std::vector<double>& points() const noexcept { return points_; }

  /// True when every point of `coarse` also belongs to this subdivision.
  bool refines(const Subdivision& coarse, double tol = 1e-14) const {
    if (std::abs(coarse.length() - length()) > tol) return false;
    for (double c : coarse.points_) {
      const bool found = std::any_of(points_.begin(), points_.end(),
                                     [&](double s) { return std::abs(s - c) <= tol; });
      if (!found) return false;
    }
    return true;
  }

 private:
  std::vector<double> points_;
};

/// Φ(s, f) = |T_{s_1}| |T_{s_2 - s_1}| ... |T_{s_n - s_{n-1}}| f for f >= 0.
inline RealField phi(const SemigroupGenerator& gen, const Subdivision& s,
                     std::span<const double> f) {
  if (f.size() != gen.size()) throw DimensionError("field length differs from point count");
  for (double x : f)
    if (x < 0.0) throw DomainError("phi is defined on nonnegative fields");
  std::map<double, RealMatrix> moduli;
  RealField out(f.begin(), f.end());
  const auto& pts = s.points();
  for (std::size_t k = pts.size() - 1; k >= 1; --k) {
    const double step = pts[k] - pts[k - 1];
    auto it = moduli.find(step);
    if (it == moduli.end())
      it = moduli.emplace(step, linear_modulus(evolution_matrix(gen, step))).first;
    out = it->second.apply(std::span<const double>(out));
  }
  return out;
}

struct ModulusResult {
  RealMatrix s;       // S_t
  int depth = 0;      // dyadic level reached
  double residual = 0.0;
  bool extrapolated = false;
};

namespace detail {

// |T_h| - I, computed without forming I + O(h) so that tiny increments keep
// their relative accuracy.
inline RealMatrix modulus_increment(const SemigroupGenerator& gen, double h) {
  const auto g = spectral_matrix(gen.spectrum(), [h](double l) { return Complex(std::expm1(-h * l)); });
  const std::size_t n = gen.size();
  RealMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = g(i, j).real();
      e(i, j) = i == j ? (v >= -1.0 ? v : -2.0 - v) : std::abs(v);
    }
  return e;
}

// (I + E)^{2^m} - I by repeated squaring in the increment form.
inline RealMatrix dyadic_power(RealMatrix e, int m) {
  for (int k = 0; k < m; ++k) e = 2.0 * e + e * e;
  return e;
}

inline RealMatrix plus_identity(RealMatrix e) {
  for (std::size_t i = 0; i < e.rows(); ++i) e(i, i) += 1.0;
  return e;
}

}  // namespace detail

/// S_t as the limit of Φ over uniform dyadic subdivisions of [0, t].
///
/// The chain Φ_m = |T_{t/2^m}|^{2^m} increases entrywise and converges at
/// first order in 2^{-m}. The chain can stall for a level before moving
/// again, so convergence is declared only after two consecutive steps below
/// tol: either of the raw chain (result Φ at the first of the three levels)
/// or of the Richardson values 2Φ_m - Φ_{m-1}.
inline ModulusResult modulus_semigroup(const SemigroupGenerator& gen, double t,
                                       double tol = 1e-8, int max_level = 20) {
  if (!(t > 0.0)) throw DomainError("modulus semigroup needs t > 0");
  std::vector<RealMatrix> raw;    // Φ_m - I
  std::vector<RealMatrix> extra;  // Richardson values minus I, index m - 1
  double raw_prev_step = kInf, extra_prev_step = kInf, last_residual = kInf;
  for (int m = 0; m <= max_level; ++m) {
    const double h = std::ldexp(t, -m);
    raw.push_back(detail::dyadic_power(detail::modulus_increment(gen, h), m));
    if (m == 0) continue;
    const double raw_step = max_abs_diff(raw[m], raw[m - 1]);
    if (raw_step < tol && raw_prev_step < tol)
      return {detail::plus_identity(raw[m - 2]), m - 2, std::max(raw_step, raw_prev_step), false};
    raw_prev_step = raw_step;
    extra.push_back(2.0 * raw[m] - raw[m - 1]);
    if (m >= 2) {
      const double step = max_abs_diff(extra[m - 1], extra[m - 2]);
      last_residual = step;
      if (step < tol && extra_prev_step < tol) {
        RealMatrix s = detail::plus_identity(extra[m - 1]);
        for (auto& x : s.data()) x = std::max(x, 0.0);
        return {std::move(s), m, std::max(step, extra_prev_step), true};
      }
      extra_prev_step = step;
    }
  }
  throw ConvergenceError("modulus semigroup did not stabilise by dyadic level " +
                         std::to_string(max_level) + " (residual " +
                         std::to_string(last_residual) + ")");
}

struct DominationReport {
  std::size_t checks = 0;
  std::size_t violations = 0;
  double max_excess = -kInf;  // max of |T_t f| - S_t|f| over entries
  double max_norm_excess = -kInf;  // max of ||T_t f||_p - ||S_t|f|||_p
  bool pass() const noexcept { return violations == 0; }
};

/// Seeded check of |T_t f| <= S_t |f| entrywise and in L^p norm, with f
/// normalized to unit L^2(mu) norm.
inline DominationReport verify_domination(const SemigroupGenerator& gen,
                                          std::span<const double> t_grid, int trials,
                                          std::uint64_t seed, double abs_tol = 1e-10,
                                          double stab_tol = 1e-8) {
  DominationReport rep;
  const auto& space = gen.space();
  const std::size_t n = gen.size();
  const double exps[] = {1.0, 1.5, 2.0, 3.0, kInf};
  for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
    const double t = t_grid[ti];
    const ModulusResult mod = modulus_semigroup(gen, t, stab_tol);
    const auto tt = evolution_matrix(gen, t);
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::stream(seed, ti * 1000003ULL + static_cast<std::uint64_t>(trial));
      ScalarField f(n);
      for (auto& v : f) v = rng.complex_normal();
      const double scale = lp_norm(space, std::span<const Complex>(f), 2.0);
      for (auto& v : f) v /= scale;
      const RealField lhs = modulus(tt.apply(f));
      const RealField abs_f = modulus(f);
      const RealField rhs = mod.s.apply(std::span<const double>(abs_f));
      bool bad = false;
      for (std::size_t i = 0; i < n; ++i) {
        rep.max_excess = std::max(rep.max_excess, lhs[i] - rhs[i]);
        if (lhs[i] > rhs[i] + abs_tol) bad = true;
      }
      for (double p : exps) {
        const double excess = lp_norm(space, std::span<const double>(lhs), p) -
                              lp_norm(space, std::span<const double>(rhs), p);
        rep.max_norm_excess = std::max(rep.max_norm_excess, excess);
        if (excess > abs_tol) bad = true;
      }
      ++rep.checks;
      if (bad) ++rep.violations;
    }
  }
  return rep;
}

struct SubpositivityReport {
  bool family_sup = true;          // (a -> b)
  bool tensor_contraction = true;  // (a -> c)
  bool rotated_positive = true;    // (a -> d)
  double worst_family_ratio = 0.0;
  double worst_tensor_ratio = 0.0;
  double min_rotated_entry = kInf;
  bool pass() const noexcept { return family_sup && tensor_contraction && rotated_positive; }
};

/// Testable consequences of T being a subpositive contraction dominated by S:
///  (b) ||sup_k |T f_k|||_p <= ||sup_k |f_k|||_p for finite families,
///  (c) the tensor extension to L^p(X, B) is a contraction,
///  (d) S + Re(e^{iθ} T) is entrywise nonnegative for every θ.
inline SubpositivityReport subpositivity_suite(const WeightedSpace& space, const ComplexMatrix& t,
                                               const RealMatrix& s, double p,
                                               const BanachNorm& fibre, int trials,
                                               std::uint64_t seed, double tol = 1e-10) {
  const std::size_t n = space.size();
  if (t.rows() != n || t.cols() != n || s.rows() != n || s.cols() != n)
    throw DimensionError("operator shape differs from point count");
  for (double x : s.data())
    if (x < 0.0) throw DomainError("majorant S must be entrywise nonnegative");
  SubpositivityReport rep;

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
    const std::size_t family = 1 + rng.index(5);
    RealField sup_in(n, 0.0), sup_out(n, 0.0);
    for (std::size_t k = 0; k < family; ++k) {
      ScalarField f(n);
      for (auto& v : f) v = rng.complex_normal();
      sup_into(sup_in, modulus(f));
      sup_into(sup_out, modulus(t.apply(f)));
    }
    const double ratio_b = lp_norm(space, std::span<const double>(sup_out), p) /
                           lp_norm(space, std::span<const double>(sup_in), p);
    rep.worst_family_ratio = std::max(rep.worst_family_ratio, ratio_b);
    if (ratio_b > 1.0 + tol) rep.family_sup = false;

    ComplexMatrix fv(n, fibre.dim());
    for (auto& v : fv.data()) v = rng.complex_normal();
    const BochnerField field(fv, fibre);
    const BochnerField image(t * fv, fibre);
    const double ratio_c = bochner_norm(space, image, p) / bochner_norm(space, field, p);
    rep.worst_tensor_ratio = std::max(rep.worst_tensor_ratio, ratio_c);
    if (ratio_c > 1.0 + tol) rep.tensor_contraction = false;
  }

  const int angles = 64;
  for (int k = 0; k < angles; ++k) {
    const Complex rot = std::polar(1.0, 2.0 * kPi * k / angles);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rep.min_rotated_entry = std::min(rep.min_rotated_entry, s(i, j) + (rot * t(i, j)).real());
  }
  rep.rotated_positive = rep.min_rotated_entry >= -tol;
  return rep;
}

}  // namespace maxlab

#endif  // MAXLAB_MODULUS_HPP
