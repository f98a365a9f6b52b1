#ifndef MAXLAB_CORE_HPP
#define MAXLAB_CORE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxlab {

using Complex = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Thrown when array shapes disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an argument lies outside the domain of an operation
/// (p < 1, Re z < 0, a pole of Γ, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when the hypotheses of a theorem being probed are violated.
/// Distinct from DomainError so that experiment runners can report
/// "rejected" rather than "failed".
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative procedure does not settle within its cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ToleranceConfig {
  double abs_tol = 1e-10;
  double quad_tol = 1e-6;
  double stab_tol = 1e-8;

  void validate() const {
    if (!(abs_tol > 0.0) || !(quad_tol > 0.0) || !(stab_tol > 0.0))
      throw DomainError("tolerances must be strictly positive");
  }
};

/// Dense row-major matrix. Only what the laboratory needs: element access,
/// products and a handful of entrywise helpers.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionError("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_column(std::size_t j, std::span<const T> values) {
    if (values.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
  }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(T s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> y(rows_, T{});
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc{};
      for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  bool operator==(const Matrix&) const = default;

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

inline ComplexMatrix to_complex(const RealMatrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) c.data()[k] = a.data()[k];
  return c;
}

/// Largest entry modulus.
template <typename T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, static_cast<double>(std::abs(x)));
  return m;
}

template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, static_cast<double>(std::abs(a.data()[k] - b.data()[k])));
  return m;
}

/// Finite measure space X = {0, ..., n-1} with point masses mu_i > 0.
/// Weights are kept exactly as given (no normalization).
class WeightedSpace {
 public:
  explicit WeightedSpace(std::vector<double> mu) : mu_(std::move(mu)) {
    if (mu_.empty()) throw DomainError("weighted space needs at least one point");
    for (double m : mu_)
      if (!(m > 0.0) || !std::isfinite(m))
        throw DomainError("point masses must be finite and strictly positive");
    total_ = std::accumulate(mu_.begin(), mu_.end(), 0.0);
  }

  static WeightedSpace uniform(std::size_t n) {
    return WeightedSpace(std::vector<double>(n, 1.0));
  }

  std::size_t size() const noexcept { return mu_.size(); }
  double weight(std::size_t i) const { return mu_[i]; }
  std::span<const double> weights() const noexcept { return mu_; }
  double total_mass() const noexcept { return total_; }

  bool operator==(const WeightedSpace&) const = default;

 private:
  std::vector<double> mu_;
  double total_ = 0.0;
};

/// A function X -> C.
using ScalarField = std::vector<Complex>;
/// A function X -> R (pointwise norms, maximal functions).
using RealField = std::vector<double>;

inline RealField modulus(std::span<const Complex> f) {
  RealField r(f.size());
  std::transform(f.begin(), f.end(), r.begin(), [](Complex z) { return std::abs(z); });
  return r;
}

inline ScalarField to_complex(std::span<const double> f) {
  return ScalarField(f.begin(), f.end());
}

/// The fibre B = (C^d, l^r). r = kInf is representable, but maximal
/// experiments call require_umd() which rejects it along with r <= 1.
class BanachNorm {
 public:
  BanachNorm(std::size_t d, double r) : d_(d), r_(r) {
    if (d_ == 0) throw DomainError("fibre dimension must be at least 1");
    if (!(r_ >= 1.0)) throw DomainError("l^r exponent must satisfy r >= 1");
  }

  std::size_t dim() const noexcept { return d_; }
  double exponent() const noexcept { return r_; }

  void require_umd() const {
    if (!(r_ > 1.0) || std::isinf(r_))
      throw HypothesisError("maximal experiments need 1 < r < inf for the fibre l^r");
  }

  double operator()(std::span<const Complex> x) const {
    if (x.size() != d_) throw DimensionError("fibre vector has wrong dimension");
    if (std::isinf(r_)) {
      double m = 0.0;
      for (Complex z : x) m = std::max(m, std::abs(z));
      return m;
    }
    if (r_ == 1.0) {
      double s = 0.0;
      for (Complex z : x) s += std::abs(z);
      return s;
    }
    // scale by the largest modulus to avoid overflow in |x|^r
    double scale = 0.0;
    for (Complex z : x) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (Complex z : x) s += std::pow(std::abs(z) / scale, r_);
    return scale * std::pow(s, 1.0 / r_);
  }

  bool operator==(const BanachNorm&) const = default;

 private:
  std::size_t d_;
  double r_;
};

/// F in L^p(X, B): an n x d complex table, row i is F(x_i) in C^d.
class BochnerField {
 public:
  BochnerField(ComplexMatrix values, BanachNorm norm)
      : values_(std::move(values)), norm_(norm) {
    if (values_.cols() != norm_.dim())
      throw DimensionError("bochner field column count differs from fibre dimension");
  }

  /// u ⊗ f : x -> f(x) u
  static BochnerField tensor(std::span<const Complex> u, std::span<const Complex> f,
                             double r) {
    ComplexMatrix v(f.size(), u.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) v(i, j) = f[i] * u[j];
    return BochnerField(std::move(v), BanachNorm(u.size(), r));
  }

  std::size_t points() const noexcept { return values_.rows(); }
  std::size_t dim() const noexcept { return values_.cols(); }
  const ComplexMatrix& values() const noexcept { return values_; }
  const BanachNorm& norm() const noexcept { return norm_; }

  ScalarField column(std::size_t j) const { return values_.column(j); }

 private:
  ComplexMatrix values_;
  BanachNorm norm_;
};

namespace detail {

inline void require_exponent(double p) {
  if (!(p >= 1.0)) throw DomainError("Lebesgue exponent must satisfy p >= 1");
}

inline void require_length(const WeightedSpace& space, std::size_t len) {
  if (len != space.size()) throw DimensionError("field length differs from point count");
}

}  // namespace detail

/// (Σ mu_i |f_i|^p)^{1/p}, or max |f_i| for p = inf.
inline double lp_norm(const WeightedSpace& space, std::span<const double> f, double p) {
  detail::require_length(space, f.size());
  detail::require_exponent(p);
  double scale = 0.0;
  for (double x : f) scale = std::max(scale, std::abs(x));
  if (std::isinf(p) || scale == 0.0) return scale;
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    s += space.weight(i) * std::pow(std::abs(f[i]) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

inline double lp_norm(const WeightedSpace& space, std::span<const Complex> f, double p) {
  detail::require_length(space, f.size());
  const RealField m = modulus(f);
  return lp_norm(space, std::span<const double>(m), p);
}

/// x -> |F(x)|_B
inline RealField pointwise_banach_norm(const BochnerField& field) {
  RealField out(field.points());
  for (std::size_t i = 0; i < field.points(); ++i)
    out[i] = field.norm()(field.values().row(i));
  return out;
}

inline double bochner_norm(const WeightedSpace& space, const BochnerField& field, double p) {
  detail::require_length(space, field.points());
  const RealField pointwise = pointwise_banach_norm(field);
  return lp_norm(space, std::span<const double>(pointwise), p);
}

/// Pointwise maximum of a nonempty family of equally long real fields.
inline RealField pointwise_sup(std::span<const RealField> fields) {
  if (fields.empty()) throw DomainError("pointwise_sup of an empty family");
  RealField out = fields.front();
  for (const auto& f : fields.subspan(1)) {
    if (f.size() != out.size()) throw DimensionError("pointwise_sup length mismatch");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], f[i]);
  }
  return out;
}

/// In-place running maximum; the accumulator form used by the maximal operators.
inline void sup_into(RealField& acc, std::span<const double> f) {
  if (acc.size() != f.size()) throw DimensionError("pointwise_sup length mismatch");
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::max(acc[i], f[i]);
}

/// <f, g>_mu = Σ mu_i f_i conj(g_i)
inline Complex inner(const WeightedSpace& space, std::span<const Complex> f,
                     std::span<const Complex> g) {
  detail::require_length(space, f.size());
  detail::require_length(space, g.size());
  Complex s{};
  for (std::size_t i = 0; i < f.size(); ++i) s += space.weight(i) * f[i] * std::conj(g[i]);
  return s;
}

inline std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo) || count == 0)
    throw DomainError("geometric grid needs 0 < lo <= hi and count >= 1");
  std::vector<double> g(count);
  if (count == 1) {
    g[0] = lo;
    return g;
  }
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k)
    g[k] = lo * std::exp(step * static_cast<double>(k));
  g.back() = hi;
  return g;
}

inline std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count == 0 || !(hi >= lo)) throw DomainError("uniform grid needs lo <= hi, count >= 1");
  std::vector<double> g(count);
  if (count == 1) {
    g[0] = 0.5 * (lo + hi);
    return g;
  }
  for (std::size_t k = 0; k < count; ++k)
    g[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  return g;
}

}  // namespace maxlab

#endif  // MAXLAB_CORE_HPP
