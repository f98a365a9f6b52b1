#include <gtest/gtest.h>

#include "maxlab/rng.hpp"
#include "maxlab/semigroup.hpp"
#include "maxlab/spectral.hpp"
#include "oracles.hpp"

using namespace maxlab;

namespace {

// random mu-symmetric A = D^{-1} S with S symmetric
MuSymmetricOperator random_operator(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> mu(n);
  for (auto& m : mu) m = rng.uniform(0.3, 3.0);
  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double s = rng.normal();
      a(i, j) = s / mu[i];
      a(j, i) = s / mu[j];
    }
  return MuSymmetricOperator(WeightedSpace(mu), a);
}

}  // namespace

TEST(Decompose, IdentityHasUnitSpectrum) {
  const auto dec = decompose(MuSymmetricOperator(WeightedSpace({1, 2, 3}), RealMatrix::identity(3)));
  for (double l : dec.eigenvalues) EXPECT_NEAR(l, 1.0, 1e-15);
}

TEST(Decompose, TwoByTwoByHand) {
  const auto op = MuSymmetricOperator(WeightedSpace::uniform(2),
                                      RealMatrix::from_rows({{1, -1}, {-1, 1}}));
  const auto dec = decompose(op);
  EXPECT_EQ(dec.eigenvalues[0], 0.0);
  EXPECT_NEAR(dec.eigenvalues[1], 2.0, 1e-14);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(dec.eigenvectors(0, 0)), s, 1e-14);
  EXPECT_NEAR(dec.eigenvectors(0, 0), dec.eigenvectors(1, 0), 1e-14);
  EXPECT_NEAR(dec.eigenvectors(0, 1), -dec.eigenvectors(1, 1), 1e-14);
  EXPECT_EQ(dec.kernel_dimension(), 1u);
}

TEST(Decompose, RandomReconstructionAndOrthonormality) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto op = random_operator(8, seed);
    const auto dec = decompose(op);
    EXPECT_LT(reconstruction_error(op, dec), 1e-10);
    for (std::size_t k = 0; k < 8; ++k)
      for (std::size_t l = 0; l < 8; ++l) {
        double ip = 0.0;
        for (std::size_t x = 0; x < 8; ++x)
          ip += op.space().weight(x) * dec.eigenvectors(x, k) * dec.eigenvectors(x, l);
        EXPECT_NEAR(ip, k == l ? 1.0 : 0.0, 1e-12);
      }
    EXPECT_TRUE(std::is_sorted(dec.eigenvalues.begin(), dec.eigenvalues.end()));
  }
}

TEST(Decompose, RejectsNonSymmetricAndBadShape) {
  EXPECT_THROW(MuSymmetricOperator(WeightedSpace::uniform(2), RealMatrix::from_rows({{0, 1}, {0, 0}})),
               DomainError);
  EXPECT_THROW(MuSymmetricOperator(WeightedSpace::uniform(3), RealMatrix::identity(2)), DimensionError);
}

TEST(Decompose, SweepCapRaises) {
  JacobiOptions opts;
  opts.max_sweeps = 0;
  EXPECT_THROW(decompose(random_operator(5, 3), opts), ConvergenceError);
}

TEST(SpectralCalculus, IdentityFunctionAndEigenvector) {
  const auto op = random_operator(6, 5);
  const auto dec = decompose(op);
  Rng rng(9);
  ScalarField f(6);
  for (auto& v : f) v = rng.complex_normal();
  const auto same = apply_spectral_function(dec, [](double) { return Complex(1.0); }, f);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(same[i] - f[i]), 0.0, 1e-12);

  const ScalarField v = to_complex(std::span<const double>(dec.eigenvectors.column(3)));
  const auto lv = apply_spectral_function(dec, [](double l) { return Complex(l); }, v);
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_NEAR(std::abs(lv[i] - dec.eigenvalues[3] * v[i]), 0.0, 1e-12);
}

TEST(SpectralCalculus, HeatOnTwoByTwoEigenvector) {
  const auto dec = decompose(MuSymmetricOperator(WeightedSpace::uniform(2),
                                                 RealMatrix::from_rows({{1, -1}, {-1, 1}})));
  const ScalarField f{1.0, -1.0};
  const auto g = apply_spectral_function(dec, [](double l) { return Complex(std::exp(-l)); }, f);
  EXPECT_NEAR(g[0].real(), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(g[1].real(), -std::exp(-2.0), 1e-15);
}

TEST(SpectralCalculus, MatchesTaylorExponential) {
  const auto op = random_operator(7, 13);
  const auto dec = decompose(op);
  const auto viaspec = spectral_matrix(dec, [](double l) { return std::exp(Complex(-0.7 * l)); });
  const auto taylor = oracle::semigroup(op.entries(), Complex(0.7));
  EXPECT_LT(max_abs_diff(viaspec, taylor), 1e-11);
}

TEST(SpectralCalculus, NonFiniteFunctionRejected) {
  const auto dec = decompose(MuSymmetricOperator(WeightedSpace::uniform(2),
                                                 RealMatrix::from_rows({{1, -1}, {-1, 1}})));
  EXPECT_THROW(spectral_matrix(dec, [](double l) { return Complex(1.0 / l); }), DomainError);
}

TEST(Gamma, KnownValues) {
  EXPECT_NEAR(std::abs(complex_gamma(1.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(complex_gamma(0.5) - std::sqrt(kPi)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(complex_gamma(5.0) - 24.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(complex_gamma(Complex(0.0, 1.0))),
              std::sqrt(kPi / std::sinh(kPi)), 1e-13);
  // Γ(-1/2) = -2√π
  EXPECT_NEAR(std::abs(complex_gamma(-0.5) + 2.0 * std::sqrt(kPi)), 0.0, 1e-13);
}

TEST(Gamma, ImaginaryAxisIdentity) {
  for (double u : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double v = std::norm(complex_gamma(Complex(0.0, u))) * u * std::sinh(kPi * u) / kPi;
    EXPECT_NEAR(v, 1.0, 1e-9) << "u = " << u;
  }
}

TEST(Gamma, RecurrenceAndReflection) {
  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const Complex z(rng.uniform(-4.5, 6.0), rng.uniform(-6.0, 6.0));
    if (std::abs(z - std::round(z.real())) < 1e-3) continue;
    const Complex g = complex_gamma(z);
    EXPECT_LT(std::abs(complex_gamma(z + 1.0) - z * g), 1e-11 * std::max(1.0, std::abs(z * g)));
    const Complex refl = g * complex_gamma(1.0 - z) * std::sin(kPi * z);
    EXPECT_LT(std::abs(refl - kPi), 1e-10 * std::max(1.0, std::abs(g)));
  }
}

TEST(Gamma, PolesRejected) {
  EXPECT_THROW(complex_gamma(0.0), DomainError);
  EXPECT_THROW(complex_gamma(-3.0), DomainError);
}

TEST(OperatorNorm, ExactEndpoints) {
  const auto u2 = WeightedSpace::uniform(2);
  EXPECT_DOUBLE_EQ(operator_norm(u2, RealMatrix::identity(2), 1.0), 1.0);
  EXPECT_DOUBLE_EQ(operator_norm(u2, RealMatrix::identity(2), kInf), 1.0);
  const auto c = RealMatrix::from_rows({{0.75, -0.25}, {-0.25, 0.75}});
  EXPECT_DOUBLE_EQ(operator_norm(u2, c, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(operator_norm(u2, c, kInf), 1.0);
  EXPECT_DOUBLE_EQ(operator_norm(WeightedSpace({2.0, 1.0}), RealMatrix::from_rows({{0, 1}, {0, 0}}), 1.0),
                   2.0);
}

TEST(OperatorNorm, LowerBoundProperties) {
  const auto u2 = WeightedSpace::uniform(2);
  EXPECT_NEAR(operator_norm_lower_bound(u2, RealMatrix::identity(2), 3.0, 3, 1), 1.0, 1e-14);
  const auto diag = RealMatrix::from_rows({{2, 0}, {0, 1}});
  EXPECT_GE(operator_norm_lower_bound(u2, diag, 3.0, 100, 2), 2.0 - 1e-9);
  const auto c = RealMatrix::from_rows({{0.75, -0.25}, {-0.25, 0.75}});
  for (double p : {1.5, 2.0, 4.0}) EXPECT_LE(operator_norm_lower_bound(u2, c, p, 10, 3), 1.0 + 1e-12);
}

TEST(OperatorNorm, LowerBoundNeverExceedsRieszThorin) {
  // ||A||_p <= ||A||_1^{1/p} ||A||_inf^{1-1/p}
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto op = random_operator(5, seed);
    const double n1 = operator_norm(op.space(), op.entries(), 1.0);
    const double ninf = operator_norm(op.space(), op.entries(), kInf);
    for (double p : {1.5, 3.0}) {
      const double lb = operator_norm_lower_bound(op.space(), op.entries(), p, 5, seed);
      EXPECT_LE(lb, std::pow(n1, 1.0 / p) * std::pow(ninf, 1.0 - 1.0 / p) * (1 + 1e-12));
    }
    // p = 2 on a selfadjoint operator: the norm is the spectral radius
    const auto dec = decompose(op);
    const double rho = std::max(std::abs(dec.eigenvalues.front()), std::abs(dec.eigenvalues.back()));
    EXPECT_NEAR(operator_norm_lower_bound(op.space(), op.entries(), 2.0, 5, seed), rho, 1e-6 * rho);
  }
}
