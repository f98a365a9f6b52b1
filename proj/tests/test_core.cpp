#include <gtest/gtest.h>

#include "maxlab/core.hpp"
#include "maxlab/rng.hpp"

using namespace maxlab;

TEST(LpNorm, HandValues) {
  const auto u2 = WeightedSpace::uniform(2);
  const std::vector<double> f{3.0, 4.0};
  EXPECT_DOUBLE_EQ(lp_norm(u2, std::span<const double>(f), 2.0), 5.0);

  const WeightedSpace w({2.0, 1.0});
  const std::vector<double> ones{1.0, 1.0};
  EXPECT_DOUBLE_EQ(lp_norm(w, std::span<const double>(ones), 1.0), 3.0);

  const ScalarField g{Complex(1.0), Complex(-2.0)};
  EXPECT_DOUBLE_EQ(lp_norm(u2, std::span<const Complex>(g), kInf), 2.0);
}

TEST(LpNorm, RejectsBadInput) {
  const auto u2 = WeightedSpace::uniform(2);
  const std::vector<double> f{1.0, 1.0, 1.0};
  EXPECT_THROW(lp_norm(u2, std::span<const double>(f), 2.0), DimensionError);
  const std::vector<double> g{1.0, 1.0};
  EXPECT_THROW(lp_norm(u2, std::span<const double>(g), 0.5), DomainError);
  EXPECT_THROW(WeightedSpace({1.0, 0.0}), DomainError);
  EXPECT_THROW(WeightedSpace(std::vector<double>{}), DomainError);
}

TEST(LpNorm, HugeValuesDoNotOverflow) {
  const auto u2 = WeightedSpace::uniform(2);
  const std::vector<double> f{3e200, 4e200};
  EXPECT_NEAR(lp_norm(u2, std::span<const double>(f), 2.0) / 5e200, 1.0, 1e-14);
}

TEST(BanachNorm, FibreValues) {
  const std::vector<Complex> x{3.0, 4.0};
  EXPECT_DOUBLE_EQ(BanachNorm(2, 2.0)(x), 5.0);
  const std::vector<Complex> y{1.0, -1.0, Complex(0.0, 1.0)};
  EXPECT_DOUBLE_EQ(BanachNorm(3, 1.0)(y), 3.0);
  EXPECT_DOUBLE_EQ(BanachNorm(3, kInf)(y), 1.0);
  EXPECT_THROW(BanachNorm(0, 2.0), DomainError);
  EXPECT_THROW(BanachNorm(2, 0.5), DomainError);
}

TEST(BanachNorm, UmdRequirement) {
  EXPECT_NO_THROW(BanachNorm(2, 3.0).require_umd());
  EXPECT_THROW(BanachNorm(2, 1.0).require_umd(), HypothesisError);
  EXPECT_THROW(BanachNorm(2, kInf).require_umd(), HypothesisError);
}

TEST(BochnerNorm, HandValues) {
  const auto u2 = WeightedSpace::uniform(2);
  const BochnerField f(ComplexMatrix::from_rows({{3.0, 4.0}, {0.0, 0.0}}), BanachNorm(2, 2.0));
  EXPECT_DOUBLE_EQ(bochner_norm(u2, f, 1.0), 5.0);

  const WeightedSpace w({1.0, 2.0});
  const BochnerField g(ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, 0.0}}), BanachNorm(2, 1.0));
  EXPECT_DOUBLE_EQ(bochner_norm(w, g, 1.0), 4.0);
}

TEST(BochnerNorm, SingleColumnIsLpNorm) {
  Rng rng(7);
  const WeightedSpace w({0.5, 1.5, 2.0, 0.7});
  ScalarField f(4);
  for (auto& v : f) v = rng.complex_normal();
  ComplexMatrix col(4, 1);
  col.set_column(0, f);
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf})
    EXPECT_NEAR(bochner_norm(w, BochnerField(col, BanachNorm(1, 2.5)), p),
                lp_norm(w, std::span<const Complex>(f), p), 1e-14);
}

TEST(BochnerNorm, TensorFactorizes) {
  const WeightedSpace w({0.5, 1.5, 2.0});
  const std::vector<Complex> u{Complex(1, 2), Complex(-0.5, 0), Complex(0, 3)};
  const ScalarField f{Complex(0.3, 0), Complex(-1, 1), Complex(2, 0)};
  const auto field = BochnerField::tensor(u, f, 3.0);
  const double unorm = BanachNorm(3, 3.0)(u);
  for (double p : {1.0, 2.0, 4.0})
    EXPECT_NEAR(bochner_norm(w, field, p), unorm * lp_norm(w, std::span<const Complex>(f), p),
                1e-13);
}

TEST(PointwiseBanachNorm, ZeroFieldAndRowNorms) {
  const BochnerField zero(ComplexMatrix(3, 2), BanachNorm(2, 2.0));
  for (double v : pointwise_banach_norm(zero)) EXPECT_EQ(v, 0.0);
  const BochnerField f(ComplexMatrix::from_rows({{3.0, 4.0}}), BanachNorm(2, 2.0));
  EXPECT_DOUBLE_EQ(pointwise_banach_norm(f)[0], 5.0);
}

TEST(PointwiseSup, LatticeProperties) {
  const std::vector<RealField> single{{1.0, 2.0}};
  EXPECT_EQ(pointwise_sup(single), single[0]);
  const std::vector<RealField> pair{{1.0, 0.0}, {0.0, 1.0}};
  EXPECT_EQ(pointwise_sup(pair), (RealField{1.0, 1.0}));
  const std::vector<RealField> monotone{{0.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}};
  EXPECT_EQ(pointwise_sup(monotone), monotone.back());
  EXPECT_THROW(pointwise_sup(std::span<const RealField>{}), DomainError);
}

TEST(PointwiseSup, IdempotentAndMonotoneOnRandomFamilies) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RealField> fam(4, RealField(6));
    for (auto& f : fam)
      for (auto& v : f) v = rng.uniform();
    const RealField s = pointwise_sup(fam);
    const std::vector<RealField> twice{s, s};
    EXPECT_EQ(pointwise_sup(twice), s);
    auto bigger = fam;
    for (auto& v : bigger[0]) v += 0.1;
    const RealField t = pointwise_sup(bigger);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_GE(t[i], s[i]);
  }
}

TEST(Tolerances, RejectNonPositive) {
  ToleranceConfig t;
  EXPECT_NO_THROW(t.validate());
  t.abs_tol = 0.0;
  EXPECT_THROW(t.validate(), DomainError);
}

TEST(Grids, EndpointsAndNesting) {
  const auto g = geometric_grid(1e-3, 1e2, 6);
  EXPECT_DOUBLE_EQ(g.front(), 1e-3);
  EXPECT_NEAR(g.back(), 1e2, 1e-12);
  for (std::size_t k = 1; k < g.size(); ++k) EXPECT_NEAR(g[k] / g[k - 1], 10.0, 1e-12);
  const auto u = uniform_grid(-1.0, 1.0, 5);
  EXPECT_EQ(u, (std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0}));
}

TEST(Rng, StreamsAreReproducible) {
  Rng a = Rng::stream(42, 3), b = Rng::stream(42, 3), c = Rng::stream(42, 4);
  bool differs = false;
  for (int k = 0; k < 10; ++k) {
    const double x = a.uniform(), y = b.uniform(), z = c.uniform();
    EXPECT_EQ(x, y);
    differs = differs || x != z;
  }
  EXPECT_TRUE(differs);
}
