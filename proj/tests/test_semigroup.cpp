#include <gtest/gtest.h>

#include "maxlab/ergodic.hpp"
#include "maxlab/semigroup.hpp"
#include "oracles.hpp"

using namespace maxlab;

namespace {

const RealMatrix kLaplacian2 = RealMatrix::from_rows({{1, -1}, {-1, 1}});

double l2(const WeightedSpace& s, const ScalarField& f) {
  return lp_norm(s, std::span<const Complex>(f), 2.0);
}

}  // namespace

TEST(Generator, OnePointSemigroup) {
  const auto gen = make_diffusion(WeightedSpace({2.0}), RealMatrix::from_rows({{0.7}}));
  const auto t = evolution_matrix(gen, 1.3);
  EXPECT_NEAR(t(0, 0).real(), std::exp(-0.7 * 1.3), 1e-15);
}

TEST(Generator, FromTransitionByHand) {
  const auto gen = diffusion_from_transition(WeightedSpace::uniform(2),
                                             RealMatrix::from_rows({{0, 1}, {1, 0}}), 1.0);
  EXPECT_EQ(gen.matrix(), kLaplacian2);
  EXPECT_EQ(gen.kind(), GeneratorKind::diffusion);
}

TEST(Generator, DiffusionValidationRejects) {
  const auto u2 = WeightedSpace::uniform(2);
  EXPECT_THROW(make_diffusion(u2, RealMatrix::from_rows({{1, 1}, {1, 1}})), DomainError);
  EXPECT_THROW(make_diffusion(u2, RealMatrix::from_rows({{-1, 0}, {0, -1}})), DomainError);
  EXPECT_THROW(make_diffusion(u2, RealMatrix::from_rows({{1, -2}, {0, 1}})), DomainError);
  EXPECT_THROW(diffusion_from_transition(u2, RealMatrix::from_rows({{0, -1}, {-1, 0}}), 1.0),
               DomainError);
}

TEST(Generator, ContractionOnlyExemplar) {
  const auto gen = make_contraction(WeightedSpace::uniform(2), RealMatrix::from_rows({{1, 1}, {1, 1}}));
  for (double t : {0.01, 0.3, 2.0}) {
    const auto e = evolution_matrix(gen, t);
    EXPECT_LT(e(0, 1).real(), 0.0);
    EXPECT_NEAR(operator_norm(gen.space(), e, 1.0), 1.0, 1e-12);
    EXPECT_NEAR(operator_norm(gen.space(), e, kInf), 1.0, 1e-12);
  }
}

TEST(Contraction, VerifyProperty) {
  const auto grid = geometric_grid(1e-3, 1e2, 24);
  const auto zero = make_diffusion(WeightedSpace({1.0, 2.0}), RealMatrix(2, 2));
  const auto rz = verify_contraction_property(zero, grid);
  EXPECT_TRUE(rz.pass);
  EXPECT_NEAR(rz.worst_norm, 1.0, 1e-15);

  const auto lap = make_diffusion(WeightedSpace::uniform(2), kLaplacian2);
  EXPECT_TRUE(verify_contraction_property(lap, grid).pass);

  const SemigroupGenerator grow(WeightedSpace::uniform(2), RealMatrix::from_rows({{-1, 0}, {0, -1}}));
  const auto rg = verify_contraction_property(grow, grid);
  EXPECT_FALSE(rg.pass);
  EXPECT_EQ(rg.failing_times.size(), grid.size());
}

TEST(Evolution, TwoByTwoClosedForm) {
  const auto gen = make_diffusion(WeightedSpace::uniform(2), kLaplacian2);
  const auto e = evolution_matrix(gen, std::log(2.0) / 2.0);
  EXPECT_NEAR(e(0, 0).real(), 0.75, 1e-14);
  EXPECT_NEAR(e(0, 1).real(), 0.25, 1e-14);
  EXPECT_NEAR(e(1, 0).real(), 0.25, 1e-14);
  EXPECT_NEAR(e(1, 1).real(), 0.75, 1e-14);
}

TEST(Evolution, MatchesTaylorOracleInSector) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto kind = seed % 2 ? GeneratorKind::diffusion : GeneratorKind::contraction_only;
    const auto gen = random_generator(3 + seed % 8, seed, kind);
    for (Complex z : {Complex(0.4, 0.0), std::polar(2.0, 0.6), std::polar(0.05, -1.2),
                      Complex(0.0, 1.5)})
      EXPECT_LT(max_abs_diff(evolution_matrix(gen, z), oracle::semigroup(gen.matrix(), z)), 1e-11);
  }
}

TEST(Evolution, ZeroAndImaginaryTimes) {
  const auto gen = random_generator(6, 4, GeneratorKind::diffusion);
  Rng rng(1);
  ScalarField f(6);
  for (auto& v : f) v = rng.complex_normal();
  const auto same = evolve(gen, 0.0, f);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(same[i] - f[i]), 0.0, 1e-13);
  for (double s : {0.3, 1.0, 7.0})
    EXPECT_NEAR(l2(gen.space(), evolve(gen, Complex(0.0, s), f)), l2(gen.space(), f), 1e-12);
  EXPECT_THROW(evolve(gen, Complex(-0.1, 0.0), f), DomainError);
}

TEST(Evolution, TensorExtension) {
  const auto gen = random_generator(5, 8, GeneratorKind::contraction_only);
  const std::vector<Complex> u{Complex(1, 1), Complex(0, -2), Complex(0.5, 0)};
  Rng rng(3);
  ScalarField f(5);
  for (auto& v : f) v = rng.complex_normal();
  const Complex z = std::polar(0.8, 0.4);
  const auto tf = tensor_evolve(gen, z, BochnerField::tensor(u, f, 2.0));
  const auto expected = BochnerField::tensor(u, evolve(gen, z, f), 2.0);
  EXPECT_LT(max_abs_diff(tf.values(), expected.values()), 1e-13);

  ComplexMatrix col(5, 1);
  col.set_column(0, f);
  const auto d1 = tensor_evolve(gen, z, BochnerField(col, BanachNorm(1, 2.0)));
  const auto direct = evolve(gen, z, f);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(std::abs(d1.values()(i, 0) - direct[i]), 0.0, 1e-14);
}

TEST(Evolution, RealTimeTensorContractionForDiffusions) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto gen = random_generator(2 + seed % 10, 100 + seed, GeneratorKind::diffusion);
    Rng rng(seed);
    const BochnerField field(random_table(rng, gen.size(), 3), BanachNorm(3, 2.5));
    for (double p : {1.5, 2.0, 3.0})
      for (double t : {0.01, 1.0, 30.0})
        EXPECT_LE(bochner_norm(gen.space(), tensor_evolve(gen, t, field), p),
                  bochner_norm(gen.space(), field, p) + 1e-9);
  }
}

TEST(ImaginaryPower, KnownValues) {
  const auto gen = make_diffusion(WeightedSpace::uniform(2), kLaplacian2);
  const ScalarField v{1.0, -1.0};  // eigenvector for λ = 2
  const auto w = imaginary_power(gen, kPi / std::log(2.0), v);
  EXPECT_NEAR(std::abs(w[0] + 1.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(w[1] - 1.0), 0.0, 1e-13);
  const ScalarField f{Complex(0.3, 1), Complex(2, -1)};
  const auto same = imaginary_power(gen, 0.0, f);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(std::abs(same[i] - f[i]), 0.0, 1e-14);
}

TEST(ImaginaryPower, UnitaryOnL2) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto gen = random_generator(3 + seed, seed, GeneratorKind::diffusion);
    Rng rng(seed);
    const auto f = random_field(rng, gen.size());
    for (double u : uniform_grid(-5.0, 5.0, 11))
      EXPECT_NEAR(l2(gen.space(), imaginary_power(gen, u, f)), l2(gen.space(), f),
                  1e-10 * l2(gen.space(), f));
  }
}

TEST(SteinAngle, Formula) {
  EXPECT_DOUBLE_EQ(stein_angle(2.0), kPi / 2);
  EXPECT_NEAR(stein_angle(4.0), kPi / 4, 1e-15);
  EXPECT_NEAR(stein_angle(4.0 / 3.0), kPi / 4, 1e-15);
  double prev = stein_angle(2.0);
  for (double p : {1.5, 1.2, 1.05, 1.001}) {
    const double a = stein_angle(p);
    EXPECT_LT(a, prev);
    prev = a;
  }
  EXPECT_LT(prev, 0.01);
  EXPECT_THROW(stein_angle(1.0), HypothesisError);
  EXPECT_THROW(stein_angle(kInf), HypothesisError);
}

TEST(SectorProbe, ContractiveInsideTheAngle) {
  const auto grid = SectorGrid::make(kPi / 4, 1e-2, 1e1, 8, 5);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto gen = random_generator(4 + seed, seed, GeneratorKind::diffusion);
    const auto rep = sector_contraction_probe(gen, 4.0, grid, 3, seed);
    EXPECT_TRUE(rep.pass) << rep.max_norm;
    EXPECT_EQ(rep.rows.size(), grid.points().size());
  }
  const auto gen = random_generator(6, 9, GeneratorKind::diffusion);
  const auto rep2 = sector_contraction_probe(gen, 2.0, SectorGrid::make(1.5, 1e-2, 1e1, 8, 5), 1, 1);
  EXPECT_TRUE(rep2.pass);
  EXPECT_LE(rep2.max_norm, 1.0);
  EXPECT_THROW(sector_contraction_probe(gen, 4.0, SectorGrid::make(1.0), 1, 1), HypothesisError);
}

TEST(SectorGrid, RefinementIsSuperset) {
  const auto g = SectorGrid::make(0.3, 1e-2, 1.0, 5, 3);
  const auto r = g.refined();
  for (double t : g.radii())
    EXPECT_NE(std::find(r.radii().begin(), r.radii().end(), t), r.radii().end());
  for (double a : g.angles())
    EXPECT_NE(std::find(r.angles().begin(), r.angles().end(), a), r.angles().end());
  EXPECT_THROW(SectorGrid(0.3, {1.0}, {0.5}), DomainError);
}

TEST(RandomGenerator, KindsSatisfyTheirInvariants) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const auto d = random_generator(n, seed, GeneratorKind::diffusion);
    EXPECT_TRUE(diffusion_violations(d).empty());
    EXPECT_TRUE(d.injective());
    const auto c = random_generator(n, seed, GeneratorKind::contraction_only);
    EXPECT_TRUE(verify_contraction_property(c, default_contraction_grid()).pass);
    if (n >= 2) {
      bool positive_off_diagonal = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) positive_off_diagonal |= i != j && c.matrix()(i, j) > 0;
      EXPECT_TRUE(positive_off_diagonal);
    }
  }
}
