#include <gtest/gtest.h>

#include "maxlab/ergodic.hpp"
#include "oracles.hpp"

using namespace maxlab;

namespace {

const RealMatrix kLaplacian2 = RealMatrix::from_rows({{1, -1}, {-1, 1}});

}  // namespace

TEST(ErgodicSymbol, Limits) {
  EXPECT_EQ(ergodic_symbol(1.0, 0.0), 1.0);
  EXPECT_NEAR(ergodic_symbol(1e-12, 2.0), 1.0, 1e-11);
  EXPECT_NEAR(ergodic_symbol(1.0, 2.0), (1.0 - std::exp(-2.0)) / 2.0, 1e-16);
}

TEST(ErgodicAverage, KnownValues) {
  const auto gen = make_diffusion(WeightedSpace::uniform(2), kLaplacian2);
  const ScalarField f{1.0, -1.0};
  const auto a = ergodic_average(gen, 1.0, f);
  EXPECT_NEAR(a[0].real(), 0.5 * (1.0 - std::exp(-2.0)), 1e-15);
  EXPECT_NEAR(a[0].real(), 0.432332, 1e-6);
  EXPECT_NEAR(a[1].real(), -a[0].real(), 1e-15);

  const auto zero = make_diffusion(WeightedSpace({1.0, 3.0}), RealMatrix(2, 2));
  const ScalarField g{Complex(0.2, 1.0), Complex(-3.0, 0.0)};
  for (double t : {0.1, 5.0}) {
    const auto b = ergodic_average(zero, t, g);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(std::abs(b[i] - g[i]), 0.0, 1e-15);
  }
  EXPECT_THROW(ergodic_average(gen, 0.0, f), DomainError);
}

TEST(ErgodicAverage, SmallTimeRecoversField) {
  const auto gen = random_generator(6, 3, GeneratorKind::diffusion);
  Rng rng(1);
  const auto f = random_field(rng, 6);
  const auto a = ergodic_average(gen, 1e-9, f);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(a[i] - f[i]), 0.0, 1e-8 * (1 + std::abs(f[i])));
}

TEST(ErgodicAverage, MatchesQuadratureOracle) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto gen = random_generator(3 + seed, seed, seed % 2 ? GeneratorKind::diffusion
                                                               : GeneratorKind::contraction_only);
    Rng rng(seed);
    const auto f = random_field(rng, gen.size());
    for (double t : {0.05, 0.7, 3.0}) {
      const auto a = ergodic_average(gen, t, f);
      const auto o = oracle::ergodic_average(gen.matrix(), t, f);
      for (std::size_t i = 0; i < f.size(); ++i)
        EXPECT_NEAR(std::abs(a[i] - o[i]), 0.0, 1e-10 * (1 + std::abs(o[i])));
    }
  }
}

TEST(MaximalErgodic, TrivialCases) {
  const auto zero = make_diffusion(WeightedSpace::uniform(3), RealMatrix(3, 3));
  const ScalarField f{Complex(0, 2), Complex(-1, 0), Complex(0.5, 0.5)};
  const auto grid = default_ergodic_grid();
  const auto m = maximal_ergodic(zero, f, grid);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(m[i], std::abs(f[i]), 1e-15);

  const auto gen = random_generator(5, 2, GeneratorKind::diffusion);
  Rng rng(4);
  const auto g = random_field(rng, 5);
  const std::vector<double> single{0.8};
  const auto ms = maximal_ergodic(gen, g, single);
  const auto avg = ergodic_average(gen, 0.8, g);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(ms[i], std::abs(avg[i]), 1e-15);
  EXPECT_THROW(maximal_ergodic(gen, g, std::vector<double>{}), DomainError);
}

TEST(MaximalErgodic, EigenvectorSupAtSmallTime) {
  const auto gen = make_diffusion(WeightedSpace::uniform(2), kLaplacian2);
  const ScalarField f{1.0, -1.0};
  const auto m = maximal_ergodic(gen, f, geometric_grid(1e-3, 1e2, 30));
  EXPECT_NEAR(m[0], ergodic_symbol(1e-3, 2.0), 1e-15);
  EXPECT_NEAR(m[0], 1.0, 1.1e-3);
}

TEST(MaximalErgodic, GridRefinementNeverDecreases) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto gen = random_generator(4 + seed % 8, seed, GeneratorKind::contraction_only);
    Rng rng(seed);
    const auto f = random_field(rng, gen.size());
    const auto grid = geometric_grid(1e-3, 1e2, 12);
    const auto coarse = maximal_ergodic(gen, f, grid);
    const auto fine = maximal_ergodic(gen, f, refine_grid(grid));
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_GE(fine[i], coarse[i] - 1e-12);
  }
}

TEST(VectorMaximalErgodic, ReducesAndFactorizes) {
  const auto gen = random_generator(6, 7, GeneratorKind::diffusion);
  Rng rng(8);
  const auto f = random_field(rng, 6);
  const auto grid = default_ergodic_grid();
  ComplexMatrix col(6, 1);
  col.set_column(0, f);
  const auto v1 = vector_maximal_ergodic(gen, BochnerField(col, BanachNorm(1, 3.0)), grid);
  const auto s1 = maximal_ergodic(gen, f, grid);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(v1[i], s1[i], 1e-14);

  ScalarField pos(6);
  for (auto& v : pos) v = rng.uniform(0.0, 2.0);
  const std::vector<Complex> u{Complex(1, -1), Complex(0, 2), Complex(-0.5, 0)};
  const double unorm = BanachNorm(3, 2.0)(u);
  const auto vt = vector_maximal_ergodic(gen, BochnerField::tensor(u, pos, 2.0), grid);
  const auto st = maximal_ergodic(gen, pos, grid);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(vt[i], unorm * st[i], 1e-13);
}

TEST(HdsBound, Formula) {
  EXPECT_NEAR(hds_bound(2.0), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(hds_bound(1.5), 2.0 * std::pow(3.0, 2.0 / 3.0), 1e-12);
  EXPECT_NEAR(hds_bound(1.5), 4.160168, 1e-6);
  double prev = hds_bound(1.5);
  for (double p : {2.0, 4.0, 10.0, 100.0, 1e4}) {
    const double b = hds_bound(p);
    EXPECT_LT(b, prev);
    EXPECT_GT(b, 2.0);
    prev = b;
  }
  EXPECT_NEAR(prev, 2.0, 1e-3);
  EXPECT_THROW(hds_bound(1.0), HypothesisError);
  EXPECT_THROW(hds_bound(kInf), HypothesisError);
}

TEST(HdsExperiment, IdentityEnsembleGivesUnitRatios) {
  EnsembleSpec ens;
  ens.identity = true;
  ens.count = 5;
  const std::vector<double> ps{1.5, 2.0, 3.0};
  const auto reps = hds_experiment(ens, ps, default_ergodic_grid(), 1);
  for (const auto& rep : reps) {
    EXPECT_TRUE(rep.pass);
    for (double r : rep.ratios) EXPECT_NEAR(r, 1.0, 1e-14);
    for (double r : rep.vector_ratios) EXPECT_NEAR(r, 1.0, 1e-14);
  }
}

TEST(HdsExperiment, DefaultEnsembleWithinBound) {
  EnsembleSpec ens;
  ens.n = 16;
  ens.count = 30;
  const std::vector<double> ps{1.5, 2.0, 3.0};
  HdsOptions opts;
  opts.adversarial = true;
  opts.climb_steps = 60;
  const auto reps = hds_experiment(ens, ps, default_ergodic_grid(), 77, opts);
  for (const auto& rep : reps) {
    EXPECT_TRUE(rep.pass) << "p = " << rep.p;
    EXPECT_LE(rep.max_ratio(), rep.bound + 1e-9);
    EXPECT_GT(rep.adversarial_ratio, 0.0);
    EXPECT_EQ(rep.scalar_rows.size(), ens.count * static_cast<std::size_t>(opts.trials));
  }
}

TEST(Ensemble, MembersAreDeterministic) {
  EnsembleSpec ens;
  const auto a = ensemble_member(ens, 5, 3);
  const auto b = ensemble_member(ens, 5, 3);
  EXPECT_EQ(a.matrix(), b.matrix());
  EXPECT_GE(a.size(), ens.n_min);
  EXPECT_LE(a.size(), ens.n);
  ens.n_min = 10;
  EXPECT_THROW(ens.validate(), DomainError);
}
