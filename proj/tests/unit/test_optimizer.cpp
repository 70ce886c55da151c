#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "moser/error.hpp"
#include "moser/inequalities.hpp"
#include "moser/optimizer.hpp"
#include "moser/sequences.hpp"
#include "support/generators.hpp"

namespace {

using namespace moser;
using moser::testing::Rng;
using moser::testing::uniform;
using moser::testing::uniform_index;

// unclipped isotonic fit via max_{j<=i} min_{k>=i} mean(v[j..k]), then clipped at 0
std::vector<double> isotonic_minmax(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j <= i; ++j) {
      double lowest = std::numeric_limits<double>::infinity();
      for (std::size_t k = i; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t m = j; m <= k; ++m) sum += v[m];
        lowest = std::min(lowest, sum / static_cast<double>(k - j + 1));
      }
      best = std::max(best, lowest);
    }
    out[i] = std::max(best, 0.0);
  }
  return out;
}

OptimizationOptions small_run(std::size_t budget, std::uint64_t seed = 0) {
  OptimizationOptions o;
  o.knots = 12;
  o.budget = budget;
  o.seed = seed;
  return o;
}

TEST(Isotonic, Examples) {
  EXPECT_EQ(isotonic_nonnegative({1.0, 3.0, 2.0, 4.0}), (std::vector<double>{1.0, 2.5, 2.5, 4.0}));
  EXPECT_EQ(isotonic_nonnegative({3.0, 2.0, 1.0}), (std::vector<double>{2.0, 2.0, 2.0}));
  EXPECT_EQ(isotonic_nonnegative({-1.0, 0.5}), (std::vector<double>{0.0, 0.5}));
  EXPECT_TRUE(isotonic_nonnegative({}).empty());
}

TEST(Isotonic, MatchesMinMaxFormula) {
  Rng rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> v(uniform_index(rng, 1, 12));
    for (double& x : v) x = uniform(rng, -1.0, 2.0);
    const std::vector<double> fit = isotonic_nonnegative(v);
    const std::vector<double> ref = isotonic_minmax(v);
    ASSERT_EQ(fit.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(fit[i], ref[i], 1e-12);
      EXPECT_GE(fit[i], 0.0);
      if (i > 0) EXPECT_GE(fit[i], fit[i - 1]);
    }
  }
}

TEST(Constraints, AmplitudesAndLevels) {
  const ConstraintSet r = ConstraintSet::reduced(0.5, 2.0);
  EXPECT_DOUBLE_EQ(r.max_amplitude(4.0, 1.0), 0.25);
  EXPECT_DOUBLE_EQ(r.max_amplitude(4.0, 1e4), 0.02);
  EXPECT_DOUBLE_EQ(ConstraintSet::ruf(3.0).max_amplitude(4.0, 1.0), 1.0 / std::sqrt(7.0));
  EXPECT_DOUBLE_EQ(ConstraintSet::norm_sum().max_amplitude(4.0, 1.0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.vanishing_level(2.0 * pi), 8.0 * pi);
  EXPECT_DOUBLE_EQ(ConstraintSet::ruf(2.0).vanishing_level(four_pi), 2.0 * pi);
  EXPECT_DOUBLE_EQ(ConstraintSet::norm_sum().vanishing_level(pi), pi);
  EXPECT_TRUE(r.feasible(0.25, 4.0));
  EXPECT_FALSE(r.feasible(0.26, 4.0));
  EXPECT_FALSE(ConstraintSet::norm_sum().feasible(0.25, 0.36));
  EXPECT_TRUE(ConstraintSet::norm_sum().feasible(0.25, 0.25));
  EXPECT_EQ(constraint_name(ConstraintKind::norm_sum), "norm-sum");
  EXPECT_THROW(ConstraintSet::reduced(1.0, 1.0), error);
  EXPECT_THROW(ConstraintSet::reduced(0.0, 0.0), error);
  EXPECT_THROW(ConstraintSet::ruf(0.0), error);
  EXPECT_THROW(r.max_amplitude(0.0, 0.0), error);
}

TEST(Constraints, AmplitudePutsRandomProfilesOnTheBoundary) {
  Rng rng(52);
  const std::vector<ConstraintSet> sets{ConstraintSet::reduced(0.3, 0.5), ConstraintSet::ruf(2.0),
                                        ConstraintSet::norm_sum()};
  for (int trial = 0; trial < 300; ++trial) {
    const RadialProfile p = moser::testing::random_profile(rng);
    for (const ConstraintSet& c : sets) {
      const RadialProfile q = scale_amplitude(p, c.max_amplitude(dirichlet_norm_sq(p), l2_norm_sq(p)));
      const auto res = c.residuals(dirichlet_norm_sq(q), l2_norm_sq(q));
      double worst = -1.0;
      for (const auto& [name, r] : res) worst = std::max(worst, r);
      EXPECT_NEAR(worst, 0.0, 1e-12);
    }
  }
}

TEST(Maximize, Preconditions) {
  EXPECT_THROW(maximize(ConstraintSet::reduced(0.5, 1.0), 16.0 * pi, small_run(10)), error);
  EXPECT_THROW(maximize(ConstraintSet::reduced(0.0, 1.0), four_pi, small_run(10)), error);
  EXPECT_THROW(maximize(ConstraintSet::ruf(), 0.0, small_run(10)), error);
  OptimizationOptions few = small_run(10);
  few.knots = 3;
  EXPECT_THROW(maximize(ConstraintSet::ruf(), pi, few), error);
  EXPECT_THROW(maximize(ConstraintSet::ruf(), pi, small_run(0)), error);
}

TEST(Maximize, DeterministicPerSeed) {
  const ConstraintSet c = ConstraintSet::reduced(0.2, 0.8);
  const OptimizationResult a = maximize(c, 3.0 * pi, small_run(1500, 7));
  const OptimizationResult b = maximize(c, 3.0 * pi, small_run(1500, 7));
  EXPECT_EQ(a.best_profile, b.best_profile);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.objective_trace, b.objective_trace);
  EXPECT_EQ(a.feasibility_residuals, b.feasibility_residuals);
  EXPECT_EQ(a.best_start, b.best_start);
  EXPECT_EQ(a.evaluations, b.evaluations);
  ASSERT_EQ(a.starts.size(), b.starts.size());
  for (std::size_t i = 0; i < a.starts.size(); ++i) {
    EXPECT_EQ(a.starts[i].name, b.starts[i].name);
    EXPECT_EQ(a.starts[i].value, b.starts[i].value);
  }
  EXPECT_EQ(a.seed, 7u);
}

TEST(Maximize, ReducedBeatsVanishingLevel) {
  const ConstraintSet c = ConstraintSet::reduced(0.0, 1.0);
  const OptimizationResult r = maximize(c, 2.0 * pi, small_run(3000));
  EXPECT_DOUBLE_EQ(r.vanishing_level_value, 2.0 * pi);
  EXPECT_GT(r.best_value, 2.0 * pi);
  EXPECT_LE(r.evaluations, 3000u);
}

TEST(Maximize, RufAtCriticalExponent) {
  const OptimizationResult r = maximize(ConstraintSet::ruf(1.0), four_pi, small_run(3000));
  EXPECT_GE(r.best_value, 12.0);
  EXPECT_GT(r.best_value, std::exp(1.0) * pi);
}

TEST(Maximize, InvariantsAcrossSetsAndSeeds) {
  const std::vector<std::pair<ConstraintSet, double>> cases{
      {ConstraintSet::reduced(0.0, 1.0), 2.0 * pi},
      {ConstraintSet::reduced(0.5, 2.0), four_pi},
      {ConstraintSet::ruf(1.0), four_pi},
      {ConstraintSet::ruf(3.0), 2.0 * pi},
      {ConstraintSet::norm_sum(), four_pi}};
  for (const auto& [c, beta] : cases) {
    for (std::uint64_t seed : {1u, 2u}) {
      const OptimizationResult r = maximize(c, beta, small_run(800, seed));
      const double d = dirichlet_norm_sq(r.best_profile);
      const double l2 = l2_norm_sq(r.best_profile);
      EXPECT_TRUE(c.feasible(d, l2));
      for (const auto& [name, res] : r.feasibility_residuals) EXPECT_LE(res, 1e-9) << name;
      for (std::size_t i = 1; i < r.objective_trace.size(); ++i) {
        EXPECT_GE(r.objective_trace[i], r.objective_trace[i - 1]);
      }
      const double again = tm_functional(r.best_profile, beta).j_beta;
      EXPECT_NEAR(r.best_value, again, 1e-9 * again);
      double best_start = 0.0;
      for (const StartValue& s : r.starts) best_start = std::max(best_start, s.value);
      EXPECT_GE(r.best_value, best_start * (1.0 - 1e-8));
      if (c.kind == ConstraintKind::reduced) EXPECT_GT(r.best_value, r.vanishing_level_value);
    }
  }
}

TEST(Maximize, DominatesReevaluatedFamilyStarts) {
  const ConstraintSet c = ConstraintSet::ruf(1.0);
  const OptimizationResult r = maximize(c, four_pi, small_run(800));
  for (const RadialProfile& p : {cap(4.0, 1.0), cap(1.0, 100.0), alvino_extremal(pi, std::exp(1.0))}) {
    const RadialProfile q = scale_amplitude(p, c.max_amplitude(dirichlet_norm_sq(p), l2_norm_sq(p)));
    EXPECT_GE(r.best_value, tm_functional(q, four_pi).j_beta * (1.0 - 1e-8));
  }
}

TEST(Blowup, ProfileNorms) {
  for (double n : {1e3, 1e6, 1e30}) {
    const RadialProfile u = blowup_profile(0.25, 0.01, n);
    const CounterexampleScales sc = counterexample_scales(std::log(n));
    EXPECT_NEAR(dirichlet_norm_sq(u), 0.5625 * sc.lambda_sq, 1e-13);
    EXPECT_LE(l2_norm_sq(u), 1e-4 * (1.0 + 1e-13));
  }
  EXPECT_EQ(blowup_profile(0.0, 1.0, 1e4), counterexample(1e4));
  EXPECT_THROW(blowup_profile(1.0, 1.0, 1e4), error);
  EXPECT_THROW(blowup_profile(0.0, 1.0, 2.0), error);
}

TEST(Blowup, CriticalRowsAndLowerBound) {
  const std::vector<double> ns{1e3, 1e4, 1e5, 1e6};
  const std::vector<BlowupRow> rows = blowup_scan(0.0, 1.0, {four_pi}, ns);
  ASSERT_EQ(rows.size(), 4u);
  // mpmath at 30 digits
  const double reference[] = {6.76885, 5.55664, 4.83566, 4.38578};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, ns[i]);
    EXPECT_NEAR(rows[i].j_beta, reference[i], 1e-5);
    EXPECT_LE(rows[i].lower_bound, rows[i].j_beta);
  }
  EXPECT_NEAR(rows.back().lower_bound, 1.6936073, 1e-6);
  EXPECT_GE(rows.back().lower_bound, 1.69);
}

TEST(Blowup, SubcriticalColumnsStayBounded) {
  const std::vector<double> ns{1e3, 1e4, 1e5, 1e6, 1e30, 1e100};
  for (const BlowupRow& row : blowup_scan(0.0, 1.0, {2.0 * pi}, ns)) EXPECT_LT(row.j_beta, 1.0);
  for (const BlowupRow& row : blowup_scan(0.5, 1.0, {four_pi}, ns)) EXPECT_LT(row.j_beta, 1.0);
}

TEST(Blowup, CriticalColumnGrowsForLargeN) {
  const std::vector<double> ns{1e30, 1e60, 1e120, 1e240};
  const std::vector<BlowupRow> rows = blowup_scan(0.0, 1.0, {four_pi}, ns);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].j_beta, rows[i - 1].j_beta);
  const std::vector<BlowupRow> shifted = blowup_scan(0.5, 1.0, {16.0 * pi}, ns);
  for (std::size_t i = 1; i < shifted.size(); ++i) EXPECT_GT(shifted[i].j_beta, shifted[i - 1].j_beta);
}

TEST(Vanishing, BumpNorms) {
  const ConstraintSet c = ConstraintSet::reduced(0.3, 0.7);
  const RadialProfile phi = vanishing_bump(c);
  EXPECT_NEAR(dirichlet_norm_sq(phi), 0.49, 1e-14);
  EXPECT_NEAR(l2_norm_sq(phi), 0.49, 1e-14);
  EXPECT_THROW(vanishing_bump(ConstraintSet::ruf()), error);
}

TEST(Vanishing, ApproachesLevel) {
  const ConstraintSet c = ConstraintSet::reduced(0.0, 1.0);
  const std::vector<VanishingRow> rows = vanishing_probe(c, 2.0 * pi, {1.0, 0.1, 0.01, 1e-3});
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].j_beta, tm_functional(vanishing_bump(c), 2.0 * pi).j_beta);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_DOUBLE_EQ(rows[i].level, 2.0 * pi);
    EXPECT_GT(rows[i].j_beta, rows[i].level);
    EXPECT_LE(rows[i].gap, rows[i].remainder * (1.0 + 1e-8) + 1e-12);
    if (i > 0) {
      EXPECT_LT(rows[i].j_beta, rows[i - 1].j_beta);
      EXPECT_LT(rows[i].gap, rows[i - 1].gap);
    }
  }
  EXPECT_NEAR(rows.back().gap, 1.355e-6, 1e-8);
  EXPECT_THROW(vanishing_probe(c, 2.0 * pi, {0.0}), error);
}

}  // namespace
