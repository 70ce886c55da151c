#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "moser/error.hpp"
#include "moser/inequalities.hpp"
#include "moser/sequences.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace {

using namespace moser;
using moser::testing::random_profile;
using moser::testing::random_sobolev_unit;
using moser::testing::Rng;
using moser::testing::uniform;

const double inv_sqrt_4pi = 1.0 / std::sqrt(four_pi);

// sup over a log-spaced t grid of (u*(t) - u*(T)) / sqrt(log(T/t))
double alvino_grid(const RadialProfile& p, double T) {
  const double c = p.rearrangement(T);
  double sup = 0.0;
  for (int i = 0; i <= 40000; ++i) {
    const double sigma = 1e-6 * std::exp(i * std::log(2e8) / 40000.0);  // log(T/t) in [1e-6, 200]
    const double t = T * std::exp(-sigma);
    sup = std::max(sup, (p.rearrangement(t) - c) / std::sqrt(sigma));
  }
  return sup;
}

// sup over (T, t) grids of u*(t) / sqrt(4 pi / T + log(T/t))
double zygmund_grid(const RadialProfile& p) {
  double sup = 0.0;
  for (int i = -500; i <= 500; ++i) {
    const double T = std::exp(0.02 * i);
    for (int j = 0; j <= 6000; ++j) {
      const double sigma = 0.01 * j;
      const double t = T * std::exp(-sigma);
      sup = std::max(sup, p.rearrangement(t) / std::sqrt(four_pi / T + sigma));
    }
  }
  return sup;
}

TEST(Compare, Tolerance) {
  EXPECT_TRUE(compare(1.0, 1.0, 0.0).holds);
  EXPECT_TRUE(compare(1.0 + 5e-10, 1.0, 0.0).holds);
  EXPECT_FALSE(compare(1.0 + 2e-9, 1.0, 0.0).holds);
  EXPECT_TRUE(compare(1000.0 + 5e-7, 1000.0, 0.0).holds);
  EXPECT_TRUE(compare(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), 0.0).holds);
  EXPECT_FALSE(compare(std::numeric_limits<double>::infinity(), 1.0, 0.0).holds);
}

TEST(Alvino, ZeroProfile) {
  const InequalityReport r = alvino_ratio_sup(RadialProfile::zero(), 1.0);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_TRUE(r.holds);
  EXPECT_THROW(alvino_ratio_sup(RadialProfile::zero(), 0.0), error);
}

TEST(Alvino, EqualityOnExtremals) {
  for (double T : {0.01, pi, 10.0, 1e4}) {
    for (double delta : {1.001, std::exp(1.0), std::exp(4.0), 1e30}) {
      const InequalityReport r = alvino_ratio_sup(alvino_extremal(T, delta), T);
      EXPECT_NEAR(r.lhs, inv_sqrt_4pi, 1e-12);
      EXPECT_NEAR(r.rhs, inv_sqrt_4pi, 1e-12);
      EXPECT_TRUE(r.holds);
    }
  }
}

TEST(Alvino, MoserProfileIsAnExtremalToo) {
  // moser(n) and alvino_extremal(pi, n) have the same knots
  const InequalityReport r = alvino_ratio_sup(moser::moser(10.0), pi);
  EXPECT_NEAR(r.lhs, inv_sqrt_4pi, 1e-12);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(moser::moser(10.0), alvino_extremal(pi, 10.0));
}

TEST(Alvino, MatchesGridSearch) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const RadialProfile p = random_profile(rng);
    const double T = p.t_support() * std::exp(uniform(rng, -4.0, 1.0));
    const double exact = alvino_ratio_sup(p, T).lhs;
    const double grid = alvino_grid(p, T);
    EXPECT_GE(exact, grid * (1.0 - 1e-12));
    EXPECT_LE(exact, grid * (1.0 + 2e-3) + 1e-12) << trial;
  }
}

TEST(Alvino, HoldsForRandomProfilesAndWindows) {
  Rng rng(32);
  for (int trial = 0; trial < 3000; ++trial) {
    const RadialProfile p = random_profile(rng, {.jump_probability = 0.1});
    const double T = p.t_support() * std::exp(uniform(rng, -6.0, 2.0));
    EXPECT_TRUE(alvino_ratio_sup(p, T).holds) << trial;
  }
}

TEST(Zygmund, ConstantOnFourPi) {
  const RadialProfile p(four_pi, {Knot{0.0, 1.0}});
  const QuasiNorm z = zygmund_quasinorm(p);
  EXPECT_NEAR(z.value, 1.0, 1e-15);
  EXPECT_NEAR(z.window, four_pi, 1e-12);
  EXPECT_NEAR(z.t, four_pi, 1e-12);
  EXPECT_EQ(zygmund_quasinorm(RadialProfile::zero()).value, 0.0);
}

TEST(Zygmund, OptimalSequenceRatioWindow) {
  const RadialProfile p = zygmund_optimal(100.0);
  const double ratio = std::sqrt(four_pi) * zygmund_quasinorm(p).value / std::sqrt(sobolev_norm_sq(p));
  EXPECT_GT(ratio, 0.9);
  EXPECT_LT(ratio, 1.0);
}

TEST(Zygmund, MatchesGridSearch) {
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const RadialProfile p = random_profile(rng, {.max_knots = 5, .jump_probability = 0.2});
    const double exact = zygmund_quasinorm(p).value;
    const double grid = zygmund_grid(p);
    EXPECT_GE(exact, grid * (1.0 - 1e-12));
    EXPECT_LE(exact, grid * (1.0 + 5e-3)) << trial;
  }
}

TEST(Limine, Examples) {
  const InequalityReport z = check_limine(RadialProfile::zero());
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  EXPECT_TRUE(z.holds);
  const InequalityReport a = check_limine(alvino_extremal(pi, std::exp(1.0)));
  EXPECT_TRUE(a.holds);
  EXPECT_GT(a.slack, 1e-3);
  double previous = 1.0;
  for (double k : {1.0, 10.0, 100.0}) {
    const InequalityReport r = check_limine(zygmund_optimal(k));
    EXPECT_TRUE(r.holds);
    EXPECT_LT(r.slack / r.rhs, previous);
    previous = r.slack / r.rhs;
  }
  EXPECT_LT(previous, 0.02);
}

TEST(Limine, HoldsOnRandomProfiles) {
  Rng rng(34);
  for (int trial = 0; trial < 3000; ++trial) {
    const RadialProfile p = random_profile(rng, {.log_t_lo = -8.0, .log_t_hi = 8.0, .jump_probability = 0.1});
    EXPECT_TRUE(check_limine(p).holds) << trial;
  }
}

TEST(Adachi, CapRatioMatchesSimpson) {
  const RadialProfile p = cap(1.0, 1.0);
  const double r = adachi_ratio(p, 2.0 * pi);
  EXPECT_GT(r, 0.0);
  const double ref = static_cast<double>(moser::testing::brute_force_integral(p, 2.0 * pi)) / l2_norm_sq(p);
  EXPECT_NEAR(r, ref, 1e-9 * ref);
}

TEST(Adachi, SmallBetaLimit) {
  Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const RadialProfile p = random_profile(rng);
    const double beta = 1e-7;
    EXPECT_NEAR(adachi_ratio(p, beta) / beta, 1.0, 1e-5);
  }
}

TEST(Adachi, DilationInvariant) {
  Rng rng(36);
  for (int trial = 0; trial < 50; ++trial) {
    const RadialProfile p = random_profile(rng);
    const double beta = uniform(rng, 0.1, 12.0);
    const double b = std::exp(uniform(rng, -3.0, 3.0));
    EXPECT_NEAR(adachi_ratio(scale_dilate(p, b), beta), adachi_ratio(p, beta), 1e-10 * adachi_ratio(p, beta));
  }
}

TEST(Adachi, Preconditions) {
  EXPECT_THROW(adachi_ratio(RadialProfile::zero(), pi), error);
  EXPECT_THROW(adachi_ratio(scale_amplitude(cap(1.0, 1.0), 1.1), pi), error);
  EXPECT_THROW(adachi_ratio(cap(1.0, 1.0), four_pi), error);
}

TEST(Adachi, QuadraticCeilingOnFamilies) {
  const double ceiling = 16.0 * std::exp(four_pi) * (1.0 + four_pi);
  for (double beta : {0.5, pi, 2.0 * pi, 3.0 * pi, 3.9 * pi, 3.99 * pi}) {
    const double gap = 1.0 - beta / four_pi;
    for (const RadialProfile& p : {cap(1.0, 1.0), cap(16.0, 3.0), moser::moser(100.0), alvino_extremal(10.0, 5.0)}) {
      EXPECT_LE(adachi_ratio(p, beta) * gap * gap, at_quadratic_bound(beta) * gap * gap);
      EXPECT_NEAR(at_quadratic_bound(beta) * gap * gap, ceiling, 1e-12 * ceiling);
    }
  }
}

TEST(Constants, AtConstantEps) {
  const double b = 0.5;
  const double expected = 4.0 * pi * std::exp(b) * std::max(b, std::exp(1.0) / 0.25);
  EXPECT_NEAR(at_constant_eps(2.0 * pi, 0.5), expected, 1e-12 * expected);
  EXPECT_NEAR(at_constant_eps(2.0 * pi, 0.5), 225.28, 0.01);
  EXPECT_DOUBLE_EQ(best_eps(2.0 * pi), 0.5);
  EXPECT_THROW(at_constant_eps(2.0 * pi, 1.0), error);  // needs eps < 4pi/beta - 1 = 1
  EXPECT_THROW(at_constant_eps(2.0 * pi, 0.0), error);
  EXPECT_THROW(at_constant_eps(four_pi, 0.1), error);
}

TEST(Constants, BestEpsMinimizes) {
  for (double beta : {1.0, pi, 2.0 * pi, 3.5 * pi, 3.9 * pi}) {
    const double best = at_constant_eps(beta, best_eps(beta));
    const double upper = four_pi / beta - 1.0;
    for (int i = 1; i < 200; ++i) {
      EXPECT_LE(best, at_constant_eps(beta, upper * i / 200.0) * (1.0 + 1e-12));
    }
  }
}

TEST(Constants, AsymptoticBand) {
  // at eps = 1 - b the second branch is 4 pi e^{b - 1} times the asymptotic form
  for (double m = 2.01; m < 3.9; m += 0.01) {
    const double beta = m * pi;
    const double ratio = at_constant_eps(beta, best_eps(beta)) / at_constant_asymptotic(beta);
    EXPECT_GE(ratio, four_pi * std::exp(-0.5) * (1.0 - 1e-12));
    EXPECT_LE(ratio, four_pi);
  }
}

TEST(Constants, VanishingLevel) {
  EXPECT_NEAR(vanishing_level(2.0 * pi, 1.0), 6.28319, 1e-5);
  EXPECT_EQ(vanishing_level(2.0 * pi, 0.0), 0.0);
  EXPECT_NEAR(vanishing_level(four_pi, 1.0), 12.56637, 1e-5);
  EXPECT_THROW(vanishing_level(0.0, 1.0), error);
}

TEST(Constants, QuadraticBound) {
  const double k_sq = at_quadratic_k_sq(2.0 * pi);
  EXPECT_NEAR(std::sqrt(k_sq), 0.353553, 1e-6);
  const double expected = 64.0 * std::exp(four_pi) * (1.0 + four_pi);
  EXPECT_NEAR(at_quadratic_bound(2.0 * pi), expected, 1e-12 * expected);
  EXPECT_NEAR((1.0 + k_sq) * 0.5, 0.5625, 1e-15);
  EXPECT_NEAR(1.0 - k_sq, 0.875, 1e-15);
  for (double m = 0.01; m < 4.0; m += 0.01) EXPECT_TRUE(at_quadratic_k_admissible(m * pi)) << m;
  const double limit = 16.0 * std::exp(four_pi) * (1.0 + four_pi);
  EXPECT_NEAR(at_quadratic_bound(1e-12), limit, 1e-9 * limit);
  EXPECT_THROW(at_quadratic_bound(four_pi), error);
  EXPECT_THROW(at_quadratic_bound(5.0 * pi), error);
}

TEST(Remainder, Examples) {
  EXPECT_EQ(remainder_functional(RadialProfile::zero(), pi), 0.0);
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const RadialProfile p = random_profile(rng, {.jump_probability = 0.2});
    const double beta = uniform(rng, 0.1, four_pi);
    const double j = tm_functional(p, beta).j_beta;
    const double r = remainder_functional(p, beta);
    EXPECT_GE(r, 0.0);
    EXPECT_NEAR(r, j - beta * l2_norm_sq(p), 1e-9 * j);
    const double ref = static_cast<double>(moser::testing::brute_force_integral(p, beta, true));
    EXPECT_NEAR(r, ref, 1e-8 * ref + 1e-300);
  }
}

TEST(Remainder, SmallAmplitudeAndMonotone) {
  const RadialProfile p = moser::moser(10.0);
  const RadialProfile small = scale_amplitude(p, 0.01);
  EXPECT_LT(remainder_functional(small, four_pi) / tm_functional(small, four_pi).j_beta, 1e-3);
  // remainder/J is exact where J - beta l2 would cancel
  const RadialProfile tiny = scale_amplitude(p, 1e-3);
  const double r = remainder_functional(tiny, four_pi);
  EXPECT_GT(r, 0.0);
  EXPECT_NEAR(r, static_cast<double>(moser::testing::brute_force_integral(tiny, four_pi, true)), 1e-8 * r);
  double previous = 0.0;
  for (double a = 1.0; a < 1.5; a += 0.05) {
    const double ra = remainder_functional(scale_amplitude(p, a), four_pi);
    EXPECT_GT(ra, previous);
    previous = ra;
  }
}

TEST(Zcharact, Examples) {
  const RadialProfile one(four_pi, {Knot{0.0, 1.0}});
  const ZcharactBound b = zcharact_bound(one, 1.0);
  EXPECT_NEAR(b.exp_integral, (std::exp(1.0) - 1.0) * four_pi, 1e-12);
  EXPECT_NEAR(b.bound, std::sqrt(std::exp(1.0) - 1.0), 1e-12);
  EXPECT_NEAR(b.bound, 1.311, 1e-3);
  EXPECT_GE(b.bound, zygmund_quasinorm(one).value);
  EXPECT_NEAR(zcharact_bound(RadialProfile::zero(), 4.0).bound, 0.5, 1e-15);
  const RadialProfile w = moser::moser(10.0);
  EXPECT_GE(zcharact_bound(w, four_pi).bound, zygmund_quasinorm(w).value);
}

TEST(Zcharact, DominatesQuasinorm) {
  Rng rng(38);
  for (int trial = 0; trial < 500; ++trial) {
    const RadialProfile p = random_profile(rng, {.jump_probability = 0.2});
    const double lambda = std::exp(uniform(rng, -3.0, 2.5));
    EXPECT_GE(zcharact_bound(p, lambda).bound, zygmund_quasinorm(p).value * (1.0 - 1e-12)) << trial;
  }
}

TEST(Limine, UnitSobolevRandom) {
  Rng rng(39);
  for (int trial = 0; trial < 1000; ++trial) {
    const RadialProfile p = random_sobolev_unit(rng);
    const InequalityReport r = check_limine(p);
    EXPECT_TRUE(r.holds);
    EXPECT_LE(r.lhs * std::sqrt(four_pi), 1.0 + 1e-12);
  }
}

}  // namespace
