#pragma once

// Hand-rolled random inputs for property tests. Everything is driven by a
// caller-owned mt19937_64, so failures reproduce from the printed seed.

#include <cmath>
#include <random>
#include <vector>

#include "moser/profile.hpp"
#include "moser/rearrangement.hpp"

namespace moser::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct ProfileShape {
  std::size_t min_knots = 2;
  std::size_t max_knots = 8;
  double log_t_lo = -3.0;  // log T_sup range
  double log_t_hi = 3.0;
  double jump_probability = 0.0;
  bool flat_pieces = true;  // allow zero-increment pieces
};

/// Continuous (unless jumps are requested) profile with v_0 = 0, rescaled
/// to a random Dirichlet energy in (0, dirichlet_cap].
inline RadialProfile random_profile(Rng& rng, const ProfileShape& shape = {},
                                    double dirichlet_cap = 1.0) {
  const std::size_t n = uniform_index(rng, shape.min_knots, shape.max_knots);
  std::vector<Knot> knots{Knot{0.0, 0.0}};
  double s = 0.0;
  double v = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    s += std::exp(uniform(rng, -3.0, 2.0));
    const bool flat = shape.flat_pieces && uniform(rng, 0.0, 1.0) < 0.15;
    v += flat ? 0.0 : uniform(rng, 0.01, 1.0);
    const bool jump = uniform(rng, 0.0, 1.0) < shape.jump_probability;
    knots.push_back(Knot{s, v, jump ? KnotKind::jump : KnotKind::linear});
  }
  if (knots.back().v == 0.0) knots.back().v = 0.5;
  RadialProfile p(std::exp(uniform(rng, shape.log_t_lo, shape.log_t_hi)), std::move(knots));
  const double d = dirichlet_norm_sq(p);
  if (std::isfinite(d) && d > 0.0) {
    const double target = uniform(rng, 0.05, 1.0) * dirichlet_cap;
    p = scale_amplitude(p, std::sqrt(target / d));
  }
  return p;
}

/// Same shape, rescaled so that ||grad u||^2 + ||u||^2 = a random value in (0, 1].
inline RadialProfile random_sobolev_unit(Rng& rng, const ProfileShape& shape = {}) {
  RadialProfile p = random_profile(rng, shape);
  const double s = sobolev_norm_sq(p);
  return scale_amplitude(p, std::sqrt(uniform(rng, 0.05, 1.0) / s));
}

inline WeightedSamples random_samples(Rng& rng, std::size_t n, bool with_ties = true) {
  WeightedSamples w;
  for (std::size_t i = 0; i < n; ++i) {
    const double value = with_ties && uniform(rng, 0.0, 1.0) < 0.3
                             ? std::floor(uniform(rng, 0.0, 5.0))
                             : uniform(rng, 0.0, 5.0);
    w.values.push_back(value);
    w.areas.push_back(std::exp(uniform(rng, -4.0, 1.0)));
  }
  return w;
}

}  // namespace moser::testing
