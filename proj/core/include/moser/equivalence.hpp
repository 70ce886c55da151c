#pragma once

// Constructive rescalings behind the equivalence of the critical Ruf-type
// and subcritical Adachi-Tanaka-type inequalities, and the tau-scaling of
// the weighted Sobolev norm.

#include <string>
#include <string_view>
#include <vector>

#include "moser/profile.hpp"

namespace moser {

/// Constant a bound is expressed against. d_{4 pi} has no closed form, so
/// bounds stay symbolic: J <= coefficient * constant.
enum class BoundTag { d_4pi, c_subcritical };
std::string_view tag_name(BoundTag t) noexcept;

struct TraceStep {
  std::string name;        // symbol of the intermediate function
  RadialProfile profile;
  double dirichlet_sq = 0.0;
  double l2_sq = 0.0;
  std::string constraint;  // human-readable constraint it must meet
  double constrained = 0.0;
  double limit = 0.0;
  bool satisfied = true;   // constrained <= limit + 1e-12 * max(1, limit)
};

struct EquivalenceTrace {
  std::string transform;
  double theta = 0.0;  // ||grad u||_2^2 of the input
  double l2_sq = 0.0;  // ||u||_2^2 of the input
  std::string branch;
  std::vector<TraceStep> steps;
  double coefficient = 0.0;
  BoundTag tag = BoundTag::d_4pi;
};

/// v = sqrt(beta/4pi) u, v_mu = v(mu .), mu^2 = ||v||_2^2 / (1 - beta/4pi).
/// Then ||v_mu||_S <= 1 and J_beta(u) = J_{4pi}(v) = mu^2 J_{4pi}(v_mu).
/// Requires beta in (0, 4 pi), ||grad u||_2 <= 1 and u != 0.
EquivalenceTrace ruf_normalize(const RadialProfile& p, double beta);

/// theta <= 1/2: u~ = sqrt 2 u, bounded against the subcritical constant
/// with coefficient ||u~||_2^2 <= 2.
/// theta > 1/2: u_theta = u / sqrt(theta), bounded against d_{4 pi} with
/// coefficient ||u||_2^2 / (theta (1 - theta)) <= 2.
/// Requires ||u||_S <= 1 and u != 0.
EquivalenceTrace adachi_split(const RadialProfile& p);

/// u_tau(x) = u(sqrt(tau) x): ||u_tau||_{S,tau} = ||u||_S, J(u) = tau J(u_tau).
/// Knots are untouched; the support measure becomes T / tau.
RadialProfile tau_rescale(const RadialProfile& p, double tau);

}  // namespace moser
