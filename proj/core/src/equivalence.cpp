#include "moser/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "moser/error.hpp"

namespace moser {

namespace {

constexpr double slack = 1e-12;

TraceStep make_step(std::string name, RadialProfile profile, std::string constraint,
                    double constrained, double limit) {
  TraceStep step{std::move(name), std::move(profile), 0.0, 0.0, std::move(constraint), 0.0, 0.0, true};
  step.dirichlet_sq = dirichlet_norm_sq(step.profile);
  step.l2_sq = l2_norm_sq(step.profile);
  step.constrained = constrained;
  step.limit = limit;
  step.satisfied = constrained <= limit + slack * std::max(1.0, std::abs(limit));
  return step;
}

void check(const EquivalenceTrace& trace) {
  for (const TraceStep& step : trace.steps) {
    if (!step.satisfied) {
      throw error(errc::precondition, trace.transform + ": " + step.name + " violates " +
                                          step.constraint);
    }
  }
}

}  // namespace

std::string_view tag_name(BoundTag t) noexcept {
  switch (t) {
    case BoundTag::d_4pi: return "d_4pi";
    case BoundTag::c_subcritical: return "C_subcritical";
  }
  return "unknown";
}

EquivalenceTrace ruf_normalize(const RadialProfile& p, double beta) {
  if (!(beta > 0.0 && beta < four_pi)) {
    throw error(errc::domain_error, "ruf_normalize: beta must lie in (0, 4 pi)");
  }
  if (p.is_zero()) throw error(errc::precondition, "ruf_normalize: zero profile");
  EquivalenceTrace trace;
  trace.transform = "ruf_normalize";
  trace.theta = dirichlet_norm_sq(p);
  trace.l2_sq = l2_norm_sq(p);
  if (!(trace.theta <= 1.0 + slack)) {
    throw error(errc::precondition, "ruf_normalize: needs ||grad u||_2 <= 1");
  }
  trace.branch = "critical";

  const double b = beta / four_pi;
  RadialProfile v = scale_amplitude(p, std::sqrt(b));
  const double v_l2 = l2_norm_sq(v);
  const double mu_sq = v_l2 / (1.0 - b);
  RadialProfile v_mu(v.t_support() / mu_sq, v.knots());

  trace.steps.push_back(make_step("v", v, "||grad v||^2 <= beta/4pi", dirichlet_norm_sq(v), b));
  TraceStep last = make_step("v_mu", std::move(v_mu), "||v_mu||_S^2 <= 1", 0.0, 1.0);
  last.constrained = last.dirichlet_sq + last.l2_sq;
  last.satisfied = last.constrained <= 1.0 + slack;
  trace.steps.push_back(std::move(last));
  trace.coefficient = mu_sq;
  trace.tag = BoundTag::d_4pi;
  check(trace);
  return trace;
}

EquivalenceTrace adachi_split(const RadialProfile& p) {
  if (p.is_zero()) throw error(errc::precondition, "adachi_split: zero profile");
  EquivalenceTrace trace;
  trace.transform = "adachi_split";
  trace.theta = dirichlet_norm_sq(p);
  trace.l2_sq = l2_norm_sq(p);
  const double theta = trace.theta;
  if (!(theta + trace.l2_sq <= 1.0 + slack)) {
    throw error(errc::precondition, "adachi_split: needs ||u||_S <= 1");
  }
  if (!(theta < 1.0)) throw error(errc::precondition, "adachi_split: needs ||grad u||_2 < 1");

  if (theta <= 0.5) {
    trace.branch = "theta<=1/2";
    RadialProfile tilde = scale_amplitude(p, std::sqrt(2.0));
    TraceStep step = make_step("u_tilde", std::move(tilde), "||grad u_tilde||^2 <= 1", 0.0, 1.0);
    step.constrained = step.dirichlet_sq;
    step.satisfied = step.constrained <= 1.0 + slack && step.l2_sq <= 2.0 + slack;
    trace.coefficient = step.l2_sq;
    trace.steps.push_back(std::move(step));
    trace.tag = BoundTag::c_subcritical;
  } else {
    trace.branch = "theta>1/2";
    RadialProfile u_theta = scale_amplitude(p, 1.0 / std::sqrt(theta));
    TraceStep step = make_step("u_theta", std::move(u_theta), "||grad u_theta||^2 = 1", 0.0, 1.0);
    step.constrained = step.dirichlet_sq;
    step.satisfied = std::abs(step.constrained - 1.0) <= 1e-12;
    trace.steps.push_back(std::move(step));
    trace.coefficient = trace.l2_sq / (theta * (1.0 - theta));
    trace.tag = BoundTag::d_4pi;
  }
  check(trace);
  return trace;
}

RadialProfile tau_rescale(const RadialProfile& p, double tau) {
  if (!(tau > 0.0 && std::isfinite(tau))) {
    throw error(errc::domain_error, "tau_rescale: tau must be positive");
  }
  return RadialProfile(p.t_support() / tau, p.knots());
}

}  // namespace moser
