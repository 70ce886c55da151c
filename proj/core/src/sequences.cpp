#include "moser/sequences.hpp"

#include <cmath>

#include "moser/error.hpp"

namespace moser {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw error(errc::domain_error, what);
}

// Ramp from 0 at s = 0 to `top` at s = `length`, then constant.
RadialProfile ramp(double t_support, double length, double top) {
  return RadialProfile(t_support, {Knot{0.0, 0.0}, Knot{length, top}});
}

RadialProfile moser_from_log(double log_n) {
  return ramp(pi, 2.0 * log_n, std::sqrt(log_n) / std::sqrt(2.0 * pi));
}

double moser_l2_from_log(double log_n) {
  const double inv_n_sq = std::exp(-2.0 * log_n);
  return (0.25 - 0.25 * inv_n_sq - 0.5 * log_n * inv_n_sq) / log_n;
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::moser: return "moser";
    case Family::counterexample: return "counterexample";
    case Family::alvino_extremal: return "alvino";
    case Family::cap: return "cap";
    case Family::zygmund_optimal: return "zygmund";
    case Family::modified_moser: return "modified-moser";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : {Family::moser, Family::counterexample, Family::alvino_extremal, Family::cap,
                   Family::zygmund_optimal, Family::modified_moser}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

void SequenceSpec::validate() const {
  switch (family) {
    case Family::moser:
    case Family::modified_moser:
      require(n >= 2.0 && std::isfinite(n), "n must be >= 2");
      break;
    case Family::counterexample:
      require(n >= 3.0 && std::isfinite(n), "n must be >= 3");
      break;
    case Family::alvino_extremal:
      require(T > 0.0 && std::isfinite(T), "T must be positive");
      require(delta > 1.0 && std::isfinite(delta), "delta must exceed 1");
      break;
    case Family::cap:
      require(R > 0.0 && std::isfinite(R), "R must be positive");
      [[fallthrough]];
    case Family::zygmund_optimal:
      require(k >= 1.0 && std::isfinite(k), "k must be >= 1");
      break;
  }
}

RadialProfile moser(double n) {
  require(n >= 2.0 && std::isfinite(n), "moser: n must be >= 2");
  return moser_from_log(std::log(n));
}

CounterexampleScales counterexample_scales(double log_n) {
  require(log_n > 1.0 && std::isfinite(log_n), "counterexample: need log n > 1");
  const double loglog = std::log(log_n);
  return CounterexampleScales{log_n, 1.0 - loglog / (4.0 * log_n), log_n / (loglog * loglog)};
}

RadialProfile counterexample_from_log(double log_n) {
  const CounterexampleScales sc = counterexample_scales(log_n);
  const RadialProfile dilated = scale_dilate(moser_from_log(log_n), 1.0 / std::sqrt(sc.radius_sq));
  return scale_amplitude(dilated, std::sqrt(sc.lambda_sq));
}

RadialProfile counterexample(double n) {
  require(n >= 3.0 && std::isfinite(n), "counterexample: n must be >= 3");
  return counterexample_from_log(std::log(n));
}

RadialProfile alvino_extremal(double T, double delta) {
  require(T > 0.0 && std::isfinite(T), "alvino_extremal: T must be positive");
  require(delta > 1.0 && std::isfinite(delta), "alvino_extremal: delta must exceed 1");
  const double log_delta = std::log(delta);
  return ramp(T, 2.0 * log_delta, std::sqrt(log_delta) / std::sqrt(2.0 * pi));
}

RadialProfile cap(double k, double R) {
  require(k >= 1.0 && std::isfinite(k), "cap: k must be >= 1");
  require(R > 0.0 && std::isfinite(R), "cap: R must be positive");
  return ramp(pi * R * R, k, std::sqrt(k) / std::sqrt(four_pi));
}

RadialProfile zygmund_optimal(double k) { return cap(k, 1.0); }

RadialProfile modified_moser(double n) {
  const RadialProfile w = moser(n);
  return scale_amplitude(w, 1.0 - std::sqrt(l2_norm_sq(w)));
}

RadialProfile build(const SequenceSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::moser: return moser(spec.n);
    case Family::counterexample: return counterexample(spec.n);
    case Family::alvino_extremal: return alvino_extremal(spec.T, spec.delta);
    case Family::cap: return cap(spec.k, spec.R);
    case Family::zygmund_optimal: return zygmund_optimal(spec.k);
    case Family::modified_moser: return modified_moser(spec.n);
  }
  throw error(errc::domain_error, "unknown family");
}

double moser_l2_sq(double n) { return moser_l2_from_log(std::log(n)); }

double zygmund_l2_sq(double k) {
  const double e = std::exp(-k);
  return 0.5 * (1.0 / k - e - e / k);
}

double counterexample_lower_bound(double log_n) {
  const CounterexampleScales sc = counterexample_scales(log_n);
  return pi * sc.radius_sq * (1.0 / std::sqrt(log_n) - std::exp(-2.0 * log_n));
}

ClosedForm closed_form(const SequenceSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::moser:
      return {1.0, moser_l2_sq(spec.n)};
    case Family::counterexample: {
      const CounterexampleScales sc = counterexample_scales(std::log(spec.n));
      return {sc.lambda_sq, sc.lambda_sq * sc.radius_sq * moser_l2_sq(spec.n)};
    }
    case Family::alvino_extremal:
      // u_{R,delta} is w_delta dilated from the unit disk to measure T
      return {1.0, spec.T / pi * moser_l2_sq(spec.delta)};
    case Family::cap:
      return {1.0, spec.R * spec.R * zygmund_l2_sq(spec.k)};
    case Family::zygmund_optimal:
      return {1.0, zygmund_l2_sq(spec.k)};
    case Family::modified_moser: {
      const double w_sq = moser_l2_sq(spec.n);
      const double factor = 1.0 - std::sqrt(w_sq);
      return {factor * factor, factor * factor * w_sq};
    }
  }
  throw error(errc::domain_error, "unknown family");
}

}  // namespace moser
