#include "moser/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "moser/error.hpp"
#include "moser/integration.hpp"

namespace moser {

void WeightedSamples::validate() const {
  if (values.size() != areas.size()) {
    throw error(errc::domain_error, "values and areas must have equal lengths");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(std::isfinite(values[i]) && values[i] >= 0.0)) {
      throw error(errc::domain_error, "sample values must be finite and nonnegative");
    }
    if (!(std::isfinite(areas[i]) && areas[i] > 0.0)) {
      throw error(errc::domain_error, "sample areas must be finite and positive");
    }
  }
  if (!std::isfinite(total_area())) throw error(errc::domain_error, "total area must be finite");
}

double WeightedSamples::total_area() const {
  return std::accumulate(areas.begin(), areas.end(), 0.0);
}

double distribution(const WeightedSamples& w, double s) {
  w.validate();
  double mu = 0.0;
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (w.values[i] > s) mu += w.areas[i];
  }
  return mu;
}

double distribution(const RadialProfile& p, double y) {
  if (y < 0.0) return std::numeric_limits<double>::infinity();
  for (const Piece& piece : p.pieces()) {
    if (piece.start_value > y) return p.measure(piece.begin);
    if (piece.end_value > y) {
      return p.measure(piece.begin + (y - piece.start_value) / piece.slope());
    }
  }
  return 0.0;
}

RadialProfile decreasing_rearrangement(const WeightedSamples& w) {
  w.validate();
  std::vector<std::size_t> order(w.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return w.values[a] > w.values[b]; });

  // steps[j] = (value, cumulative area of all cells with value >= it)
  std::vector<std::pair<double, double>> steps;
  double cumulative = 0.0;
  for (std::size_t idx : order) {
    const double v = w.values[idx];
    if (v == 0.0) break;
    cumulative += w.areas[idx];
    if (!steps.empty() && steps.back().first == v) {
      steps.back().second = cumulative;
    } else {
      steps.emplace_back(v, cumulative);
    }
  }
  if (steps.empty()) {
    const double total = w.total_area();
    return RadialProfile::zero(total > 0.0 ? total : 1.0);
  }

  const double support = steps.back().second;
  std::vector<Knot> knots;
  knots.reserve(steps.size());
  knots.push_back(Knot{0.0, steps.back().first, KnotKind::linear});
  for (std::size_t j = steps.size() - 1; j-- > 0;) {
    knots.push_back(Knot{std::log(support / steps[j].second), steps[j].first, KnotKind::jump});
  }
  return RadialProfile(support, std::move(knots));
}

double maximal_function(const RadialProfile& p, double t) {
  if (!(t > 0.0)) throw error(errc::domain_error, "maximal function needs t > 0");
  const double T = p.t_support();
  if (t >= T) return T / t * detail::first_moment_tail(p, 0.0);
  return T / t * detail::first_moment_tail(p, p.log_coordinate(t));
}

double annular_energy(std::span<const double> values, std::span<const double> areas) {
  if (values.size() != areas.size()) {
    throw error(errc::domain_error, "values and areas must have equal lengths");
  }
  if (values.size() < 2) return 0.0;
  const double total = std::accumulate(areas.begin(), areas.end(), 0.0);
  std::vector<double> centers(values.size());
  double inner = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double mid = inner + 0.5 * areas[j];
    centers[j] = std::log(total / mid);
    inner += areas[j];
  }
  double energy = 0.0;
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    const double dv = values[j + 1] - values[j];
    energy += dv * dv / (centers[j] - centers[j + 1]);
  }
  return four_pi * energy;
}

}  // namespace moser
