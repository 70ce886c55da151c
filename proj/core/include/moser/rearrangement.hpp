#pragma once

// Distribution functions and decreasing rearrangements of sampled data.
// A sample is a cell of measure `area` on which |u| takes the value `value`;
// nothing about the cells' shapes is used, only their measures.

#include <span>
#include <vector>

#include "moser/profile.hpp"

namespace moser {

struct WeightedSamples {
  std::vector<double> values;  // nonnegative
  std::vector<double> areas;   // positive

  /// Throws error(domain_error) on length mismatch, negative values,
  /// nonpositive areas, non-finite entries or an infinite total area.
  void validate() const;
  double total_area() const;
};

/// mu(s) = total area of cells with value > s.
double distribution(const WeightedSamples& w, double s);
/// mu(y) = |{t : u*(t) > y}| read off a profile.
double distribution(const RadialProfile& p, double y);

/// Step profile u*: cells sorted by value, equal values merged into one
/// step, steps stored as jump knots. An all-zero input gives the zero profile.
RadialProfile decreasing_rearrangement(const WeightedSamples& w);

/// u**(t) = (1/t) * integral_0^t u*(tau) d tau, exact. Requires t > 0.
double maximal_function(const RadialProfile& p, double t);

/// Finite-difference Dirichlet energy of consecutive annuli, innermost first.
/// Cell j occupies measures (B_{j-1}, B_j]; its value sits at the middle of
/// that range in the s coordinate and the energy is
/// 4 pi * sum (v_{j+1} - v_j)^2 / (s_j - s_{j+1}).
double annular_energy(std::span<const double> values, std::span<const double> areas);

}  // namespace moser
