#pragma once

// Radial nonincreasing functions on the plane, stored through their
// decreasing rearrangement u*(t) in the log-measure coordinate
//
//     s = log(T / t),   T = |{u != 0}|,   U(s) = u*(T e^{-s}),
//
// where t = pi |x|^2 recovers the radial function u(x) = u*(pi |x|^2).
// All of the explicit Moser-type families are piecewise linear in s, so
// Dirichlet and L^2 norms are exact sums and only the exponential
// functional needs quadrature.

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace moser {

inline constexpr double pi = std::numbers::pi;
inline constexpr double four_pi = 4.0 * std::numbers::pi;

/// How the profile arrives at a knot from the previous one.
///   linear: U is affine between the two knots.
///   jump:   U holds the previous value and steps up to v right after s.
enum class KnotKind : std::uint8_t { linear, jump };

struct Knot {
  double s = 0.0;
  double v = 0.0;
  KnotKind kind = KnotKind::linear;

  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Maximal interval on which U is affine. `end` is +inf for the plateau.
struct Piece {
  double begin = 0.0;
  double end = 0.0;
  double start_value = 0.0;
  double end_value = 0.0;
  std::size_t knot = 0;  // knot the piece starts from

  double length() const noexcept { return end - begin; }
  bool is_plateau() const noexcept;
  bool is_constant() const noexcept { return start_value == end_value; }
  double slope() const noexcept;
};

class RadialProfile {
 public:
  /// Throws moser::error(invalid_profile) unless: t_support finite and > 0,
  /// s_0 = 0 and s strictly increasing, v finite, nonnegative and
  /// nondecreasing in s, and the first knot is not a jump.
  RadialProfile(double t_support, std::vector<Knot> knots);

  static RadialProfile zero(double t_support = 1.0);

  double t_support() const noexcept { return t_support_; }
  const std::vector<Knot>& knots() const noexcept { return knots_; }
  std::size_t size() const noexcept { return knots_.size(); }

  std::vector<Piece> pieces() const;

  /// U(s), left-continuous in s (so u* is right-continuous in t); 0 for s <= 0.
  double value_at(double s) const;
  /// u*(t) for t > 0; 0 for t >= t_support.
  double rearrangement(double t) const;
  /// Measure t = T e^{-s} of the superlevel region reached at coordinate s.
  double measure(double s) const;
  double log_coordinate(double t) const;

  double max_value() const noexcept { return knots_.back().v; }
  bool is_zero() const noexcept { return knots_.back().v == 0.0; }
  /// False when u has a jump, including a jump at the edge of its support.
  bool is_continuous() const noexcept;

  friend bool operator==(const RadialProfile&, const RadialProfile&) = default;

 private:
  double t_support_;
  std::vector<Knot> knots_;
};

/// Inserts knots at the given s positions without changing the function.
RadialProfile refine(const RadialProfile& p, std::span<const double> s_points);

/// ||grad u||_2^2 = 4 pi * integral (dU/ds)^2 ds. Exact; +inf if u jumps.
double dirichlet_norm_sq(const RadialProfile& p);
/// ||u||_2^2 = T * integral U(s)^2 e^{-s} ds, in closed form per piece.
double l2_norm_sq(const RadialProfile& p);
double sobolev_norm_sq(const RadialProfile& p, double tau = 1.0);

inline constexpr double default_tolerance = 1e-10;

struct FunctionalReport {
  double beta = 0.0;
  double j_beta = 0.0;
  double dirichlet_sq = 0.0;
  double l2_sq = 0.0;
  double quad_error = 0.0;  // absolute error estimate on j_beta

  /// ||grad u||^2 + tau ||u||^2
  double sobolev_sq(double tau = 1.0) const noexcept { return dirichlet_sq + tau * l2_sq; }
};

/// J_beta(u) = integral over R^2 of (exp(beta u^2) - 1).
///
/// Constant pieces and the plateau are integrated in closed form, affine
/// pieces by adaptive Gauss-Kronrod with relative tolerance `tol`.  The
/// integrand is assembled as exp(log-integrand - M) against the profile's
/// largest exponent M, so a single exp decides overflow; if J itself does
/// not fit in a double, throws error(value_overflow) naming the knot.
///
/// Requires beta > 0 and tol in (0, 1e-6].
FunctionalReport tm_functional(const RadialProfile& p, double beta, double tol = default_tolerance);

/// u -> a u. J_beta(a u) = J_{a^2 beta}(u).
RadialProfile scale_amplitude(const RadialProfile& p, double a);
/// u -> u(b .). The support measure becomes T / b^2; knots are unchanged.
RadialProfile scale_dilate(const RadialProfile& p, double b);

}  // namespace moser
