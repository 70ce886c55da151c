#pragma once

// Both sides of the Alvino-type, Zygmund-type and Adachi-Tanaka-type
// inequalities on a given profile, and the explicit constants.

#include <optional>

#include "moser/profile.hpp"

namespace moser {

/// Comparison lhs <= rhs. `holds` iff slack >= -1e-9 * max(1, |rhs|).
struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;
  double witness_t = 0.0;                // t attaining the sup on the left
  std::optional<double> witness_window;  // window T, for the two-level sup
};

inline constexpr double holds_tolerance = 1e-9;

InequalityReport compare(double lhs, double rhs, double witness_t,
                         std::optional<double> witness_window = std::nullopt);

/// sup_{0<t<=T} (u*(t) - u*(T)) / sqrt(log(T/t))  vs  ||grad u||_2 / sqrt(4 pi).
/// The left side is exact: on every affine piece of U the ratio has the form
/// (a + b sigma)/sqrt(sigma), whose sup is at an endpoint or at sigma = a/b.
InequalityReport alvino_ratio_sup(const RadialProfile& p, double T);

struct QuasiNorm {
  double value = 0.0;
  double window = 0.0;  // T
  double t = 0.0;
};

/// sup_{T>0} sup_{0<t<=T} u*(t) / sqrt(4 pi / T + log(T/t)).
///
/// For fixed t the window minimizing 4 pi/T + log T over T >= t is T = 4 pi
/// when t <= 4 pi and T = t otherwise, which leaves a one-dimensional sup
/// over t evaluated piece by piece in closed form.
QuasiNorm zygmund_quasinorm(const RadialProfile& p);

/// zygmund_quasinorm(p)  vs  sqrt(||grad u||^2 + ||u||^2) / sqrt(4 pi).
InequalityReport check_limine(const RadialProfile& p);

/// J_beta(u) / ||u||_2^2 for beta in (0, 4 pi); requires ||grad u||_2 <= 1 and u != 0.
double adachi_ratio(const RadialProfile& p, double beta, double tol = default_tolerance);

/// 4 pi e^{beta/4pi} max{beta/4pi, e^{beta/(4 pi eps)} / (1 - (beta/4pi)(1+eps))},
/// for 0 < eps < 4 pi/beta - 1.
double at_constant_eps(double beta, double eps);
/// The minimizing eps = 1 - beta/(4 pi).
double best_eps(double beta);
/// e^{1/(1-beta/4pi)} / (1-beta/4pi)^2, the growth rate of at_constant_eps at best_eps.
double at_constant_asymptotic(double beta);

/// beta K^2: limit of J_beta along normalized vanishing sequences.
double vanishing_level(double beta, double K);

/// K^2 = (1 - beta/4pi)/4, the L^2 level used for the explicit quadratic bound.
double at_quadratic_k_sq(double beta);
/// Whether (1 + K^2) beta/4pi <= 1 - K^2 and K < 1 for that K.
bool at_quadratic_k_admissible(double beta);
/// e^{4 pi}(1 + 4 pi)/K^4 = 16 e^{4 pi}(1 + 4 pi)/(1 - beta/4pi)^2 for beta in (0, 4 pi).
double at_quadratic_bound(double beta);

/// integral of e^{beta u^2} - 1 - beta u^2, integrated directly (no cancellation).
double remainder_functional(const RadialProfile& p, double beta, double tol = default_tolerance);

struct ZcharactBound {
  double exp_integral = 0.0;  // K = J_lambda(u)
  double bound = 0.0;         // max{1, sqrt(K / 4 pi)} / sqrt(lambda)
};
ZcharactBound zcharact_bound(const RadialProfile& p, double lambda, double tol = default_tolerance);

}  // namespace moser
