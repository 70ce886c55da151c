#pragma once

// Explicit extremal and counterexample families, each with closed-form
// values of its norms that do not go through the profile integrals.

#include <optional>
#include <string>
#include <string_view>

#include "moser/profile.hpp"

namespace moser {

enum class Family { moser, counterexample, alvino_extremal, cap, zygmund_optimal, modified_moser };

/// CLI-facing names: "moser", "counterexample", "alvino", "cap", "zygmund", "modified-moser".
std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// A named family member. Only the parameters the family uses are read:
///   moser, modified_moser: n >= 2      counterexample: n >= 3
///   alvino_extremal: T > 0, delta > 1  cap: k >= 1, R > 0
///   zygmund_optimal: k >= 1
struct SequenceSpec {
  Family family = Family::moser;
  double n = 10.0;
  double k = 1.0;
  double R = 1.0;
  double T = pi;
  double delta = 2.718281828459045;

  void validate() const;  // throws error(domain_error)
};

/// w_n: log(1/|x|)/sqrt(2 pi log n) on 1/n < |x| <= 1, capped at sqrt(log n / 2 pi).
RadialProfile moser(double n);

/// u_n = lambda_n w_n(x / R_n), R_n = sqrt(log n)/log log n,
/// lambda_n^2 = 1 - log log n / (4 log n). Needs n >= 3.
RadialProfile counterexample(double n);
/// Same family parametrized by L = log n (> 1), for n far beyond double range.
RadialProfile counterexample_from_log(double log_n);

struct CounterexampleScales {
  double log_n;
  double lambda_sq;  // lambda_n^2
  double radius_sq;  // R_n^2
};
CounterexampleScales counterexample_scales(double log_n);

/// u_{R,delta} with pi R^2 = T: linear in s up to sqrt(log delta / 2 pi) at s = 2 log delta.
RadialProfile alvino_extremal(double T, double delta);

/// Moser cap w_k(s)/sqrt(4 pi) on the ball of radius R: reaches sqrt(k / 4 pi) at s = k.
RadialProfile cap(double k, double R);

/// cap(k, 1), the optimality sequence for the Zygmund-type inequality.
RadialProfile zygmund_optimal(double k);

/// (1 - ||w_n||_2) w_n.
RadialProfile modified_moser(double n);

RadialProfile build(const SequenceSpec& spec);

/// Closed-form ||grad u||_2^2 and ||u||_2^2 of a family member.
struct ClosedForm {
  double dirichlet_sq;
  double l2_sq;
};
ClosedForm closed_form(const SequenceSpec& spec);

/// (1/log n)(1/4 - 1/(4 n^2) - log n/(2 n^2))
double moser_l2_sq(double n);
/// 1/2 (1/k - e^{-k} - e^{-k}/k)
double zygmund_l2_sq(double k);
/// Lower bound pi R_n^2 (1/sqrt(log n) - 1/n^2) for J_{4 pi}(u_n), from the inner disk alone.
double counterexample_lower_bound(double log_n);

}  // namespace moser
