#pragma once

// Derivative-free maximization of J_beta over continuous radial profiles
// under the norm budgets of the reduced, Ruf and norm-sum problems, plus the
// blow-up and vanishing scans that bracket those maxima.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moser/profile.hpp"

namespace moser {

enum class ConstraintKind { reduced, ruf, norm_sum };

struct ConstraintSet {
  ConstraintKind kind = ConstraintKind::reduced;
  double delta = 0.0;  // reduced: ||grad u||_2 <= 1 - delta
  double K = 1.0;      // reduced: ||u||_2 <= K
  double tau = 1.0;    // ruf: ||grad u||^2 + tau ||u||^2 <= 1

  static ConstraintSet reduced(double delta, double K);
  static ConstraintSet ruf(double tau = 1.0);
  static ConstraintSet norm_sum();

  void validate() const;  // throws error(domain_error)

  /// Named residuals (value - limit); feasible iff all are <= 0.
  std::vector<std::pair<std::string, double>> residuals(double dirichlet_sq, double l2_sq) const;
  bool feasible(double dirichlet_sq, double l2_sq, double tol = 1e-9) const;
  /// Largest a with a u feasible, given the norms of u. Requires u != 0.
  double max_amplitude(double dirichlet_sq, double l2_sq) const;
  /// sup of beta ||u||_2^2 over the set, the level reached by vanishing sequences:
  /// beta K^2 (reduced), beta / tau (ruf), beta (norm-sum).
  double vanishing_level(double beta) const;
};

std::string_view constraint_name(ConstraintKind k) noexcept;

struct OptimizationOptions {
  std::size_t knots = 32;         // >= 4
  std::size_t budget = 100000;    // functional evaluations
  std::uint64_t seed = 0;
  double search_tol = 1e-8;       // quadrature tolerance while searching
  double final_tol = default_tolerance;
};

struct StartValue {
  std::string name;
  double value = 0.0;
};

struct OptimizationResult {
  RadialProfile best_profile = RadialProfile::zero();
  double best_value = 0.0;
  double vanishing_level_value = 0.0;
  std::vector<std::pair<std::string, double>> feasibility_residuals;
  std::vector<double> objective_trace;  // incumbent after every improvement
  std::vector<StartValue> starts;       // seeded family starts, projected
  std::string best_start;
  std::uint64_t seed = 0;
  std::size_t evaluations = 0;
  double wall_time = 0.0;  // seconds; excluded from determinism
};

/// Multi-start projected coordinate ascent. The state is (log T, log knot
/// gaps, knot values); a candidate is projected by isotonic regression of
/// the values followed by an amplitude rescale onto the constraint
/// boundary, where J is largest along each ray. Deterministic per seed.
///
/// For the reduced set requires beta < 4 pi / (1 - delta)^2.
OptimizationResult maximize(const ConstraintSet& c, double beta, const OptimizationOptions& opt = {});

/// Nondecreasing least-squares fit (pool adjacent violators), clipped at 0.
std::vector<double> isotonic_nonnegative(std::vector<double> v);

struct BlowupRow {
  double beta = 0.0;
  double n = 0.0;
  double j_beta = 0.0;       // +inf if it overflows a double
  double lower_bound = 0.0;  // inner-disk contribution
};

/// Counterexample u_n scaled to ||grad u||_2 = (1 - delta) lambda_n and,
/// if needed, dilated to ||u||_2 <= K.
RadialProfile blowup_profile(double delta, double K, double n);

std::vector<BlowupRow> blowup_scan(double delta, double K, const std::vector<double>& betas,
                                   const std::vector<double>& ns, double tol = 1e-8);

struct VanishingRow {
  double lambda = 0.0;
  double j_beta = 0.0;
  double level = 0.0;      // beta K^2
  double remainder = 0.0;  // integral of P(u_lambda)
  double gap = 0.0;        // |J - level|
};

/// Bump phi with ||grad phi||_2 = 1 - delta and ||phi||_2 = K (a dilated cap).
RadialProfile vanishing_bump(const ConstraintSet& c);

/// Rows for u_lambda = lambda phi(lambda x), which keeps ||u||_2 = K while
/// ||grad u||_2 -> 0. Requires a reduced constraint set.
std::vector<VanishingRow> vanishing_probe(const ConstraintSet& c, double beta,
                                          const std::vector<double>& lambdas,
                                          double tol = default_tolerance);

}  // namespace moser
