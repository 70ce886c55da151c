#include "moser/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "moser/error.hpp"
#include "moser/integration.hpp"

namespace moser {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw error(errc::domain_error, what);
}

double value_on_piece(const Piece& piece, double s) {
  return piece.start_value + piece.slope() * (s - piece.begin);
}

struct Best {
  double ratio = 0.0;
  double s = 0.0;

  void offer(double r, double at) {
    if (r > ratio) {
      ratio = r;
      s = at;
    }
  }
};

// sup of num(s) / sqrt(sigma(s)) over one piece, where num and sigma are
// affine with num' >= 0 and sigma' = 1. Writing the ratio as
// a sigma^{-1/2} + b sigma^{1/2} with b >= 0, any interior critical point is
// a minimum, so only the two ends matter.
void offer_sqrt_ratio(Best& best, double lo, double hi, double num_lo, double num_hi,
                      double sigma_lo, double sigma_hi) {
  if (sigma_lo <= 0.0) {
    if (num_lo > 0.0) best.offer(inf, lo);
  } else {
    best.offer(num_lo / std::sqrt(sigma_lo), lo);
  }
  if (std::isfinite(hi)) best.offer(num_hi / std::sqrt(sigma_hi), hi);
}

}  // namespace

InequalityReport compare(double lhs, double rhs, double witness_t,
                         std::optional<double> witness_window) {
  InequalityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.witness_t = witness_t;
  r.witness_window = witness_window;
  if (std::isinf(rhs)) {
    r.slack = inf;
    r.holds = true;
  } else {
    r.slack = rhs - lhs;
    r.holds = r.slack >= -holds_tolerance * std::max(1.0, std::abs(rhs));
  }
  return r;
}

InequalityReport alvino_ratio_sup(const RadialProfile& p, double T) {
  require(T > 0.0 && std::isfinite(T), "alvino_ratio_sup: T must be positive");
  const double s_T = p.log_coordinate(T);
  const double c = T >= p.t_support() ? 0.0 : p.value_at(s_T);

  Best best;
  best.s = std::max(s_T, 0.0);
  for (const Piece& piece : p.pieces()) {
    if (piece.end <= s_T) continue;
    const double lo = std::max(piece.begin, s_T);
    const double hi = piece.end;
    // U is continuous inside a piece; only a piece starting at s_T can jump there
    const double num_lo = lo > piece.begin && lo == s_T ? 0.0 : value_on_piece(piece, lo) - c;
    const double num_hi = piece.end_value - c;
    offer_sqrt_ratio(best, lo, hi, num_lo, num_hi, lo - s_T, hi - s_T);
  }
  const double rhs = std::sqrt(dirichlet_norm_sq(p) / four_pi);
  return compare(best.ratio, rhs, p.measure(best.s), T);
}

QuasiNorm zygmund_quasinorm(const RadialProfile& p) {
  const double s4 = p.log_coordinate(four_pi);  // t = 4 pi
  Best best;
  best.s = std::max(s4, 0.0);
  for (const Piece& piece : p.pieces()) {
    // t <= 4 pi: window T = 4 pi, weight 1 + log(4 pi / t) = 1 + s - s4
    if (piece.end > s4) {
      const double lo = std::max(piece.begin, s4);
      offer_sqrt_ratio(best, lo, piece.end, value_on_piece(piece, lo), piece.end_value,
                       1.0 + lo - s4, 1.0 + piece.end - s4);
    }
    // t > 4 pi: window T = t, weight 4 pi / t = e^{s - s4}
    if (piece.begin < s4) {
      const double lo = piece.begin;
      const double hi = std::min(piece.end, s4);
      auto ratio = [&](double s) { return value_on_piece(piece, s) * std::exp(-0.5 * (s - s4)); };
      best.offer(ratio(lo), lo);
      best.offer(ratio(hi), hi);
      const double m = piece.slope();
      if (m > 0.0) {
        // d/ds [U e^{-s/2}] = 0 at U = 2 m; a maximum since U' = m is constant
        const double s_star = piece.begin + 2.0 - piece.start_value / m;
        if (s_star > lo && s_star < hi) best.offer(ratio(s_star), s_star);
      }
    }
  }
  const double t = p.measure(best.s);
  return QuasiNorm{best.ratio, std::max(four_pi, t), t};
}

InequalityReport check_limine(const RadialProfile& p) {
  const QuasiNorm z = zygmund_quasinorm(p);
  const double rhs = std::sqrt(sobolev_norm_sq(p) / four_pi);
  return compare(z.value, rhs, z.t, z.window);
}

double adachi_ratio(const RadialProfile& p, double beta, double tol) {
  require(beta > 0.0 && beta < four_pi, "adachi_ratio: beta must lie in (0, 4 pi)");
  if (p.is_zero()) throw error(errc::precondition, "adachi_ratio: zero profile");
  if (!(dirichlet_norm_sq(p) <= 1.0 + 1e-12)) {
    throw error(errc::precondition, "adachi_ratio: needs ||grad u||_2 <= 1");
  }
  return tm_functional(p, beta, tol).j_beta / l2_norm_sq(p);
}

double at_constant_eps(double beta, double eps) {
  require(beta > 0.0 && beta < four_pi, "at_constant_eps: beta must lie in (0, 4 pi)");
  const double b = beta / four_pi;
  require(eps > 0.0 && eps < 1.0 / b - 1.0, "at_constant_eps: eps must lie in (0, 4 pi/beta - 1)");
  const double second = std::exp(b / eps) / (1.0 - b * (1.0 + eps));
  return four_pi * std::exp(b) * std::max(b, second);
}

double best_eps(double beta) {
  require(beta > 0.0 && beta < four_pi, "best_eps: beta must lie in (0, 4 pi)");
  return 1.0 - beta / four_pi;
}

double at_constant_asymptotic(double beta) {
  const double gap = best_eps(beta);
  return std::exp(1.0 / gap) / (gap * gap);
}

double vanishing_level(double beta, double K) {
  require(beta > 0.0 && std::isfinite(beta), "vanishing_level: beta must be positive");
  require(K >= 0.0 && std::isfinite(K), "vanishing_level: K must be nonnegative");
  return beta * K * K;
}

double at_quadratic_k_sq(double beta) {
  require(beta > 0.0 && beta < four_pi, "at_quadratic_bound: beta must lie in (0, 4 pi)");
  return 0.25 * (1.0 - beta / four_pi);
}

bool at_quadratic_k_admissible(double beta) {
  const double k_sq = at_quadratic_k_sq(beta);
  return (1.0 + k_sq) * beta / four_pi <= 1.0 - k_sq && k_sq < 1.0;
}

double at_quadratic_bound(double beta) {
  const double k_sq = at_quadratic_k_sq(beta);
  return std::exp(four_pi) * (1.0 + four_pi) / (k_sq * k_sq);
}

double remainder_functional(const RadialProfile& p, double beta, double tol) {
  require(beta > 0.0 && std::isfinite(beta), "remainder_functional: beta must be positive");
  require(tol > 0.0 && tol <= 1e-6, "tol must lie in (0, 1e-6]");
  return detail::integrate_growth(p, beta, detail::Growth::remainder, tol).value;
}

ZcharactBound zcharact_bound(const RadialProfile& p, double lambda, double tol) {
  require(lambda > 0.0 && std::isfinite(lambda), "zcharact_bound: lambda must be positive");
  const double K = tm_functional(p, lambda, tol).j_beta;
  return ZcharactBound{K, std::max(1.0, std::sqrt(K / four_pi)) / std::sqrt(lambda)};
}

}  // namespace moser
