#include "moser/integration.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "moser/error.hpp"

namespace moser::detail {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr std::size_t max_intervals = 60000;
// Target change of the exponent beta U^2 - s across one initial subinterval.
constexpr double exponent_step = 4.0;

struct Interval {
  double left = 0.0;
  double right = 0.0;
  double value = 0.0;
  double error = 0.0;
  std::size_t integrand = 0;

  friend bool operator<(const Interval& a, const Interval& b) { return a.error < b.error; }
};

// One 15-point Kronrod / 7-point Gauss panel. The panel is mapped onto
// [-1, 1] here so that value and error estimate share the same scale.
template <class F>
Interval kronrod_panel(const F& f, double left, double right, std::size_t index) {
  using boost::math::quadrature::gauss_kronrod;
  const double mid = 0.5 * (left + right);
  const double half = 0.5 * (right - left);
  auto mapped = [&](double x) { return half * f(mid + half * x); };
  double err = 0.0;
  const double value = gauss_kronrod<double, 15>::integrate(mapped, -1.0, 1.0, 0, 0.0, &err);
  return Interval{left, right, value, err, index};
}

// phi(beta U(s)^2) e^{-s} / e^{top} on one affine piece
struct AffineIntegrand {
  double begin;
  double end;
  double start;
  double slope;
  double beta;
  double top;
  Growth growth;

  double value_at(double s) const { return start + slope * (s - begin); }
  double exponent(double s) const {
    const double u = value_at(s);
    return beta * u * u - s;
  }
  double operator()(double s) const;
};

double remainder_series(double x) {
  // e^x - 1 - x = sum_{k>=2} x^k / k!, used where the closed form cancels
  double term = 0.5 * x * x;
  double sum = term;
  for (int k = 3; k < 60 && term > 1e-18 * sum; ++k) {
    term *= x / k;
    sum += term;
  }
  return sum;
}

double exp_moment_series(int k, double h) {
  // sum_j (-1)^j h^{k+1+j} / (j! (k+1+j)), converges fast for h < 1
  double power = std::pow(h, k + 1);
  double sum = 0.0;
  double factorial = 1.0;
  for (int j = 0; j < 40; ++j) {
    const double term = power / (factorial * (k + 1 + j));
    sum += (j % 2 == 0) ? term : -term;
    if (term < 1e-18 * std::abs(sum)) break;
    power *= h;
    factorial *= (j + 1);
  }
  return sum;
}

double AffineIntegrand::operator()(double s) const {
  const double u = value_at(s);
  return std::exp(log_growth(growth, beta * u * u) - s - top);
}

}  // namespace

double log_growth(Growth g, double x) {
  if (!(x > 0.0)) return -inf;
  switch (g) {
    case Growth::exp_minus_one:
      return x + std::log(-std::expm1(-x));
    case Growth::remainder:
      if (x < 1.0) return std::log(remainder_series(x));
      return x + std::log1p(-(1.0 + x) * std::exp(-x));
  }
  return -inf;
}

double exp_moment(int k, double h) {
  if (k < 0 || k > 2) throw error(errc::domain_error, "exp_moment supports k in {0,1,2}");
  if (!(h > 0.0)) return 0.0;
  if (std::isinf(h)) return k == 2 ? 2.0 : 1.0;
  if (h < 1.0) return exp_moment_series(k, h);
  const double e = std::exp(-h);
  switch (k) {
    case 0: return -std::expm1(-h);
    case 1: return 1.0 - e * (1.0 + h);
    default: return 2.0 - e * (h * h + 2.0 * h + 2.0);
  }
}

double first_moment_tail(const RadialProfile& p, double s0) {
  const double from = std::max(s0, 0.0);
  double sum = 0.0;
  for (const Piece& piece : p.pieces()) {
    if (piece.end <= from) continue;
    const double begin = std::max(piece.begin, from);
    const double m = piece.slope();
    const double start = piece.start_value + m * (begin - piece.begin);
    const double weight = std::exp(-begin);
    if (piece.is_plateau()) {
      sum += start * weight;
      continue;
    }
    const double h = piece.end - begin;
    sum += weight * (start * exp_moment(0, h) + m * exp_moment(1, h));
  }
  return sum;
}

Integral integrate_growth(const RadialProfile& p, double beta, Growth g, double tol) {
  if (p.is_zero()) return {};
  const std::vector<Piece> pieces = p.pieces();

  // Largest exponent beta U^2 - s. It is convex on each piece, so endpoints suffice.
  double top = -inf;
  std::size_t top_knot = 0;
  for (const Piece& piece : pieces) {
    const double at_begin = beta * piece.start_value * piece.start_value - piece.begin;
    if (at_begin > top) {
      top = at_begin;
      top_knot = piece.knot;
    }
    if (!piece.is_plateau() && !piece.is_constant()) {
      const double at_end = beta * piece.end_value * piece.end_value - piece.end;
      if (at_end > top) {
        top = at_end;
        top_knot = piece.knot + 1;
      }
    }
  }

  double closed_form = 0.0;
  std::vector<AffineIntegrand> integrands;
  for (const Piece& piece : pieces) {
    if (piece.is_plateau() || piece.is_constant()) {
      const double lg = log_growth(g, beta * piece.start_value * piece.start_value);
      if (std::isinf(lg)) continue;
      const double mass = piece.is_plateau() ? 1.0 : -std::expm1(-piece.length());
      closed_form += std::exp(lg - piece.begin - top) * mass;
    } else {
      integrands.push_back(
          AffineIntegrand{piece.begin, piece.end, piece.start_value, piece.slope(), beta, top, g});
    }
  }

  std::priority_queue<Interval> work;
  double total = 0.0;
  double total_error = 0.0;
  for (std::size_t i = 0; i < integrands.size(); ++i) {
    const AffineIntegrand& f = integrands[i];
    // split at the vertex of the exponent, then into panels of bounded variation
    std::vector<double> cuts{f.begin};
    const double vertex = f.begin + (1.0 / (2.0 * beta * f.slope) - f.start) / f.slope;
    if (vertex > f.begin && vertex < f.end) cuts.push_back(vertex);
    cuts.push_back(f.end);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double l = cuts[c];
      const double r = cuts[c + 1];
      const double variation = std::abs(f.exponent(r) - f.exponent(l));
      const auto panels = static_cast<std::size_t>(std::clamp(
          std::ceil(std::max(variation / exponent_step, (r - l) / 16.0)), 1.0, 2048.0));
      const double width = (r - l) / static_cast<double>(panels);
      for (std::size_t k = 0; k < panels; ++k) {
        const double pl = l + width * static_cast<double>(k);
        const double pr = (k + 1 == panels) ? r : pl + width;
        Interval iv = kronrod_panel(f, pl, pr, i);
        total += iv.value;
        total_error += iv.error;
        work.push(iv);
      }
    }
  }

  // global adaptive refinement, worst panel first
  while (!work.empty() && total_error > 0.25 * tol * (total + closed_form) &&
         work.size() < max_intervals) {
    const Interval worst = work.top();
    if (worst.error <= 4.0 * DBL_EPSILON * std::abs(worst.value)) break;
    work.pop();
    const AffineIntegrand& f = integrands[worst.integrand];
    const double mid = 0.5 * (worst.left + worst.right);
    const Interval lo = kronrod_panel(f, worst.left, mid, worst.integrand);
    const Interval hi = kronrod_panel(f, mid, worst.right, worst.integrand);
    total += lo.value + hi.value - worst.value;
    total_error += lo.error + hi.error - worst.error;
    work.push(lo);
    work.push(hi);
  }
  // re-sum to shed the drift of the running totals
  total = 0.0;
  total_error = 0.0;
  while (!work.empty()) {
    total += work.top().value;
    total_error += work.top().error;
    work.pop();
  }

  const double scaled = total + closed_form;
  if (!(scaled > 0.0)) return {0.0, 0.0};
  const double log_scale = std::log(p.t_support()) + top;
  const double log_value = log_scale + std::log(scaled);
  if (log_value >= std::log(DBL_MAX)) {
    throw error(errc::value_overflow,
                "integral exceeds double range (log J = " + std::to_string(log_value) + ")",
                top_knot);
  }
  return Integral{std::exp(log_value), std::exp(log_scale) * total_error};
}

}  // namespace moser::detail
