#include "moser/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "moser/error.hpp"
#include "moser/integration.hpp"

namespace moser {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& what, std::size_t knot) {
  if (!ok) throw error(errc::invalid_profile, what, knot);
}

}  // namespace

bool Piece::is_plateau() const noexcept { return std::isinf(end); }

double Piece::slope() const noexcept {
  if (is_plateau() || is_constant()) return 0.0;
  return (end_value - start_value) / (end - begin);
}

RadialProfile::RadialProfile(double t_support, std::vector<Knot> knots)
    : t_support_(t_support), knots_(std::move(knots)) {
  if (!(std::isfinite(t_support_) && t_support_ > 0.0)) {
    throw error(errc::invalid_profile, "t_support must be finite and positive");
  }
  if (knots_.empty()) throw error(errc::invalid_profile, "profile needs at least one knot");
  require(knots_.front().s == 0.0, "first knot must sit at s = 0", 0);
  require(knots_.front().kind == KnotKind::linear, "first knot cannot be a jump", 0);
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const Knot& k = knots_[i];
    require(std::isfinite(k.s) && std::isfinite(k.v), "knot coordinates must be finite", i);
    require(k.v >= 0.0, "knot values must be nonnegative", i);
    if (i > 0) {
      // zero-length segments are not representable; steps use KnotKind::jump
      require(k.s > knots_[i - 1].s, "s must be strictly increasing", i);
      require(k.v >= knots_[i - 1].v, "values must be nondecreasing in s", i);
    }
  }
}

RadialProfile RadialProfile::zero(double t_support) {
  return RadialProfile(t_support, {Knot{0.0, 0.0, KnotKind::linear}});
}

std::vector<Piece> RadialProfile::pieces() const {
  std::vector<Piece> out;
  out.reserve(knots_.size());
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    const Knot& a = knots_[i];
    const Knot& b = knots_[i + 1];
    const double end_value = b.kind == KnotKind::linear ? b.v : a.v;
    out.push_back(Piece{a.s, b.s, a.v, end_value, i});
  }
  const Knot& last = knots_.back();
  out.push_back(Piece{last.s, inf, last.v, last.v, knots_.size() - 1});
  return out;
}

double RadialProfile::value_at(double s) const {
  if (!(s > 0.0)) return 0.0;
  // first knot with knot.s >= s
  auto it = std::lower_bound(knots_.begin(), knots_.end(), s,
                             [](const Knot& k, double x) { return k.s < x; });
  if (it == knots_.end()) return knots_.back().v;
  if (it->s == s && it->kind == KnotKind::linear) return it->v;
  const Knot& prev = *(it - 1);
  if (it->kind == KnotKind::jump) return prev.v;
  const double w = (s - prev.s) / (it->s - prev.s);
  return prev.v + w * (it->v - prev.v);
}

double RadialProfile::rearrangement(double t) const {
  if (!(t > 0.0)) throw error(errc::domain_error, "u*(t) needs t > 0");
  if (t >= t_support_) return 0.0;
  return value_at(log_coordinate(t));
}

double RadialProfile::measure(double s) const { return t_support_ * std::exp(-s); }

double RadialProfile::log_coordinate(double t) const { return std::log(t_support_ / t); }

bool RadialProfile::is_continuous() const noexcept {
  if (knots_.front().v != 0.0) return false;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (knots_[i].kind == KnotKind::jump && knots_[i].v != knots_[i - 1].v) return false;
  }
  return true;
}

RadialProfile refine(const RadialProfile& p, std::span<const double> s_points) {
  std::vector<double> extra(s_points.begin(), s_points.end());
  std::sort(extra.begin(), extra.end());
  std::vector<Knot> out;
  const auto& knots = p.knots();
  std::size_t j = 0;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    for (; j < extra.size() && extra[j] < knots[i].s; ++j) {
      if (extra[j] <= 0.0 || (!out.empty() && extra[j] <= out.back().s)) continue;
      // inside a jump piece the value is held, so the new knot is linear and flat
      out.push_back(Knot{extra[j], p.value_at(extra[j]), KnotKind::linear});
    }
    for (; j < extra.size() && extra[j] == knots[i].s; ++j) {
    }
    out.push_back(knots[i]);
  }
  for (; j < extra.size(); ++j) {
    if (extra[j] > out.back().s) out.push_back(Knot{extra[j], knots.back().v, KnotKind::linear});
  }
  return RadialProfile(p.t_support(), std::move(out));
}

double dirichlet_norm_sq(const RadialProfile& p) {
  if (!p.is_continuous()) return inf;
  double sum = 0.0;
  for (const Piece& piece : p.pieces()) {
    if (piece.is_plateau() || piece.is_constant()) continue;
    const double dv = piece.end_value - piece.start_value;
    sum += dv * dv / piece.length();
  }
  return four_pi * sum;
}

double l2_norm_sq(const RadialProfile& p) {
  using detail::exp_moment;
  double sum = 0.0;
  for (const Piece& piece : p.pieces()) {
    const double a = piece.start_value;
    const double weight = std::exp(-piece.begin);
    if (piece.is_plateau()) {
      sum += a * a * weight;
      continue;
    }
    const double h = piece.length();
    const double m = piece.slope();
    sum += weight * (a * a * exp_moment(0, h) + 2.0 * a * m * exp_moment(1, h) +
                     m * m * exp_moment(2, h));
  }
  return p.t_support() * sum;
}

double sobolev_norm_sq(const RadialProfile& p, double tau) {
  return dirichlet_norm_sq(p) + tau * l2_norm_sq(p);
}

FunctionalReport tm_functional(const RadialProfile& p, double beta, double tol) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw error(errc::domain_error, "beta must be positive and finite");
  }
  if (!(tol > 0.0 && tol <= 1e-6)) throw error(errc::domain_error, "tol must lie in (0, 1e-6]");
  const auto integral = detail::integrate_growth(p, beta, detail::Growth::exp_minus_one, tol);
  FunctionalReport report;
  report.beta = beta;
  report.j_beta = integral.value;
  report.quad_error = integral.abs_error;
  report.dirichlet_sq = dirichlet_norm_sq(p);
  report.l2_sq = l2_norm_sq(p);
  return report;
}

RadialProfile scale_amplitude(const RadialProfile& p, double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw error(errc::domain_error, "amplitude factor must be finite and >= 0");
  }
  if (a == 0.0) return RadialProfile::zero(p.t_support());
  std::vector<Knot> knots = p.knots();
  for (Knot& k : knots) k.v *= a;
  return RadialProfile(p.t_support(), std::move(knots));
}

RadialProfile scale_dilate(const RadialProfile& p, double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw error(errc::domain_error, "dilation factor must be finite and > 0");
  }
  return RadialProfile(p.t_support() / (b * b), p.knots());
}

}  // namespace moser
