#include "moser/optimizer.hpp"

#include <algorithm>
#include <cfloat>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "moser/error.hpp"
#include "moser/inequalities.hpp"
#include "moser/sequences.hpp"

namespace moser {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw error(errc::domain_error, what);
}

// Search coordinates of a continuous profile with v_0 = 0.
struct State {
  double log_t = 0.0;
  std::vector<double> log_gaps;  // log(s_i - s_{i-1}), i = 1..n-1
  std::vector<double> values;    // v_i, i = 1..n-1
};

constexpr double min_log_gap = -20.0;
constexpr double max_log_gap = 6.0;
constexpr double min_log_t = -40.0;
constexpr double max_log_t = 60.0;

State state_from(const RadialProfile& p, std::size_t knots) {
  // resample on an even grid up to the last knot; exact for two-knot families
  const double s_last = p.knots().back().s;
  State st;
  st.log_t = std::log(p.t_support());
  const double gap = s_last / static_cast<double>(knots - 1);
  for (std::size_t i = 1; i < knots; ++i) {
    st.log_gaps.push_back(std::log(gap));
    st.values.push_back(p.value_at(s_last * static_cast<double>(i) / static_cast<double>(knots - 1)));
  }
  return st;
}

class Search {
 public:
  Search(const ConstraintSet& c, double beta, const OptimizationOptions& opt)
      : constraint_(c), beta_(beta), opt_(opt) {}

  std::size_t evaluations() const { return evaluations_; }

  // Projects `st` onto the feasible boundary in place; nullopt when degenerate.
  std::optional<RadialProfile> project(State& st) const {
    st.values = isotonic_nonnegative(std::move(st.values));
    if (!(st.values.back() > 0.0)) return std::nullopt;
    st.log_t = std::clamp(st.log_t, min_log_t, max_log_t);
    std::vector<Knot> knots{Knot{0.0, 0.0}};
    double s = 0.0;
    for (std::size_t i = 0; i < st.values.size(); ++i) {
      st.log_gaps[i] = std::clamp(st.log_gaps[i], min_log_gap, max_log_gap);
      s += std::exp(st.log_gaps[i]);
      knots.push_back(Knot{s, st.values[i]});
    }
    try {
      const RadialProfile shape(std::exp(st.log_t), std::move(knots));
      const double a = constraint_.max_amplitude(dirichlet_norm_sq(shape), l2_norm_sq(shape));
      RadialProfile projected = scale_amplitude(shape, a);
      for (std::size_t i = 0; i < st.values.size(); ++i) st.values[i] = projected.knots()[i + 1].v;
      return projected;
    } catch (const error&) {
      return std::nullopt;
    }
  }

  // One counted evaluation: J of the projected candidate, or -inf.
  double evaluate(State& st) {
    ++evaluations_;
    const std::optional<RadialProfile> p = project(st);
    if (!p) return neg_inf;
    try {
      return tm_functional(*p, beta_, opt_.search_tol).j_beta;
    } catch (const error&) {
      return neg_inf;
    }
  }

 private:
  ConstraintSet constraint_;
  double beta_;
  OptimizationOptions opt_;
  std::size_t evaluations_ = 0;
};

struct Start {
  std::string name;
  State state;
  double value = neg_inf;
};

std::vector<std::pair<std::string, RadialProfile>> family_starts(const ConstraintSet& c) {
  std::vector<std::pair<std::string, RadialProfile>> out;
  out.emplace_back("alvino(T=pi,delta=e)", alvino_extremal(pi, std::exp(1.0)));
  out.emplace_back("alvino(T=4pi,delta=e)", alvino_extremal(four_pi, std::exp(1.0)));
  out.emplace_back("alvino(T=pi,delta=e^2)", alvino_extremal(pi, std::exp(2.0)));
  for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    out.emplace_back("cap(k=" + std::to_string(static_cast<int>(k)) + ",R=1)", cap(k, 1.0));
    if (c.kind == ConstraintKind::reduced) {
      // radius at which both budgets bind at once
      const double a = 1.0 - c.delta;
      const double R = c.K / (a * std::sqrt(zygmund_l2_sq(k)));
      out.emplace_back("cap(k=" + std::to_string(static_cast<int>(k)) + ",balanced)", cap(k, R));
    }
  }
  // near-vanishing: wide and, after projection, flat
  for (double R : {10.0, 100.0}) {
    out.emplace_back("flat(R=" + std::to_string(static_cast<int>(R)) + ")", cap(1.0, R));
  }
  return out;
}

}  // namespace

ConstraintSet ConstraintSet::reduced(double delta, double K) {
  ConstraintSet c{ConstraintKind::reduced, delta, K, 1.0};
  c.validate();
  return c;
}

ConstraintSet ConstraintSet::ruf(double tau) {
  ConstraintSet c{ConstraintKind::ruf, 0.0, 1.0, tau};
  c.validate();
  return c;
}

ConstraintSet ConstraintSet::norm_sum() { return ConstraintSet{ConstraintKind::norm_sum, 0.0, 1.0, 1.0}; }

void ConstraintSet::validate() const {
  switch (kind) {
    case ConstraintKind::reduced:
      require(delta >= 0.0 && delta < 1.0, "reduced constraint: delta must lie in [0, 1)");
      require(K > 0.0 && std::isfinite(K), "reduced constraint: K must be positive");
      break;
    case ConstraintKind::ruf:
      require(tau > 0.0 && std::isfinite(tau), "ruf constraint: tau must be positive");
      break;
    case ConstraintKind::norm_sum:
      break;
  }
}

std::vector<std::pair<std::string, double>> ConstraintSet::residuals(double dirichlet_sq,
                                                                     double l2_sq) const {
  switch (kind) {
    case ConstraintKind::reduced:
      return {{"grad", std::sqrt(dirichlet_sq) - (1.0 - delta)}, {"l2", std::sqrt(l2_sq) - K}};
    case ConstraintKind::ruf:
      return {{"sobolev_tau", dirichlet_sq + tau * l2_sq - 1.0}};
    case ConstraintKind::norm_sum:
      return {{"norm_sum", std::sqrt(dirichlet_sq) + std::sqrt(l2_sq) - 1.0}};
  }
  return {};
}

bool ConstraintSet::feasible(double dirichlet_sq, double l2_sq, double tol) const {
  for (const auto& [name, r] : residuals(dirichlet_sq, l2_sq)) {
    if (!(r <= tol)) return false;
  }
  return true;
}

double ConstraintSet::max_amplitude(double dirichlet_sq, double l2_sq) const {
  if (!(dirichlet_sq + l2_sq > 0.0)) throw error(errc::precondition, "max_amplitude: zero profile");
  switch (kind) {
    case ConstraintKind::reduced:
      return std::min((1.0 - delta) / std::sqrt(dirichlet_sq), K / std::sqrt(l2_sq));
    case ConstraintKind::ruf:
      return 1.0 / std::sqrt(dirichlet_sq + tau * l2_sq);
    case ConstraintKind::norm_sum:
      return 1.0 / (std::sqrt(dirichlet_sq) + std::sqrt(l2_sq));
  }
  return 0.0;
}

double ConstraintSet::vanishing_level(double beta) const {
  switch (kind) {
    case ConstraintKind::reduced: return moser::vanishing_level(beta, K);
    case ConstraintKind::ruf: return beta / tau;
    case ConstraintKind::norm_sum: return beta;
  }
  return 0.0;
}

std::string_view constraint_name(ConstraintKind k) noexcept {
  switch (k) {
    case ConstraintKind::reduced: return "reduced";
    case ConstraintKind::ruf: return "ruf";
    case ConstraintKind::norm_sum: return "norm-sum";
  }
  return "unknown";
}

std::vector<double> isotonic_nonnegative(std::vector<double> v) {
  // blocks of (sum, count), merged while a block mean falls below its predecessor
  std::vector<double> sum;
  std::vector<std::size_t> count;
  for (double x : v) {
    sum.push_back(x);
    count.push_back(1);
    while (sum.size() > 1 &&
           sum[sum.size() - 2] * static_cast<double>(count.back()) >
               sum.back() * static_cast<double>(count[count.size() - 2])) {
      sum[sum.size() - 2] += sum.back();
      count[count.size() - 2] += count.back();
      sum.pop_back();
      count.pop_back();
    }
  }
  std::size_t i = 0;
  for (std::size_t b = 0; b < sum.size(); ++b) {
    const double mean = std::max(0.0, sum[b] / static_cast<double>(count[b]));
    for (std::size_t j = 0; j < count[b]; ++j) v[i++] = mean;
  }
  return v;
}

OptimizationResult maximize(const ConstraintSet& c, double beta, const OptimizationOptions& opt) {
  const auto clock_start = std::chrono::steady_clock::now();
  c.validate();
  require(beta > 0.0 && std::isfinite(beta), "maximize: beta must be positive");
  if (c.kind == ConstraintKind::reduced) {
    const double a = 1.0 - c.delta;
    require(beta < four_pi / (a * a), "maximize: reduced problem needs beta < 4 pi / (1 - delta)^2");
  }
  require(opt.knots >= 4, "maximize: need at least 4 knots");
  require(opt.budget >= 1, "maximize: budget must be positive");

  Search search(c, beta, opt);
  std::mt19937_64 rng(opt.seed);
  OptimizationResult result;
  result.seed = opt.seed;
  result.vanishing_level_value = c.vanishing_level(beta);

  std::vector<Start> starts;
  for (auto& [name, profile] : family_starts(c)) {
    if (search.evaluations() >= opt.budget) break;
    Start s{name, state_from(profile, opt.knots)};
    s.value = search.evaluate(s.state);
    result.starts.push_back(StartValue{s.name, s.value});
    starts.push_back(std::move(s));
  }
  std::stable_sort(starts.begin(), starts.end(),
                   [](const Start& a, const Start& b) { return a.value > b.value; });

  State best = starts.front().state;
  double best_value = starts.front().value;
  result.best_start = starts.front().name;
  result.objective_trace.push_back(best_value);

  const std::size_t runs = std::min<std::size_t>(3, starts.size());
  const std::size_t dims = 2 * opt.knots;  // log T, stretch, n-1 gaps, n-1 values
  for (std::size_t run = 0; run < runs; ++run) {
    const std::size_t remaining = opt.budget - std::min(opt.budget, search.evaluations());
    const std::size_t stop = search.evaluations() + remaining / (runs - run);
    State cur = starts[run].state;
    double cur_value = starts[run].value;
    if (!std::isfinite(cur_value)) continue;

    auto initial_step = [&](std::size_t i) { return i < opt.knots + 1 ? 0.5 : 0.25; };
    std::vector<double> step(dims);
    for (std::size_t i = 0; i < dims; ++i) step[i] = initial_step(i);
    std::vector<std::size_t> order(dims);
    for (std::size_t i = 0; i < dims; ++i) order[i] = i;

    while (search.evaluations() < stop) {
      for (std::size_t i = dims - 1; i > 0; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i);
        std::swap(order[i], order[pick(rng)]);
      }
      for (std::size_t i : order) {
        if (search.evaluations() >= stop) break;
        const double first = (rng() & 1U) != 0U ? 1.0 : -1.0;
        bool improved = false;
        for (double sign : {first, -first}) {
          if (search.evaluations() >= stop) break;
          State cand = cur;
          const double h = sign * step[i];
          if (i == 0) {
            cand.log_t += h;
          } else if (i == 1) {
            for (double& g : cand.log_gaps) g += h;
          } else if (i < opt.knots + 1) {
            cand.log_gaps[i - 2] += h;
          } else {
            const double scale = cand.values.back();
            cand.values[i - opt.knots - 1] += h * scale;
          }
          const double value = search.evaluate(cand);
          if (value > cur_value) {
            cur = std::move(cand);
            cur_value = value;
            step[i] = std::min(2.0 * step[i], 8.0 * initial_step(i));
            improved = true;
            if (cur_value > best_value) {
              best_value = cur_value;
              best = cur;
              result.best_start = starts[run].name;
              result.objective_trace.push_back(best_value);
            }
            break;
          }
        }
        if (!improved) {
          step[i] *= 0.5;
          if (step[i] < 1e-9) step[i] = 0.1 * initial_step(i);
        }
      }
    }
  }

  const RadialProfile best_profile = search.project(best).value_or(RadialProfile::zero());
  result.evaluations = search.evaluations();
  result.best_profile = best_profile;
  result.best_value = tm_functional(best_profile, beta, opt.final_tol).j_beta;
  result.feasibility_residuals =
      c.residuals(dirichlet_norm_sq(best_profile), l2_norm_sq(best_profile));
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
  return result;
}

RadialProfile blowup_profile(double delta, double K, double n) {
  require(delta >= 0.0 && delta < 1.0, "blowup_profile: delta must lie in [0, 1)");
  require(K > 0.0 && std::isfinite(K), "blowup_profile: K must be positive");
  require(n >= 3.0 && std::isfinite(n), "blowup_profile: n must be >= 3");
  RadialProfile u = scale_amplitude(counterexample_from_log(std::log(n)), 1.0 - delta);
  const double l2 = l2_norm_sq(u);
  if (l2 > K * K) u = RadialProfile(u.t_support() * (K * K / l2), u.knots());
  return u;
}

std::vector<BlowupRow> blowup_scan(double delta, double K, const std::vector<double>& betas,
                                   const std::vector<double>& ns, double tol) {
  require(!betas.empty() && !ns.empty(), "blowup_scan: grids must be nonempty");
  std::vector<BlowupRow> rows;
  for (double beta : betas) {
    require(beta > 0.0 && std::isfinite(beta), "blowup_scan: beta must be positive");
    for (double n : ns) {
      const RadialProfile u = blowup_profile(delta, K, n);
      BlowupRow row{beta, n};
      // inner disk, where u sits on its plateau
      const Knot& top = u.knots().back();
      const double x = beta * top.v * top.v;
      const double log_bound = std::log(u.measure(top.s)) + x + std::log(-std::expm1(-x));
      row.lower_bound = log_bound < std::log(DBL_MAX) ? std::exp(log_bound)
                                                       : std::numeric_limits<double>::infinity();
      try {
        row.j_beta = tm_functional(u, beta, tol).j_beta;
      } catch (const error& e) {
        if (e.code() != errc::value_overflow) throw;
        row.j_beta = std::numeric_limits<double>::infinity();
      }
      rows.push_back(row);
    }
  }
  return rows;
}

RadialProfile vanishing_bump(const ConstraintSet& c) {
  c.validate();
  require(c.kind == ConstraintKind::reduced, "vanishing_bump: needs a reduced constraint set");
  const double a = 1.0 - c.delta;
  const double R = c.K / (a * std::sqrt(zygmund_l2_sq(1.0)));
  return scale_amplitude(cap(1.0, R), a);
}

std::vector<VanishingRow> vanishing_probe(const ConstraintSet& c, double beta,
                                          const std::vector<double>& lambdas, double tol) {
  require(beta > 0.0 && std::isfinite(beta), "vanishing_probe: beta must be positive");
  const RadialProfile phi = vanishing_bump(c);
  const double level = moser::vanishing_level(beta, c.K);
  std::vector<VanishingRow> rows;
  for (double lambda : lambdas) {
    require(lambda > 0.0 && std::isfinite(lambda), "vanishing_probe: lambda must be positive");
    const RadialProfile u = scale_dilate(scale_amplitude(phi, lambda), lambda);
    VanishingRow row{lambda};
    row.j_beta = tm_functional(u, beta, tol).j_beta;
    row.level = level;
    row.remainder = remainder_functional(u, beta, tol);
    row.gap = std::abs(row.j_beta - level);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace moser
