#pragma once

// Low-level integrals over profiles. Public because the inequalities and
// optimizer modules share them; most callers want tm_functional instead.

#include "moser/profile.hpp"

namespace moser::detail {

/// phi in  integral over R^2 of phi(beta u^2).
enum class Growth {
  exp_minus_one,  // e^x - 1           (Trudinger-Moser functional)
  remainder,      // e^x - 1 - x, so that J = integral of P(u) + beta ||u||_2^2
};

/// log phi(x) for x >= 0; -inf when phi(x) == 0.
double log_growth(Growth g, double x);

/// integral_0^h x^k e^{-x} dx for k in {0,1,2}, h in [0, +inf].
double exp_moment(int k, double h);

struct Integral {
  double value = 0.0;
  double abs_error = 0.0;
};

/// T * integral_0^inf phi(beta U(s)^2) e^{-s} ds.
Integral integrate_growth(const RadialProfile& p, double beta, Growth g, double tol);

/// integral_{s0}^{inf} U(s) e^{-s} ds, exact.
double first_moment_tail(const RadialProfile& p, double s0);

}  // namespace moser::detail
