#pragma once

#include "nwte/moments.hpp"
#include "nwte/params.hpp"

namespace nwte {

// Residual life R_(t) = X - t | X > t, t > 0.  All functions require
// survival(t) above the underflow guard and raise null_event_error otherwise.

double residual_survival(const NwteParams& p, double t, double x);
double residual_cdf(const NwteParams& p, double t, double x);
double residual_pdf(const NwteParams& p, double t, double x);
/// Identical to hazard(p, x + t); hazards are memoryless under conditioning.
double residual_hazard(const NwteParams& p, double t, double x);

/// K(t) = E[X - t | X > t].
double mean_residual_life(const NwteParams& p, double t, Method method = Method::quadrature);
/// V(t) = Var[X - t | X > t].
double variance_residual_life(const NwteParams& p, double t, Method method = Method::quadrature);

// Reversed residual life R̄_(t) = t - X | X <= t, with 0 <= x <= t and
// cdf(t) above the underflow guard.

double reversed_survival(const NwteParams& p, double t, double x);
double reversed_cdf(const NwteParams& p, double t, double x);
double reversed_pdf(const NwteParams& p, double t, double x);
double reversed_hazard(const NwteParams& p, double t, double x);

/// L(t) = E[t - X | X <= t]; 0 <= L(t) <= t.
double mean_reversed_residual_life(const NwteParams& p, double t,
                                   Method method = Method::quadrature);
/// W(t) = Var[t - X | X <= t].
double variance_reversed_residual_life(const NwteParams& p, double t,
                                       Method method = Method::quadrature);

}  // namespace nwte
