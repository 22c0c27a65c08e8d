#pragma once

namespace nwte {

/// Regularized lower incomplete gamma P(a, x) = gamma(a,x) / Gamma(a).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Lower incomplete gamma gamma(a, x) = P(a,x) * Gamma(a).
double lower_incomplete_gamma(double a, double x);

/// Generalized binomial coefficient C(alpha, k) for real alpha, integer k >= 0.
double binomial_general(double alpha, int k);

/// C(n, k) for integer n as a double (valid for the moderate n used here).
double binomial(int n, int k);

}  // namespace nwte
