#pragma once

#include "nwte/params.hpp"

namespace nwte {

/// Truncation policy for the infinite-series expansions.
///
/// The outer index stops once three consecutive rows contribute less than
/// abs_tolerance/10 in absolute value; max_outer_index is a hard cap and a
/// truncation_error is raised when the cap is reached without the stop rule
/// firing (or when alternating-term cancellation makes the requested
/// tolerance uncertifiable).  theta_singularity_guard is the distance from
/// |theta| = 1 inside which the factored coefficient forms (which contain
/// (theta/(1-theta))^k) are refused.
struct SeriesSpec {
    int max_outer_index = 500;
    double abs_tolerance = 1e-10;
    double theta_singularity_guard = 1e-9;
};

// ---------------------------------------------------------------------------
// Expansion coefficients, (i,k)-indexed as in the cdf/pdf/hrf expansions.
// All are computed in the unfactored form
//     binom(nu, i) binom(i, k) (-gamma/(1+gamma))^i (1-theta)^(i-k) theta^k
// which stays finite on the whole theta domain including the endpoints.
// ---------------------------------------------------------------------------

/// cdf-expansion coefficient H_{i,k} (nu = 1/gamma + 1).
double coefficient_h(const NwteParams& p, int i, int k);

/// pdf-expansion coefficient A_{i,k} (nu = 1/gamma).
double coefficient_a(const NwteParams& p, int i, int k);

/// B_{i,k} = lambda (1+gamma)^(1/gamma+1) / normalizer * A_{i,k}.
double coefficient_b(const NwteParams& p, int i, int k);

/// Renyi-expansion coefficient C_{i,k} (nu = beta/gamma).
double coefficient_c(const NwteParams& p, double beta, int i, int k);

/// D_{j,l} = binom(beta, j) binom(j, l) (-theta)^j (-2)^l.
double coefficient_d(double theta, double beta, int j, int l);

/// F_{i,k,j,l} = (lambda (1+gamma)^(1/gamma+1) / normalizer)^beta C_{i,k} D_{j,l}.
double coefficient_f(const NwteParams& p, double beta, int i, int k, int j, int l);

/// hrf-expansion coefficient G_{i,k,m} (nu = m (1/gamma + 1) + 1/gamma,
/// carries a factor lambda).
double coefficient_g(const NwteParams& p, int i, int k, int m);

/// H_{i,k} evaluated in the factored form with (theta/(1-theta))^k.
/// Identical in exact arithmetic; throws std::domain_error when
/// 1 - |theta| < spec.theta_singularity_guard.
double coefficient_h_factored(const NwteParams& p, int i, int k, const SeriesSpec& spec = {});

// ---------------------------------------------------------------------------
// Truncated pointwise expansions.  Row sums over k are carried out in closed
// form (the inner binomial collapses against e^(-lambda x k)), so these are
// partial sums of the expansion in the outer index only.
// ---------------------------------------------------------------------------

double series_cdf(const NwteParams& p, double x, const SeriesSpec& spec = {});
double series_pdf(const NwteParams& p, double x, const SeriesSpec& spec = {});
double series_survival(const NwteParams& p, double x, const SeriesSpec& spec = {});
double series_hazard(const NwteParams& p, double x, const SeriesSpec& spec = {});

namespace detail {

// Engine entry points at unit rate (lambda scaled out by the caller).
// Moment-type sums evaluate the k-collapsed rows through stable positive
// recurrences for
//     int_v0^1 v^p (-ln v)^r (1-theta+theta v)^j dv
// so no alternating inner sums are formed at any theta in [-1, 1].

/// E[X^r] at lambda = 1.
double moment_series(const NwteParams& p, int r, const SeriesSpec& spec);

/// J_r(t) = int_0^t x^r f at lambda = 1, with t passed as lt = lambda * t.
double lower_moment_series(const NwteParams& p, int r, double lt, const SeriesSpec& spec);

/// E[X^r] - J_r(t) at lambda = 1 (computed directly, not by subtraction).
double upper_moment_series(const NwteParams& p, int r, double lt, const SeriesSpec& spec);

/// M_X(t) at lambda = 1 with tau = t / lambda < 1.
double mgf_series(const NwteParams& p, double tau, const SeriesSpec& spec);

/// Shannon entropy at lambda = 1.
double shannon_series(const NwteParams& p, const SeriesSpec& spec);

/// int f^beta dx at lambda = 1, for beta > 0 (Renyi / Mathai-Haubold kernels).
double f_power_integral_series(const NwteParams& p, double beta, const SeriesSpec& spec);

}  // namespace detail

}  // namespace nwte
