#include "nwte/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "nwte/distribution.hpp"
#include "nwte/errors.hpp"
#include "nwte/quadrature.hpp"
#include "nwte/special.hpp"

namespace nwte {

namespace {

constexpr double kUnderflowGuard = 1e-300;

NwteParams unit_rate(const NwteParams& p) { return {1.0, p.gamma(), p.theta()}; }

// f(z) <= bound * e^{-z} everywhere (unit rate).
double pdf_tail_prefactor(const NwteParams& u) {
    return 2.0 * u.norm_pow() / u.normalizer();
}

// Upper cutoff for int_0^inf z^r f1(z) dz so the discarded tail is below tol.
double moment_cutoff(const NwteParams& u, int r, double tol) {
    const double c = pdf_tail_prefactor(u);
    double U = std::max(1.0, quantile(u, 1.0 - 1e-12));
    while (c * std::tgamma(r + 1.0) * gamma_q(r + 1.0, U) > tol && U < 1e5) U *= 1.4;
    return U;
}

// E[Z^r] restricted to [a, b] at unit rate by quadrature.
double unit_partial_moment_quad(const NwteParams& u, int r, double a, double b, double tol) {
    if (b <= a) return 0.0;
    return integrate([&](double z) { return std::pow(z, r) * pdf(u, z); }, a, b, tol);
}

}  // namespace

double moment(const NwteParams& p, int r, Method method, const SeriesSpec& spec) {
    if (r < 0) throw std::domain_error("moment: order r must be >= 0");
    if (r == 0) return 1.0;
    const NwteParams u = unit_rate(p);
    const double scaled = method == Method::series
                              ? detail::moment_series(u, r, spec)
                              : unit_partial_moment_quad(u, r, 0.0, moment_cutoff(u, r, 1e-11), 1e-11);
    return scaled / std::pow(p.lambda(), r);
}

double mgf(const NwteParams& p, double t, Method method, const SeriesSpec& spec) {
    if (!(t < p.lambda()))
        throw std::domain_error("mgf: requires t < lambda (the leading series term has a pole at t = lambda)");
    if (t == 0.0) return 1.0;
    const NwteParams u = unit_rate(p);
    const double tau = t / p.lambda();
    if (method == Method::series) return detail::mgf_series(u, tau, spec);
    const double c = pdf_tail_prefactor(u);
    double U = std::max(1.0, quantile(u, 1.0 - 1e-12));
    while (c * std::exp(-(1.0 - tau) * U) / (1.0 - tau) > 1e-11 && U < 1e6) U *= 1.4;
    return integrate([&](double z) { return std::exp(tau * z) * pdf(u, z); }, 0.0, U, 1e-11);
}

double incomplete_moment(const NwteParams& p, int r, double t, Method method,
                         const SeriesSpec& spec) {
    if (r < 0) throw std::domain_error("incomplete_moment: order r must be >= 0");
    if (std::isnan(t) || t < 0.0) throw std::domain_error("incomplete_moment: t must be >= 0");
    if (t == 0.0) return 0.0;
    if (std::isinf(t)) return moment(p, r, method, spec);
    const NwteParams u = unit_rate(p);
    const double lt = p.lambda() * t;
    const double scaled = method == Method::series
                              ? detail::lower_moment_series(u, r, lt, spec)
                              : unit_partial_moment_quad(u, r, 0.0, lt, 1e-12);
    return r == 0 ? scaled : scaled / std::pow(p.lambda(), r);
}

double upper_incomplete_moment(const NwteParams& p, int r, double t, Method method,
                               const SeriesSpec& spec) {
    if (r < 0) throw std::domain_error("upper_incomplete_moment: order r must be >= 0");
    if (std::isnan(t) || t < 0.0)
        throw std::domain_error("upper_incomplete_moment: t must be >= 0");
    if (std::isinf(t)) return 0.0;
    const NwteParams u = unit_rate(p);
    const double lt = p.lambda() * t;
    double scaled;
    if (method == Method::series) {
        scaled = detail::upper_moment_series(u, r, lt, spec);
    } else {
        const double U = std::max(moment_cutoff(u, r, 1e-12), lt * 1.0000001);
        scaled = unit_partial_moment_quad(u, r, lt, U, 1e-12);
    }
    return r == 0 ? scaled : scaled / std::pow(p.lambda(), r);
}

double conditional_moment(const NwteParams& p, int r, double t, Tail tail, Method method,
                          const SeriesSpec& spec) {
    if (!(t > 0.0) || std::isinf(t))
        throw std::domain_error("conditional_moment: t must be positive and finite");
    if (tail == Tail::above) {
        const double st = survival(p, t);
        if (st < kUnderflowGuard)
            throw null_event_error("conditional_moment: survival(t) underflowed");
        return upper_incomplete_moment(p, r, t, method, spec) / st;
    }
    const double ft = cdf(p, t);
    if (ft < kUnderflowGuard) throw null_event_error("conditional_moment: cdf(t) underflowed");
    return incomplete_moment(p, r, t, method, spec) / ft;
}

double mean_deviation(const NwteParams& p, Center center, Method method, const SeriesSpec& spec) {
    const double mu = moment(p, 1, method, spec);
    if (center == Center::mean)
        return 2.0 * (mu * cdf(p, mu) - incomplete_moment(p, 1, mu, method, spec));
    const double med = quantile(p, 0.5);
    return mu - 2.0 * incomplete_moment(p, 1, med, method, spec);
}

double bowley_skewness(const NwteParams& p) {
    const double q1 = quantile(p, 0.25), q2 = quantile(p, 0.5), q3 = quantile(p, 0.75);
    return (q3 - 2.0 * q2 + q1) / (q3 - q1);
}

double moors_kurtosis(const NwteParams& p) {
    const double q1 = quantile(p, 0.125), q3 = quantile(p, 0.375);
    const double q5 = quantile(p, 0.625), q7 = quantile(p, 0.875);
    const double q2 = quantile(p, 0.25), q6 = quantile(p, 0.75);
    return ((q7 - q5) + (q3 - q1)) / (q6 - q2);
}

}  // namespace nwte
