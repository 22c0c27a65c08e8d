#include "nwte/lifetime.hpp"

#include <cmath>
#include <stdexcept>

#include "nwte/distribution.hpp"
#include "nwte/errors.hpp"

namespace nwte {

namespace {

constexpr double kUnderflowGuard = 1e-300;

double checked_survival(const NwteParams& p, double t, const char* fn) {
    if (!(t > 0.0)) throw std::domain_error(std::string(fn) + ": t must be > 0");
    const double st = survival(p, t);
    if (st < kUnderflowGuard)
        throw null_event_error(std::string(fn) + ": survival(t) underflowed");
    return st;
}

double checked_cdf(const NwteParams& p, double t, const char* fn) {
    if (!(t > 0.0)) throw std::domain_error(std::string(fn) + ": t must be > 0");
    const double ft = cdf(p, t);
    if (ft < kUnderflowGuard) throw null_event_error(std::string(fn) + ": cdf(t) underflowed");
    return ft;
}

void check_offset(double x, const char* fn) {
    if (std::isnan(x) || x < 0.0) throw std::domain_error(std::string(fn) + ": x must be >= 0");
}

void check_reversed_offset(double x, double t, const char* fn) {
    if (std::isnan(x) || x < 0.0 || x > t)
        throw std::domain_error(std::string(fn) + ": x must lie in [0, t]");
}

}  // namespace

double residual_survival(const NwteParams& p, double t, double x) {
    check_offset(x, "residual_survival");
    return survival(p, x + t) / checked_survival(p, t, "residual_survival");
}

double residual_cdf(const NwteParams& p, double t, double x) {
    check_offset(x, "residual_cdf");
    return 1.0 - residual_survival(p, t, x);
}

double residual_pdf(const NwteParams& p, double t, double x) {
    check_offset(x, "residual_pdf");
    return pdf(p, x + t) / checked_survival(p, t, "residual_pdf");
}

double residual_hazard(const NwteParams& p, double t, double x) {
    check_offset(x, "residual_hazard");
    checked_survival(p, t, "residual_hazard");
    return hazard(p, x + t);
}

double mean_residual_life(const NwteParams& p, double t, Method method) {
    const double st = checked_survival(p, t, "mean_residual_life");
    return upper_incomplete_moment(p, 1, t, method) / st - t;
}

double variance_residual_life(const NwteParams& p, double t, Method method) {
    const double st = checked_survival(p, t, "variance_residual_life");
    // conditional raw moments of X | X > t; the variance is shift invariant
    const double a1 = upper_incomplete_moment(p, 1, t, method) / st;
    const double a2 = upper_incomplete_moment(p, 2, t, method) / st;
    return a2 - a1 * a1;
}

double reversed_survival(const NwteParams& p, double t, double x) {
    check_reversed_offset(x, t, "reversed_survival");
    return cdf(p, t - x) / checked_cdf(p, t, "reversed_survival");
}

double reversed_cdf(const NwteParams& p, double t, double x) {
    check_reversed_offset(x, t, "reversed_cdf");
    return 1.0 - reversed_survival(p, t, x);
}

double reversed_pdf(const NwteParams& p, double t, double x) {
    check_reversed_offset(x, t, "reversed_pdf");
    return pdf(p, t - x) / checked_cdf(p, t, "reversed_pdf");
}

double reversed_hazard(const NwteParams& p, double t, double x) {
    check_reversed_offset(x, t, "reversed_hazard");
    checked_cdf(p, t, "reversed_hazard");
    const double ftx = cdf(p, t - x);
    if (ftx < kUnderflowGuard)
        throw null_event_error("reversed_hazard: cdf(t - x) underflowed");
    return pdf(p, t - x) / ftx;
}

double mean_reversed_residual_life(const NwteParams& p, double t, Method method) {
    const double ft = checked_cdf(p, t, "mean_reversed_residual_life");
    return t - incomplete_moment(p, 1, t, method) / ft;
}

double variance_reversed_residual_life(const NwteParams& p, double t, Method method) {
    const double ft = checked_cdf(p, t, "variance_reversed_residual_life");
    const double b1 = incomplete_moment(p, 1, t, method) / ft;
    const double b2 = incomplete_moment(p, 2, t, method) / ft;
    return b2 - b1 * b1;
}

}  // namespace nwte
