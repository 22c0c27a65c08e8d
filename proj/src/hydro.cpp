#include "nwte/hydro.hpp"

#include <cmath>
#include <stdexcept>

#include "nwte/distribution.hpp"
#include "nwte/errors.hpp"

namespace nwte {

double return_level(const NwteParams& p, double T) {
    if (!(T >= 1.0)) throw std::domain_error("return_level: return period T must be >= 1");
    if (std::isinf(T)) return INFINITY;
    return quantile(p, 1.0 - 1.0 / T);
}

double return_period(const NwteParams& p, double x) {
    if (!(x > 0.0)) throw std::domain_error("return_period: x must be > 0");
    const double s = survival(p, x);
    if (s < 1e-300)
        throw null_event_error("return_period: survival underflowed; period is effectively infinite");
    return 1.0 / s;
}

double mean_deviation_about_return_level(const NwteParams& p, double T, Method method) {
    if (!(T >= 1.0)) throw std::domain_error("mean_deviation_about_return_level: T must be >= 1");
    const double xt = return_level(p, T);
    const double mu = moment(p, 1, method);
    if (xt == 0.0) return mu;  // T = 1: deviation about the origin is the mean
    return 2.0 * xt * cdf(p, xt) - xt + mu - 2.0 * incomplete_moment(p, 1, xt, method);
}

double conditional_event_mean(const NwteParams& p, double Q, Method method) {
    if (!(Q > 0.0)) throw std::domain_error("conditional_event_mean: Q must be > 0");
    return conditional_moment(p, 1, Q, Tail::above, method);
}

}  // namespace nwte
