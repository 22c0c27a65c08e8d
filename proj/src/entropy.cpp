#include "nwte/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "nwte/distribution.hpp"
#include "nwte/quadrature.hpp"

namespace nwte {

namespace {

NwteParams unit_rate(const NwteParams& p) { return {1.0, p.gamma(), p.theta()}; }

// int_0^inf f1(z)^beta dz by quadrature; tail bound f1 <= c e^{-z}.
double f_power_integral_quad(const NwteParams& u, double beta) {
    const double c = 2.0 * u.norm_pow() / u.normalizer();
    double U = std::max(1.0, quantile(u, 1.0 - 1e-12));
    while (std::pow(c, beta) * std::exp(-beta * U) / beta > 1e-12 && U < 1e6) U *= 1.4;
    return integrate(
        [&](double z) {
            const double f = pdf(u, z);
            return f < 1e-300 ? 0.0 : std::pow(f, beta);
        },
        0.0, U, 1e-11);
}

}  // namespace

double shannon_entropy(const NwteParams& p, Method method, const SeriesSpec& spec) {
    const NwteParams u = unit_rate(p);
    double h_unit;
    if (method == Method::series) {
        h_unit = detail::shannon_series(u, spec);
    } else {
        const double c = 2.0 * u.norm_pow() / u.normalizer();
        double U = std::max(1.0, quantile(u, 1.0 - 1e-12));
        while (c * std::exp(-U) * (std::fabs(std::log(c)) + U + 1.0) > 1e-12 && U < 1e6) U *= 1.4;
        h_unit = integrate(
            [&](double z) {
                const double f = pdf(u, z);
                return f < 1e-300 ? 0.0 : -f * std::log(f);
            },
            0.0, U, 1e-11);
    }
    return h_unit - std::log(p.lambda());
}

double renyi_entropy(const NwteParams& p, double beta, Method method, const SeriesSpec& spec) {
    if (!(beta > 0.0) || beta == 1.0)
        throw std::domain_error("renyi_entropy: requires beta > 0, beta != 1");
    const NwteParams u = unit_rate(p);
    const double i_unit = method == Method::series ? detail::f_power_integral_series(u, beta, spec)
                                                   : f_power_integral_quad(u, beta);
    // int f_lambda^beta = lambda^{beta-1} int f_1^beta
    return std::log(i_unit) / (1.0 - beta) - std::log(p.lambda());
}

double mathai_haubold_entropy(const NwteParams& p, double delta, Method method,
                              const SeriesSpec& spec) {
    if (!(delta > 0.0) || !(delta < 2.0) || delta == 1.0)
        throw std::domain_error("mathai_haubold_entropy: requires delta in (0, 2), delta != 1");
    const double beta = 2.0 - delta;
    const NwteParams u = unit_rate(p);
    const double i_unit = method == Method::series ? detail::f_power_integral_series(u, beta, spec)
                                                   : f_power_integral_quad(u, beta);
    return (std::pow(p.lambda(), beta - 1.0) * i_unit - 1.0) / (delta - 1.0);
}

double entropy(const NwteParams& p, const EntropyOrder& order, Method method,
               const SeriesSpec& spec) {
    switch (order.kind) {
        case EntropyOrder::Kind::shannon:
            return shannon_entropy(p, method, spec);
        case EntropyOrder::Kind::renyi:
            return renyi_entropy(p, order.order, method, spec);
        case EntropyOrder::Kind::mathai_haubold:
            return mathai_haubold_entropy(p, order.order, method, spec);
    }
    throw std::logic_error("entropy: unknown kind");
}

}  // namespace nwte
