#include "nwte/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nwte {

namespace {

// Series representation of P(a, x), best for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p: series failed to converge");
}

// Continued fraction for Q(a, x) by modified Lentz, best for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q: continued fraction failed to converge");
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(a))
        throw std::domain_error("gamma_p: requires a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(a))
        throw std::domain_error("gamma_q: requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double lower_incomplete_gamma(double a, double x) {
    return gamma_p(a, x) * std::tgamma(a);
}

double binomial_general(double alpha, int k) {
    if (k < 0) throw std::domain_error("binomial_general: k must be >= 0");
    double out = 1.0;
    for (int j = 0; j < k; ++j) out *= (alpha - j) / (j + 1.0);
    return out;
}

double binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double out = 1.0;
    for (int j = 0; j < k; ++j) out = out * (n - j) / (j + 1.0);
    return out;
}

}  // namespace nwte
