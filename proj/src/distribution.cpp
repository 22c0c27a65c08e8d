#include "nwte/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nwte {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_x(double x, const char* fn) {
    if (std::isnan(x) || x < 0.0)
        throw std::domain_error(std::string(fn) + ": x must be >= 0");
}

// G(x) = (1-y)(1+theta y) with y = e^{-lambda x}; 1-y through expm1 so small
// x keeps full precision.
double base_cdf(double theta, double lambda, double x) {
    if (std::isinf(x)) return 1.0;
    const double y = std::exp(-lambda * x);
    const double one_minus_y = -std::expm1(-lambda * x);
    double g = one_minus_y * (1.0 + theta * y);
    if (g < 0.0) g = 0.0;
    if (g > 1.0) g = 1.0;
    return g;
}

// Safeguarded bisection of cdf(x) = u, used when the closed-form root is
// rejected.
double quantile_bisect(const NwteParams& p, double u) {
    double lo = 0.0, hi = 1.0 / p.lambda();
    while (cdf(p, hi) < u) {
        hi *= 2.0;
        if (hi > 1e300) return kInf;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (cdf(p, mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double cdf(const NwteParams& p, double x) {
    check_x(x, "cdf");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double a = 1.0 / p.gamma() + 1.0;
    const double g = base_cdf(p.theta(), p.lambda(), x);
    const double f = std::expm1(a * std::log1p(p.gamma() * g)) / p.normalizer();
    return f < 1.0 ? f : 1.0;
}

double survival(const NwteParams& p, double x) {
    check_x(x, "survival");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    const double a = 1.0 / p.gamma() + 1.0;
    const double s = p.gamma() / (1.0 + p.gamma());
    const double y = std::exp(-p.lambda() * x);
    const double h = y * (1.0 - p.theta() + p.theta() * y);
    // S = N/Z * (1 - B^a) with B = 1 - s h; evaluated via expm1/log1p the
    // bracket keeps relative precision however deep the tail.
    const double bracket = -std::expm1(a * std::log1p(-s * h));
    return p.norm_pow() / p.normalizer() * bracket;
}

double pdf(const NwteParams& p, double x) {
    check_x(x, "pdf");
    if (std::isinf(x)) return 0.0;
    const double s = p.gamma() / (1.0 + p.gamma());
    const double y = std::exp(-p.lambda() * x);
    const double h = y * (1.0 - p.theta() + p.theta() * y);
    const double b_pow = std::exp(std::log1p(-s * h) / p.gamma());
    return p.lambda() * p.norm_pow() / p.normalizer() * b_pow * y *
           (1.0 - p.theta() + 2.0 * p.theta() * y);
}

double hazard(const NwteParams& p, double x) {
    check_x(x, "hazard");
    const double tail_limit = p.theta() == 1.0 ? 2.0 * p.lambda() : p.lambda();
    if (std::isinf(x)) return tail_limit;
    const double a = 1.0 / p.gamma() + 1.0;
    const double s = p.gamma() / (1.0 + p.gamma());
    const double y = std::exp(-p.lambda() * x);
    if (y == 0.0) return tail_limit;
    const double h = y * (1.0 - p.theta() + p.theta() * y);
    const double denom = -std::expm1(a * std::log1p(-s * h));  // 1 - B^{1/g+1}
    if (denom == 0.0) return tail_limit;
    const double b_pow = std::exp(std::log1p(-s * h) / p.gamma());
    return p.lambda() * b_pow * y * (1.0 - p.theta() + 2.0 * p.theta() * y) / denom;
}

double quantile(const NwteParams& p, double u) {
    if (std::isnan(u) || u < 0.0 || u > 1.0)
        throw std::domain_error("quantile: u must lie in [0, 1]");
    if (u == 0.0) return 0.0;
    if (u == 1.0) return kInf;

    const double g = p.gamma();
    const double th = p.theta();
    // Invert F: with R = (1 + u Z)^{gamma/(1+gamma)} the inner level is
    // c = 1 - (R-1)/gamma and y = e^{-lambda x} solves
    //   theta y^2 + (1-theta) y = c.
    // The conjugate form of the root,
    //   y = 2c / (sqrt((1-theta)^2 + 4 theta c) + 1 - theta),
    // is finite at theta = 0 (it IS the theta->0 limit) and selects the
    // branch inside [0, 1] for either sign of theta.
    const double srg = (g / (1.0 + g)) * std::log1p(u * p.normalizer());
    const double w = std::expm1(srg);
    double c = 1.0 - w / g;
    if (c <= 0.0) return kInf;
    if (c > 1.0) c = 1.0;
    const double disc = (1.0 - th) * (1.0 - th) + 4.0 * th * c;
    bool ok = false;
    double x = kInf;
    if (disc >= 0.0) {
        const double denom = std::sqrt(disc) + 1.0 - th;
        if (denom > 0.0) {
            const double y = 2.0 * c / denom;
            if (y > 0.0 && y <= 1.0) {
                const double level = (1.0 - y) * (1.0 + th * y);  // recomposed G
                if (level >= 0.0 && level <= 1.0) {
                    x = -std::log(y) / p.lambda();
                    ok = true;
                }
            }
        }
    }
    return ok ? x : quantile_bisect(p, u);
}

double transmuted_base_cdf(double theta, double lambda, double x) {
    if (!(theta >= -1.0 && theta <= 1.0))
        throw std::domain_error("transmuted_base_cdf: theta must lie in [-1, 1]");
    if (!(lambda > 0.0)) throw std::domain_error("transmuted_base_cdf: lambda must be > 0");
    check_x(x, "transmuted_base_cdf");
    return base_cdf(theta, lambda, x);
}

double Sampler::next() {
    // 53-bit uniform strictly inside (0, 1); bit-reproducible across platforms.
    const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return quantile(params_, u);
}

std::vector<double> Sampler::draw(std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(next());
    return out;
}

std::vector<double> sample(const NwteParams& p, std::size_t n, std::uint64_t seed) {
    Sampler s(p, seed);
    return s.draw(n);
}

}  // namespace nwte
