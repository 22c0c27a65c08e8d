#pragma once

#include <cmath>
#include <stdexcept>

namespace nwte {

/// Parameter triple of the NWTE(lambda, gamma, theta) distribution.
///
/// lambda > 0 is the exponential rate, gamma > 0 the weight shape and
/// theta in [-1, 1] the transmutation parameter.  Construction validates the
/// domain and precomputes the normalizing quantities
///     norm_pow = (1+gamma)^(1/gamma + 1)
///     normalizer = norm_pow - 1
/// which appear in every evaluation.  Instances are immutable and safe to
/// share across threads.
class NwteParams {
public:
    NwteParams(double lambda, double gamma, double theta)
        : lambda_(lambda), gamma_(gamma), theta_(theta) {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::domain_error("NwteParams: lambda must be positive and finite");
        if (!(gamma > 0.0) || !std::isfinite(gamma))
            throw std::domain_error("NwteParams: gamma must be positive and finite");
        if (!(theta >= -1.0 && theta <= 1.0))
            throw std::domain_error("NwteParams: theta must lie in [-1, 1]");
        // (1+g)^(1/g+1) via exp((1/g+1) log1p(g)); stable for tiny and huge g.
        const double expo = (1.0 / gamma + 1.0) * std::log1p(gamma);
        norm_pow_ = std::exp(expo);
        normalizer_ = std::expm1(expo);
        if (!(normalizer_ > 0.0) || !std::isfinite(normalizer_))
            throw std::domain_error("NwteParams: normalizer (1+gamma)^(1/gamma+1) - 1 not positive finite");
    }

    double lambda() const noexcept { return lambda_; }
    double gamma() const noexcept { return gamma_; }
    double theta() const noexcept { return theta_; }

    /// (1+gamma)^(1/gamma + 1)
    double norm_pow() const noexcept { return norm_pow_; }
    /// (1+gamma)^(1/gamma + 1) - 1
    double normalizer() const noexcept { return normalizer_; }

private:
    double lambda_, gamma_, theta_;
    double norm_pow_, normalizer_;
};

}  // namespace nwte
