#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nwte/params.hpp"

namespace nwte {

/// Distribution function F(x).  Monotone, F(0) = 0, F(+inf) = 1.
double cdf(const NwteParams& p, double x);

/// Density f(x); f(0) equals lambda (1+theta)(1+gamma) / normalizer.
double pdf(const NwteParams& p, double x);

/// Survival S(x) = 1 - F(x), evaluated from its own closed form so the far
/// tail keeps full relative precision.
double survival(const NwteParams& p, double x);

/// Hazard rate f(x) / S(x); tends to lambda as x -> inf (2*lambda at the
/// theta = 1 boundary).
double hazard(const NwteParams& p, double x);

/// Quantile function, the inverse of cdf.  quantile(0) = 0, quantile(1) = +inf.
double quantile(const NwteParams& p, double u);

/// Transmuted exponential base cdf G(x) = (1+theta) H - theta H^2 with
/// H(x) = 1 - exp(-lambda x).
double transmuted_base_cdf(double theta, double lambda, double x);

/// Inverse-transform sampler.  Owns its generator state: use one instance per
/// stream; a given seed always reproduces the same draws bit for bit.
class Sampler {
public:
    Sampler(const NwteParams& p, std::uint64_t seed) : params_(p), engine_(seed) {}

    double next();
    std::vector<double> draw(std::size_t n);

private:
    NwteParams params_;
    std::mt19937_64 engine_;
};

/// Draw n variates with a fresh Sampler seeded as given.  n = 0 yields an
/// empty vector.
std::vector<double> sample(const NwteParams& p, std::size_t n, std::uint64_t seed);

}  // namespace nwte
