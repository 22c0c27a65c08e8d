#pragma once

#include <span>
#include <string>
#include <vector>

#include "nwte/params.hpp"

namespace nwte {

/// The competitor families fitted alongside NWTE.
enum class Family { Gamma, MOE, NHE, EE, TW, TGE, TLE, Kappa, NWTE };

/// A family plus a parameter vector in that family's conventional order.
/// Parameter orders match the comparison tables:
///   Gamma(k, lambda)           k, lambda > 0 (lambda is a scale)
///   MOE(beta, lambda)          beta, lambda > 0
///   NHE(alpha, lambda)         alpha, lambda > 0
///   EE(alpha, lambda)          alpha, lambda > 0
///   TW(eta, sigma, lambda)     eta, sigma > 0, lambda in [-1, 1]
///   TGE(alpha, theta, lambda)  alpha, theta > 0, lambda in [-1, 1]
///   TLE(beta, theta, lambda)   beta, theta > 0 (theta = 0 allowed), lambda in [-1, 1]
///   Kappa(alpha, theta, beta)  alpha, theta, beta > 0
///   NWTE(lambda, gamma, theta)
struct ModelSpec {
    Family family = Family::NWTE;
    std::vector<double> params;
};

const std::string& family_name(Family f);
Family family_from_name(const std::string& name);
const std::vector<std::string>& param_names(Family f);
std::size_t param_count(Family f);

/// Validates the per-family parameter domain; throws std::domain_error.
void validate(const ModelSpec& m);

double model_pdf(const ModelSpec& m, double x);
double model_cdf(const ModelSpec& m, double x);
double model_log_pdf(const ModelSpec& m, double x);

/// Sum of log densities; empty data gives 0 by the empty-sum convention.
/// Throws nonfinite_loglik_error if any observation has zero density.
double model_loglik(const ModelSpec& m, std::span<const double> data);

}  // namespace nwte
