#pragma once

#include <array>
#include <span>
#include <vector>

#include "nwte/baselines.hpp"
#include "nwte/params.hpp"

namespace nwte {

/// Controls for maximum-likelihood fitting.  Positive parameters are searched
/// in log space and transmutation parameters through a tanh map onto
/// [-1+1e-9, 1-1e-9]; multistart covers the per-family start boxes (lower /
/// upper override the default box when non-empty).
struct OptimizerConfig {
    int multistart_count = 0;        // 0 = full default start grid (>= 8 starts)
    double function_tolerance = 1e-12;
    double parameter_tolerance = 1e-10;
    int max_evaluations = 20000;
    double score_tolerance = 1e-3;   // scale-free score norm for `converged`
    std::vector<double> lower;       // optional per-parameter bounds
    std::vector<double> upper;
};

struct FitResult {
    ModelSpec model;                  // family + fitted parameter vector
    std::vector<double> estimates;    // same values as model.params
    std::vector<double> std_errors;   // observed-information Wald SEs
    bool std_errors_available = false;
    double loglik = 0.0;
    bool converged = false;
    long iterations = 0;
    double score_norm_at_optimum = 0.0;  // max-norm in scale-free coordinates
};

/// NWTE log-likelihood of positive data.
double nwte_loglik(const NwteParams& p, std::span<const double> data);

/// Analytic score (d/d lambda, d/d gamma, d/d theta) of the NWTE
/// log-likelihood.
std::array<double, 3> nwte_score(const NwteParams& p, std::span<const double> data);

/// Maximum-likelihood fit of the given family by multistart Nelder-Mead with
/// observed-information standard errors.  Non-convergence is reported through
/// converged = false with the best point found; a singular Hessian leaves
/// std_errors_available = false.
FitResult fit_mle(Family family, std::span<const double> data, const OptimizerConfig& cfg = {});

}  // namespace nwte
