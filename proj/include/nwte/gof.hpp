#pragma once

#include <span>
#include <vector>

#include "nwte/baselines.hpp"
#include "nwte/fit.hpp"

namespace nwte {

/// Small-sample-corrected Anderson-Darling and Cramer-von Mises statistics,
/// the Kolmogorov-Smirnov statistic and its asymptotic p-value.
struct GofReport {
    double a_star = 0.0;
    double w_star = 0.0;
    double ks = 0.0;
    double ks_p_value = 0.0;
    std::size_t n = 0;
};

/// Statistics of the probability-integral transforms z_i = F(y_(i)) of the
/// sorted data under the given model.  Throws degenerate_sample_error when
/// any z_i hits 0 or 1 exactly.
GofReport gof_statistics(const ModelSpec& m, std::span<const double> data);

/// As above but from an already computed, sorted z vector.
GofReport gof_statistics_from_z(std::span<const double> z);

/// Asymptotic one-sample Kolmogorov-Smirnov p-value, 1 - K(sqrt(n) * ks) with
/// K the limiting Kolmogorov distribution.
double ks_p_value(double ks, std::size_t n);

struct RankedModel {
    ModelSpec model;
    GofReport gof;
    FitResult fit;
};

/// Orders models by ascending A*, breaking ties by W*, then K-S, then family
/// name.  Deterministic for identical inputs.
std::vector<RankedModel> rank_models(std::vector<RankedModel> reports);

}  // namespace nwte
