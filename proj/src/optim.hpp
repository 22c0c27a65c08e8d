#pragma once

#include <functional>
#include <vector>

namespace nwte::detail {

struct NmOptions {
    double fatol = 1e-12;
    double xatol = 1e-10;
    int max_evaluations = 20000;
    double initial_step = 0.25;
};

struct NmResult {
    std::vector<double> x;
    double fval = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Nelder-Mead minimization of f on R^d.  The objective must be total
/// (return +inf or a large value outside the feasible region, never throw).
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, const NmOptions& opts = {});

}  // namespace nwte::detail
