#pragma once

#include <functional>

namespace nwte {

/// Adaptive Gauss-Kronrod 15(7) integration of f over the finite interval
/// [a, b] to absolute tolerance abs_tol.  Throws std::runtime_error if the
/// subdivision budget is exhausted before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_intervals = 4000);

}  // namespace nwte
