#pragma once

#include "nwte/moments.hpp"
#include "nwte/params.hpp"

namespace nwte {

/// Return level x_T: the magnitude exceeded once per T periods on average,
/// i.e. quantile(1 - 1/T).  Requires T >= 1; return_level(1) = 0.
double return_level(const NwteParams& p, double T);

/// Return period T = 1 / S(x).  Raises null_event_error when the survival
/// probability underflows (numerically infinite period).
double return_period(const NwteParams& p, double x);

/// Mean deviation about the return level, E|X - x_T|.
double mean_deviation_about_return_level(const NwteParams& p, double T,
                                         Method method = Method::quadrature);

/// Conditional mean of events exceeding Q, E[X | X > Q].
double conditional_event_mean(const NwteParams& p, double Q,
                              Method method = Method::quadrature);

}  // namespace nwte
