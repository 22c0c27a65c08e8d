#pragma once

#include "nwte/params.hpp"
#include "nwte/series.hpp"

namespace nwte {

/// Evaluation route for moment-type quantities.  Quadrature is the default
/// (robust on the whole parameter domain); the series route mirrors the
/// analytic expansions and is kept as an independent cross-check.
enum class Method { quadrature, series };

enum class Tail { above, below };
enum class Center { mean, median };

/// r-th moment about the origin, E[X^r].  moment(p, 0) == 1.
double moment(const NwteParams& p, int r, Method method = Method::quadrature,
              const SeriesSpec& spec = {});

/// Moment generating function E[e^{tX}]; requires t < lambda strictly (the
/// leading series term has a pole at t = lambda).
double mgf(const NwteParams& p, double t, Method method = Method::quadrature,
           const SeriesSpec& spec = {});

/// Lower incomplete moment J_r(t) = int_0^t x^r f(x) dx.
double incomplete_moment(const NwteParams& p, int r, double t,
                         Method method = Method::quadrature, const SeriesSpec& spec = {});

/// Upper tail moment E[X^r] - J_r(t), computed directly so the far tail does
/// not cancel.
double upper_incomplete_moment(const NwteParams& p, int r, double t,
                               Method method = Method::quadrature, const SeriesSpec& spec = {});

/// E[X^r | X > t] (above) or E[X^r | X <= t] (below).  Raises
/// null_event_error when the conditioning probability underflows.
double conditional_moment(const NwteParams& p, int r, double t, Tail tail,
                          Method method = Method::quadrature, const SeriesSpec& spec = {});

/// Mean deviation about the mean, E|X - mu|, or about the median, E|X - M|.
double mean_deviation(const NwteParams& p, Center center,
                      Method method = Method::quadrature, const SeriesSpec& spec = {});

/// Quartile-based skewness; lies in (-1, 1) and does not depend on lambda.
double bowley_skewness(const NwteParams& p);

/// Octile-based kurtosis; does not depend on lambda.
double moors_kurtosis(const NwteParams& p);

}  // namespace nwte
