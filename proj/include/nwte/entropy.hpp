#pragma once

#include "nwte/moments.hpp"
#include "nwte/params.hpp"
#include "nwte/series.hpp"

namespace nwte {

/// Entropy family selector: Shannon, Renyi of order beta, or Mathai-Haubold
/// of order delta.  Orders must be positive and differ from 1.
struct EntropyOrder {
    enum class Kind { shannon, renyi, mathai_haubold };
    Kind kind = Kind::shannon;
    double order = 0.0;

    static EntropyOrder shannon() { return {Kind::shannon, 0.0}; }
    static EntropyOrder renyi(double beta) { return {Kind::renyi, beta}; }
    static EntropyOrder mathai_haubold(double delta) { return {Kind::mathai_haubold, delta}; }
};

/// Shannon entropy H(f) = -E[log f(X)], in nats.
double shannon_entropy(const NwteParams& p, Method method = Method::quadrature,
                       const SeriesSpec& spec = {});

/// Renyi entropy (1/(1-beta)) log int f^beta, beta > 0, beta != 1.
double renyi_entropy(const NwteParams& p, double beta, Method method = Method::quadrature,
                     const SeriesSpec& spec = {});

/// Mathai-Haubold entropy (int f^{2-delta} - 1)/(delta - 1), delta in (0, 2),
/// delta != 1.
double mathai_haubold_entropy(const NwteParams& p, double delta,
                              Method method = Method::quadrature, const SeriesSpec& spec = {});

/// Dispatch on an EntropyOrder.
double entropy(const NwteParams& p, const EntropyOrder& order,
               Method method = Method::quadrature, const SeriesSpec& spec = {});

}  // namespace nwte
