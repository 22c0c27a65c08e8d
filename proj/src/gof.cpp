#include "nwte/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nwte/errors.hpp"

namespace nwte {

GofReport gof_statistics_from_z(std::span<const double> z) {
    const std::size_t n = z.size();
    if (n < 1) throw std::domain_error("gof_statistics: need n >= 1");
    for (std::size_t i = 1; i < n; ++i)
        if (z[i] < z[i - 1]) throw std::domain_error("gof_statistics: z must be sorted");
    for (double zi : z)
        if (zi <= 0.0 || zi >= 1.0)
            throw degenerate_sample_error("gof_statistics: some z_i is 0 or 1");

    const double nd = static_cast<double>(n);
    double ad_sum = 0.0, cvm_sum = 0.0, ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double idx = static_cast<double>(i + 1);
        ad_sum += (2.0 * idx - 1.0) * (std::log(z[i]) + std::log1p(-z[n - 1 - i]));
        const double dev = z[i] - (2.0 * idx - 1.0) / (2.0 * nd);
        cvm_sum += dev * dev;
        ks = std::max({ks, idx / nd - z[i], z[i] - (idx - 1.0) / nd});
    }
    GofReport rep;
    rep.n = n;
    rep.a_star = (2.25 / (nd * nd) + 0.75 / nd + 1.0) * (-nd - ad_sum / nd);
    rep.w_star = (0.5 / nd + 1.0) * (cvm_sum + 1.0 / (12.0 * nd));
    rep.ks = ks;
    rep.ks_p_value = ks_p_value(ks, n);
    return rep;
}

GofReport gof_statistics(const ModelSpec& m, std::span<const double> data) {
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> z(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) z[i] = model_cdf(m, sorted[i]);
    return gof_statistics_from_z(z);
}

double ks_p_value(double ks, std::size_t n) {
    if (ks < 0.0 || ks > 1.0) throw std::domain_error("ks_p_value: ks must lie in [0, 1]");
    if (ks == 0.0) return 1.0;
    const double x = std::sqrt(static_cast<double>(n)) * ks;
    // p = 2 sum_{j>=1} (-1)^{j-1} e^{-2 j^2 x^2}, truncated below 1e-12
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100000; ++j) {
        const double term = std::exp(-2.0 * j * j * x * x);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-12) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

std::vector<RankedModel> rank_models(std::vector<RankedModel> reports) {
    if (reports.empty()) throw std::domain_error("rank_models: need at least one report");
    std::stable_sort(reports.begin(), reports.end(), [](const RankedModel& a, const RankedModel& b) {
        if (a.gof.a_star != b.gof.a_star) return a.gof.a_star < b.gof.a_star;
        if (a.gof.w_star != b.gof.w_star) return a.gof.w_star < b.gof.w_star;
        if (a.gof.ks != b.gof.ks) return a.gof.ks < b.gof.ks;
        return family_name(a.model.family) < family_name(b.model.family);
    });
    return reports;
}

}  // namespace nwte
