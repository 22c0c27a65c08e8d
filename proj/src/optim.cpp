#include "optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nwte::detail {

NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     const std::vector<double>& x0, const NmOptions& opts) {
    const std::size_t d = x0.size();
    const std::size_t m = d + 1;
    std::vector<std::vector<double>> simplex(m, x0);
    std::vector<double> fv(m);
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        const double v = f(x);
        return std::isnan(v) ? INFINITY : v;
    };
    for (std::size_t j = 0; j < d; ++j) simplex[j + 1][j] = x0[j] + opts.initial_step;
    for (std::size_t i = 0; i < m; ++i) fv[i] = eval(simplex[i]);

    std::vector<std::size_t> order(m);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> s2(m);
        std::vector<double> f2(m);
        for (std::size_t i = 0; i < m; ++i) {
            s2[i] = simplex[order[i]];
            f2[i] = fv[order[i]];
        }
        simplex.swap(s2);
        fv.swap(f2);
    };
    sort_simplex();

    std::vector<double> centroid(d), xr(d), xe(d), xc(d);
    int iters = 0;
    bool converged = false;
    while (evals < opts.max_evaluations) {
        ++iters;
        // convergence on both function spread and simplex size
        double fspread = std::fabs(fv[m - 1] - fv[0]);
        double xspread = 0.0;
        for (std::size_t i = 1; i < m; ++i)
            for (std::size_t j = 0; j < d; ++j)
                xspread = std::max(xspread, std::fabs(simplex[i][j] - simplex[0][j]));
        if (fspread < opts.fatol && xspread < opts.xatol) {
            converged = true;
            break;
        }

        for (std::size_t j = 0; j < d; ++j) {
            double c = 0.0;
            for (std::size_t i = 0; i + 1 < m; ++i) c += simplex[i][j];
            centroid[j] = c / static_cast<double>(d);
        }
        auto blend = [&](std::vector<double>& out, double coef) {
            for (std::size_t j = 0; j < d; ++j)
                out[j] = centroid[j] + coef * (centroid[j] - simplex[m - 1][j]);
        };
        blend(xr, 1.0);
        const double fr = eval(xr);
        if (fr < fv[0]) {
            blend(xe, 2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[m - 1] = xe;
                fv[m - 1] = fe;
            } else {
                simplex[m - 1] = xr;
                fv[m - 1] = fr;
            }
        } else if (fr < fv[m - 2]) {
            simplex[m - 1] = xr;
            fv[m - 1] = fr;
        } else {
            if (fr < fv[m - 1]) {
                blend(xc, 0.5);  // outside contraction
            } else {
                for (std::size_t j = 0; j < d; ++j)
                    xc[j] = centroid[j] - 0.5 * (centroid[j] - simplex[m - 1][j]);
            }
            const double fc = eval(xc);
            if (fc < std::min(fr, fv[m - 1])) {
                simplex[m - 1] = xc;
                fv[m - 1] = fc;
            } else {
                for (std::size_t i = 1; i < m; ++i) {  // shrink toward the best
                    for (std::size_t j = 0; j < d; ++j)
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    fv[i] = eval(simplex[i]);
                }
            }
        }
        sort_simplex();
    }
    sort_simplex();
    return {simplex[0], fv[0], iters, evals, converged};
}

}  // namespace nwte::detail
