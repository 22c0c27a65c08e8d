#include "nwte/tables.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

#include "nwte/dataset.hpp"
#include "nwte/distribution.hpp"
#include "nwte/entropy.hpp"
#include "nwte/errors.hpp"
#include "nwte/fit.hpp"
#include "nwte/gof.hpp"
#include "nwte/hydro.hpp"
#include "nwte/lifetime.hpp"
#include "nwte/moments.hpp"
#include "nwte/reference.hpp"

namespace nwte {

namespace {

std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void push_comparison(Table& t, std::vector<std::string>& row, double computed, double expected) {
    row.push_back(full(computed));
    row.push_back(full(expected));
    row.push_back(full(computed - expected));
    t.deltas.push_back(std::fabs(computed - expected));
}

NwteParams params_from(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }

Table entropy_table() {
    Table t;
    t.title = "Entropies at lambda = 1 (quadrature route)";
    t.headers = {"gamma", "theta",
                 "shannon", "shannon_ref", "shannon_delta",
                 "renyi_0.5", "renyi_0.5_ref", "renyi_0.5_delta",
                 "mathai_haubold_0.5", "mathai_haubold_0.5_ref", "mathai_haubold_0.5_delta"};
    for (const auto& row : reference::kEntropyTable) {
        NwteParams p(1.0, row.gamma, row.theta);
        std::vector<std::string> cells = {full(row.gamma), full(row.theta)};
        push_comparison(t, cells, shannon_entropy(p), row.shannon);
        push_comparison(t, cells, renyi_entropy(p, 0.5), row.renyi_half);
        push_comparison(t, cells, mathai_haubold_entropy(p, 0.5), row.mathai_haubold_half);
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Table life_table(bool reversed) {
    Table t;
    t.title = reversed ? "Mean reversed residual life at lambda = 1"
                       : "Mean residual life at lambda = 1";
    t.headers = {"gamma", "theta", "t", "computed", "reference", "delta"};
    const auto& ref = reversed ? reference::kMeanReversedResidualTable
                               : reference::kMeanResidualTable;
    for (const auto& row : ref) {
        NwteParams p(1.0, row.gamma, row.theta);
        for (std::size_t j = 0; j < reference::kLifeTimePoints.size(); ++j) {
            const double tt = reference::kLifeTimePoints[j];
            const double got = reversed ? mean_reversed_residual_life(p, tt)
                                        : mean_residual_life(p, tt);
            std::vector<std::string> cells = {full(row.gamma), full(row.theta), full(tt)};
            push_comparison(t, cells, got, row.values[j]);
            t.rows.push_back(std::move(cells));
        }
    }
    return t;
}

Table fit_table(const std::string& key, const TableOptions& opts) {
    const bool gwd = key == "gwd";
    Table t;
    t.title = std::string("Model comparison on ") + (gwd ? "GWD" : "FD");
    t.headers = {"model", "p1", "p2", "p3", "se1", "se2", "se3", "loglik", "converged",
                 "a_star", "a_star_ref", "a_star_delta",
                 "w_star", "w_star_ref", "w_star_delta",
                 "ks", "ks_ref", "ks_delta",
                 "p_value", "p_value_ref", "p_value_delta"};
    Dataset data = load_bundled(key, resolve_data_dir(opts.data_dir));
    const auto& refs = gwd ? reference::kGwdFits : reference::kFdFits;

    // fits are independent; fan them out
    std::vector<std::future<std::pair<FitResult, GofReport>>> futures;
    for (const auto& ref : refs) {
        futures.push_back(std::async(std::launch::async, [&, fam = ref.family] {
            FitResult fit = fit_mle(family_from_name(fam), data.sorted);
            GofReport rep = gof_statistics(fit.model, data.sorted);
            return std::make_pair(std::move(fit), rep);
        }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) {
        auto [fit, rep] = futures[i].get();
        const auto& ref = refs[i];
        std::vector<std::string> cells = {ref.family};
        for (std::size_t j = 0; j < 3; ++j)
            cells.push_back(j < fit.estimates.size() ? full(fit.estimates[j]) : "");
        for (std::size_t j = 0; j < 3; ++j)
            cells.push_back(j < fit.std_errors.size() && fit.std_errors_available
                                ? full(fit.std_errors[j])
                                : "");
        cells.push_back(full(fit.loglik));
        cells.push_back(fit.converged ? "yes" : "no");
        push_comparison(t, cells, rep.a_star, ref.a_star);
        push_comparison(t, cells, rep.w_star, ref.w_star);
        push_comparison(t, cells, rep.ks, ref.ks);
        push_comparison(t, cells, rep.ks_p_value, ref.p_value);
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Table return_level_table() {
    Table t;
    t.title = "Return levels and mean deviations about them (reference parameter estimates)";
    t.headers = {"T",
                 "gwd_level", "gwd_level_ref", "gwd_level_delta",
                 "gwd_dev", "gwd_dev_ref", "gwd_dev_delta",
                 "fd_level", "fd_level_ref", "fd_level_delta",
                 "fd_dev", "fd_dev_ref", "fd_dev_delta"};
    const NwteParams gwd = params_from(reference::kGwdNwteEstimates);
    const NwteParams fd = params_from(reference::kFdNwteEstimates);
    for (const auto& row : reference::kReturnLevelTable) {
        std::vector<std::string> cells = {full(row.T)};
        push_comparison(t, cells, return_level(gwd, row.T), row.gwd_level);
        push_comparison(t, cells, mean_deviation_about_return_level(gwd, row.T), row.gwd_dev);
        push_comparison(t, cells, return_level(fd, row.T), row.fd_level);
        push_comparison(t, cells, mean_deviation_about_return_level(fd, row.T), row.fd_dev);
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Table return_period_table() {
    Table t;
    t.title = "Return periods of the largest observed values (reference parameter estimates)";
    t.headers = {"dataset", "value", "period", "period_ref", "period_delta"};
    const NwteParams gwd = params_from(reference::kGwdNwteEstimates);
    const NwteParams fd = params_from(reference::kFdNwteEstimates);
    for (const auto& row : reference::kGwdReturnPeriods) {
        std::vector<std::string> cells = {"GWD", full(row.value)};
        push_comparison(t, cells, return_period(gwd, row.value), row.period);
        t.rows.push_back(std::move(cells));
    }
    for (const auto& row : reference::kFdReturnPeriods) {
        std::vector<std::string> cells = {"FD", full(row.value)};
        push_comparison(t, cells, return_period(fd, row.value), row.period);
        t.rows.push_back(std::move(cells));
    }
    return t;
}

}  // namespace

double Table::max_abs_delta() const {
    double worst = 0.0;
    for (double d : deltas) worst = std::max(worst, d);
    return worst;
}

Table reproduce_table(int selector, const TableOptions& opts) {
    switch (selector) {
        case 1: return entropy_table();
        case 2: return life_table(false);
        case 3: return life_table(true);
        case 5: return fit_table("gwd", opts);
        case 6: return fit_table("fd", opts);
        case 7: return return_level_table();
        case 8: return return_period_table();
        default:
            throw std::domain_error("reproduce_table: selector must be one of {1,2,3,5,6,7,8}");
    }
}

void write_table_csv(const Table& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_table_csv: cannot open " + path);
    for (std::size_t j = 0; j < t.headers.size(); ++j)
        out << t.headers[j] << (j + 1 < t.headers.size() ? "," : "\n");
    for (const auto& row : t.rows)
        for (std::size_t j = 0; j < row.size(); ++j)
            out << row[j] << (j + 1 < row.size() ? "," : "\n");
}

std::string table_json_string(const Table& t) {
    nlohmann::json j;
    j["title"] = t.title;
    j["headers"] = t.headers;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& cell : row) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (!cell.empty() && end == cell.c_str() + cell.size())
                jr.push_back(v);
            else
                jr.push_back(cell);
        }
        j["rows"].push_back(std::move(jr));
    }
    j["max_abs_delta"] = t.max_abs_delta();
    return j.dump(2);
}

void write_table_json(const Table& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_table_json: cannot open " + path);
    out << table_json_string(t) << "\n";
}

std::string render_table_text(const Table& t) {
    // the text rendering rounds numeric cells; CSV/JSON keep full precision
    std::vector<std::vector<std::string>> cells;
    cells.push_back(t.headers);
    for (const auto& row : t.rows) {
        std::vector<std::string> r;
        for (const auto& cell : row) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            r.push_back(!cell.empty() && end == cell.c_str() + cell.size() ? fixed6(v) : cell);
        }
        cells.push_back(std::move(r));
    }
    std::vector<std::size_t> width(t.headers.size(), 0);
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size() && j < width.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    std::ostringstream out;
    out << t.title << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            out << cells[i][j];
            if (j + 1 < cells[i].size())
                out << std::string(width[j] - cells[i][j].size() + 2, ' ');
        }
        out << "\n";
        if (i == 0) out << std::string(0, ' ') << "\n";
    }
    return out.str();
}

PlotKind plot_kind_from_name(const std::string& name) {
    if (name == "pdf_shapes") return PlotKind::pdf_shapes;
    if (name == "hrf_shapes") return PlotKind::hrf_shapes;
    if (name == "skew_kurt_surface") return PlotKind::skew_kurt_surface;
    throw std::domain_error("unknown plot kind: " + name);
}

Table emit_plot_data(const PlotSpec& spec) {
    Table t;
    if (spec.kind == PlotKind::skew_kurt_surface) {
        t.title = "Quantile skewness/kurtosis surface";
        t.headers = {"theta", "gamma", "bowley_skewness", "moors_kurtosis"};
        for (int a = 0; a <= 38; ++a) {
            const double th = -0.95 + a * 0.05;
            for (int b = 1; b <= 50; ++b) {
                const double g = 0.1 * b;
                NwteParams p(spec.lambda, g, th);
                t.rows.push_back({full(th), full(g), full(bowley_skewness(p)),
                                  full(moors_kurtosis(p))});
            }
        }
        return t;
    }

    const bool hrf = spec.kind == PlotKind::hrf_shapes;
    t.title = hrf ? "Hazard-rate shapes" : "Density shapes";
    t.headers = {"lambda", "gamma", "theta", "x", hrf ? "hazard" : "pdf"};
    std::vector<NwteParams> curves;
    if (spec.params) {
        curves.push_back(*spec.params);
    } else {
        curves = {{1.0, 0.5, -0.5}, {1.0, 5.0, 0.5}, {1.0, 0.1, 0.9}, {1.0, 2.0, -1.0},
                  {1.0, 30.0, 0.0}, {2.0, 1.0, 1.0}};
    }
    for (const auto& p : curves) {
        const double xmax = spec.x_max > 0.0 ? spec.x_max : quantile(p, hrf ? 0.9999 : 0.999);
        const int n = std::max(2, spec.points);
        for (int i = 0; i < n; ++i) {
            const double x = xmax * i / (n - 1);
            const double v = hrf ? hazard(p, x) : pdf(p, x);
            t.rows.push_back({full(p.lambda()), full(p.gamma()), full(p.theta()), full(x), full(v)});
        }
    }
    return t;
}

}  // namespace nwte
