// Command-line front end: dataset summaries, fitting, goodness of fit,
// hydrologic quantities, reference-table reproduction, plot data and
// sampling.  Outputs CSV or JSON; errors leave a single machine-parsable
// line on stderr and a nonzero exit code.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nwte/dataset.hpp"
#include "nwte/errors.hpp"
#include "nwte/distribution.hpp"
#include "nwte/fit.hpp"
#include "nwte/gof.hpp"
#include "nwte/hydro.hpp"
#include "nwte/moments.hpp"
#include "nwte/tables.hpp"

namespace {

using nwte::Table;

struct Common {
    std::string format = "csv";
    std::string out;
    std::string data_dir;
    std::string config;
    std::uint64_t seed = 20240915;
    bool seed_set = false;
    bool format_set = false;
    bool data_dir_set = false;
};

void apply_config(Common& c) {
    if (c.config.empty()) return;
    std::ifstream in(c.config);
    if (!in) throw std::runtime_error("cannot open config file " + c.config);
    nlohmann::json j;
    in >> j;
    // flags take precedence over config values
    if (!c.data_dir_set && j.contains("data_dir")) c.data_dir = j["data_dir"].get<std::string>();
    if (!c.format_set && j.contains("format")) c.format = j["format"].get<std::string>();
    if (!c.seed_set && j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
}

void emit(const Table& t, const Common& c) {
    if (c.format != "csv" && c.format != "json")
        throw std::domain_error("--format must be csv or json");
    if (!c.out.empty()) {
        if (c.format == "csv")
            nwte::write_table_csv(t, c.out);
        else
            nwte::write_table_json(t, c.out);
        return;
    }
    if (c.format == "csv") {
        for (std::size_t j = 0; j < t.headers.size(); ++j)
            std::cout << t.headers[j] << (j + 1 < t.headers.size() ? "," : "\n");
        for (const auto& row : t.rows)
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << row[j] << (j + 1 < row.size() ? "," : "\n");
    } else {
        std::cout << nwte::table_json_string(t) << "\n";
    }
}

std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nwte::Dataset load_data(const std::string& spec, const Common& c, const std::string& column) {
    if (spec == "gwd" || spec == "fd")
        return nwte::load_bundled(spec, nwte::resolve_data_dir(c.data_dir));
    nwte::IngestOptions opts;
    opts.column = column;
    return nwte::ingest(spec, opts);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

nwte::NwteParams params_from_flag(const std::string& s) {
    const auto v = parse_list(s);
    if (v.size() != 3)
        throw std::domain_error("--params expects lambda,gamma,theta");
    return {v[0], v[1], v[2]};
}

Table fit_table(const nwte::Dataset& data, const std::string& model) {
    Table t;
    t.title = "Maximum-likelihood fits: " + data.name;
    t.headers = {"rank", "model", "parameters", "estimates", "std_errors", "loglik",
                 "converged", "score_norm", "a_star", "w_star", "ks", "ks_p_value"};
    std::vector<nwte::RankedModel> entries;
    std::vector<nwte::Family> families;
    if (model == "all") {
        families = {nwte::Family::Gamma, nwte::Family::MOE, nwte::Family::NHE, nwte::Family::EE,
                    nwte::Family::TW, nwte::Family::TGE, nwte::Family::TLE, nwte::Family::Kappa,
                    nwte::Family::NWTE};
    } else {
        families = {nwte::family_from_name(model)};
    }
    for (auto fam : families) {
        nwte::RankedModel rm;
        rm.fit = nwte::fit_mle(fam, data.sorted);
        rm.model = rm.fit.model;
        rm.gof = nwte::gof_statistics(rm.model, data.sorted);
        entries.push_back(std::move(rm));
    }
    entries = nwte::rank_models(std::move(entries));
    int rank = 1;
    for (const auto& e : entries) {
        std::string names, ests, ses;
        const auto& pn = nwte::param_names(e.model.family);
        for (std::size_t j = 0; j < pn.size(); ++j) {
            names += (j ? ";" : "") + pn[j];
            ests += (j ? ";" : "") + full(e.fit.estimates[j]);
            ses += std::string(j ? ";" : "") +
                   (e.fit.std_errors_available ? full(e.fit.std_errors[j]) : "NA");
        }
        t.rows.push_back({std::to_string(rank++), nwte::family_name(e.model.family), names, ests,
                          ses, full(e.fit.loglik), e.fit.converged ? "yes" : "no",
                          full(e.fit.score_norm_at_optimum), full(e.gof.a_star),
                          full(e.gof.w_star), full(e.gof.ks), full(e.gof.ks_p_value)});
    }
    return t;
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const nwte::parse_error*>(&e)) return "parse_error";
    if (dynamic_cast<const nwte::checksum_error*>(&e)) return "checksum_error";
    if (dynamic_cast<const nwte::null_event_error*>(&e)) return "null_event_error";
    if (dynamic_cast<const nwte::truncation_error*>(&e)) return "truncation_error";
    if (dynamic_cast<const nwte::degenerate_sample_error*>(&e)) return "degenerate_sample_error";
    if (dynamic_cast<const nwte::nonfinite_loglik_error*>(&e)) return "nonfinite_loglik_error";
    if (dynamic_cast<const nwte::insufficient_data_error*>(&e)) return "insufficient_data_error";
    if (dynamic_cast<const std::domain_error*>(&e)) return "domain_error";
    return "runtime_error";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted transmuted exponential distribution toolkit"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&](CLI::App* sub, bool with_out = true) {
        sub->add_option("--format", common.format, "output format: csv or json")
            ->each([&](const std::string&) { common.format_set = true; });
        if (with_out) sub->add_option("--out", common.out, "output file (default: stdout)");
        sub->add_option("--data-dir", common.data_dir,
                        "directory with the bundled datasets (default: $NWTE_DATA_DIR or ./data)")
            ->each([&](const std::string&) { common.data_dir_set = true; });
        sub->add_option("--config", common.config, "JSON config file; flags take precedence");
        sub->add_option("--seed", common.seed, "random seed")
            ->each([&](const std::string&) { common.seed_set = true; });
    };

    // describe
    std::string data_spec, column;
    auto* cmd_describe = app.add_subcommand("describe", "descriptive statistics of a dataset");
    cmd_describe->add_option("--data", data_spec, "data file, or 'gwd'/'fd' for the bundled sets")
        ->required();
    cmd_describe->add_option("--column", column, "CSV column name or 0-based index");
    add_common(cmd_describe);

    // fit
    std::string fit_model = "all";
    auto* cmd_fit = app.add_subcommand("fit", "maximum-likelihood fit of one or all models");
    cmd_fit->add_option("--data", data_spec, "data file or 'gwd'/'fd'")->required();
    cmd_fit->add_option("--column", column, "CSV column selector");
    cmd_fit->add_option("--model", fit_model, "model family or 'all'");
    add_common(cmd_fit);

    // gof
    std::string gof_model = "NWTE", gof_params;
    auto* cmd_gof = app.add_subcommand("gof", "goodness-of-fit statistics");
    cmd_gof->add_option("--data", data_spec, "data file or 'gwd'/'fd'")->required();
    cmd_gof->add_option("--column", column, "CSV column selector");
    cmd_gof->add_option("--model", gof_model, "model family");
    cmd_gof->add_option("--params", gof_params,
                        "comma-separated parameter values; omitted = fit first");
    add_common(cmd_gof);

    // hydro
    std::string hydro_params, hydro_T = "2,5,10,20,50,100,200", hydro_levels, hydro_event;
    auto* cmd_hydro = app.add_subcommand("hydro", "return levels, return periods, event means");
    cmd_hydro->add_option("--params", hydro_params, "NWTE lambda,gamma,theta")->required();
    cmd_hydro->add_option("--T", hydro_T, "return periods (comma separated)");
    cmd_hydro->add_option("--levels", hydro_levels, "event magnitudes for return periods");
    cmd_hydro->add_option("--event", hydro_event, "threshold Q for the conditional event mean");
    add_common(cmd_hydro);

    // tables
    std::string select = "all", out_dir = "tables_out";
    auto* cmd_tables = app.add_subcommand("tables", "recompute the published reference tables");
    cmd_tables->add_option("--select", select, "comma list from {1,2,3,5,6,7,8} or 'all'");
    cmd_tables->add_option("--out", out_dir, "output directory");
    add_common(cmd_tables, /*with_out=*/false);

    // plot-data
    std::string plot_kind = "pdf_shapes", plot_params;
    int plot_points = 500;
    double plot_lambda = 0.5, plot_xmax = 0.0;
    auto* cmd_plot = app.add_subcommand("plot-data", "columnar data for the shape plots");
    cmd_plot->add_option("--kind", plot_kind, "pdf_shapes | hrf_shapes | skew_kurt_surface");
    cmd_plot->add_option("--params", plot_params, "single curve lambda,gamma,theta");
    cmd_plot->add_option("--points", plot_points, "grid points per curve");
    cmd_plot->add_option("--lambda", plot_lambda, "rate for skew_kurt_surface");
    cmd_plot->add_option("--x-max", plot_xmax, "grid upper end (default: high quantile)");
    add_common(cmd_plot);

    // sample
    std::string sample_params;
    std::size_t sample_n = 0;
    auto* cmd_sample = app.add_subcommand("sample", "draw variates by inverse transform");
    cmd_sample->add_option("--params", sample_params, "NWTE lambda,gamma,theta")->required();
    cmd_sample->add_option("--n", sample_n, "number of draws")->required();
    add_common(cmd_sample);

    CLI11_PARSE(app, argc, argv);

    try {
        apply_config(common);

        if (cmd_describe->parsed()) {
            const auto d = load_data(data_spec, common, column);
            const auto s = nwte::describe(d);
            Table t;
            t.title = "Descriptive statistics: " + d.name;
            t.headers = {"statistic", "value"};
            t.rows = {
                {"n", std::to_string(s.n)},
                {"mean", full(s.mean)},
                {"median", full(s.median)},
                {"sd", full(s.sd)},
                {"kurtosis", s.shape_available ? full(s.kurtosis) : "NA"},
                {"skewness", s.shape_available ? full(s.skewness) : "NA"},
                {"mean_abs_dev_mean", full(s.mean_abs_dev_mean)},
                {"median_abs_dev_median", full(s.median_abs_dev_median)},
                {"min", full(s.min)},
                {"max", full(s.max)},
                {"source", d.source},
            };
            emit(t, common);
        } else if (cmd_fit->parsed()) {
            const auto d = load_data(data_spec, common, column);
            emit(fit_table(d, fit_model), common);
        } else if (cmd_gof->parsed()) {
            const auto d = load_data(data_spec, common, column);
            nwte::ModelSpec m;
            m.family = nwte::family_from_name(gof_model);
            if (!gof_params.empty()) {
                m.params = parse_list(gof_params);
            } else {
                m = nwte::fit_mle(m.family, d.sorted).model;
            }
            const auto rep = nwte::gof_statistics(m, d.sorted);
            Table t;
            t.title = "Goodness of fit: " + d.name;
            t.headers = {"model", "params", "a_star", "w_star", "ks", "ks_p_value", "n"};
            std::string ests;
            for (std::size_t j = 0; j < m.params.size(); ++j)
                ests += (j ? ";" : "") + full(m.params[j]);
            t.rows = {{nwte::family_name(m.family), ests, full(rep.a_star), full(rep.w_star),
                       full(rep.ks), full(rep.ks_p_value), std::to_string(rep.n)}};
            emit(t, common);
        } else if (cmd_hydro->parsed()) {
            const auto p = params_from_flag(hydro_params);
            Table t;
            t.title = "Hydrologic quantities";
            t.headers = {"quantity", "input", "value"};
            for (double T : parse_list(hydro_T)) {
                t.rows.push_back({"return_level", full(T), full(nwte::return_level(p, T))});
                t.rows.push_back({"mean_deviation_about_return_level", full(T),
                                  full(nwte::mean_deviation_about_return_level(p, T))});
            }
            if (!hydro_levels.empty())
                for (double x : parse_list(hydro_levels))
                    t.rows.push_back({"return_period", full(x), full(nwte::return_period(p, x))});
            if (!hydro_event.empty())
                for (double q : parse_list(hydro_event))
                    t.rows.push_back(
                        {"conditional_event_mean", full(q), full(nwte::conditional_event_mean(p, q))});
            emit(t, common);
        } else if (cmd_tables->parsed()) {
            std::vector<int> selectors;
            if (select == "all") {
                selectors = {1, 2, 3, 5, 6, 7, 8};
            } else {
                for (double v : parse_list(select)) selectors.push_back(static_cast<int>(v));
            }
            std::filesystem::create_directories(out_dir);
            nwte::TableOptions topts;
            topts.data_dir = nwte::resolve_data_dir(common.data_dir);
            topts.seed = common.seed;
            for (int sel : selectors) {
                const auto t = nwte::reproduce_table(sel, topts);
                const auto base = std::filesystem::path(out_dir) / ("table_" + std::to_string(sel));
                nwte::write_table_csv(t, base.string() + ".csv");
                nwte::write_table_json(t, base.string() + ".json");
                std::ofstream txt(base.string() + ".txt");
                txt << nwte::render_table_text(t);
                std::cout << "table " << sel << ": max |delta| = " << t.max_abs_delta() << "  ("
                          << base.string() << ".{csv,json,txt})\n";
            }
        } else if (cmd_plot->parsed()) {
            nwte::PlotSpec spec;
            spec.kind = nwte::plot_kind_from_name(plot_kind);
            spec.points = plot_points;
            spec.lambda = plot_lambda;
            spec.x_max = plot_xmax;
            if (!plot_params.empty()) spec.params = params_from_flag(plot_params);
            emit(nwte::emit_plot_data(spec), common);
        } else if (cmd_sample->parsed()) {
            const auto p = params_from_flag(sample_params);
            Table t;
            t.title = "Samples";
            t.headers = {"x"};
            for (double x : nwte::sample(p, sample_n, common.seed)) t.rows.push_back({full(x)});
            emit(t, common);
        }
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["error"] = {{"type", error_kind(e)}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
