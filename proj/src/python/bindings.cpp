#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nwte/baselines.hpp"
#include "nwte/dataset.hpp"
#include "nwte/distribution.hpp"
#include "nwte/entropy.hpp"
#include "nwte/fit.hpp"
#include "nwte/gof.hpp"
#include "nwte/hydro.hpp"
#include "nwte/lifetime.hpp"
#include "nwte/moments.hpp"
#include "nwte/tables.hpp"

namespace py = pybind11;
using namespace nwte;

namespace {

Method method_from(const std::string& m) {
    if (m == "quadrature") return Method::quadrature;
    if (m == "series") return Method::series;
    throw std::domain_error("method must be 'quadrature' or 'series'");
}

ModelSpec make_model(const std::string& family, const std::vector<double>& params) {
    ModelSpec m{family_from_name(family), params};
    validate(m);
    return m;
}

}  // namespace

PYBIND11_MODULE(_nwte, m) {
    m.doc() = "Weighted transmuted exponential distribution: evaluation, fitting, "
              "goodness of fit and hydrologic frequency analysis";

    py::class_<NwteParams>(m, "NwteParams")
        .def(py::init<double, double, double>(), py::arg("lam"), py::arg("gamma"),
             py::arg("theta"))
        .def_property_readonly("lam", &NwteParams::lambda)
        .def_property_readonly("gamma", &NwteParams::gamma)
        .def_property_readonly("theta", &NwteParams::theta)
        .def("__repr__", [](const NwteParams& p) {
            return "NwteParams(lam=" + std::to_string(p.lambda()) +
                   ", gamma=" + std::to_string(p.gamma()) +
                   ", theta=" + std::to_string(p.theta()) + ")";
        });

    m.def("cdf", &cdf, py::arg("params"), py::arg("x"));
    m.def("pdf", &pdf, py::arg("params"), py::arg("x"));
    m.def("survival", &survival, py::arg("params"), py::arg("x"));
    m.def("hazard", &hazard, py::arg("params"), py::arg("x"));
    m.def("quantile", &quantile, py::arg("params"), py::arg("u"));
    m.def("transmuted_base_cdf", &transmuted_base_cdf, py::arg("theta"), py::arg("lam"),
          py::arg("x"));
    m.def("sample", &sample, py::arg("params"), py::arg("n"), py::arg("seed"));

    m.def(
        "moment",
        [](const NwteParams& p, int r, const std::string& method) {
            return moment(p, r, method_from(method));
        },
        py::arg("params"), py::arg("r"), py::arg("method") = "quadrature");
    m.def(
        "mgf",
        [](const NwteParams& p, double t, const std::string& method) {
            return mgf(p, t, method_from(method));
        },
        py::arg("params"), py::arg("t"), py::arg("method") = "quadrature");
    m.def(
        "incomplete_moment",
        [](const NwteParams& p, int r, double t, const std::string& method) {
            return incomplete_moment(p, r, t, method_from(method));
        },
        py::arg("params"), py::arg("r"), py::arg("t"), py::arg("method") = "quadrature");
    m.def(
        "conditional_moment",
        [](const NwteParams& p, int r, double t, const std::string& tail,
           const std::string& method) {
            const Tail tl = tail == "above" ? Tail::above : Tail::below;
            return conditional_moment(p, r, t, tl, method_from(method));
        },
        py::arg("params"), py::arg("r"), py::arg("t"), py::arg("tail") = "above",
        py::arg("method") = "quadrature");
    m.def(
        "mean_deviation",
        [](const NwteParams& p, const std::string& about) {
            return mean_deviation(p, about == "median" ? Center::median : Center::mean);
        },
        py::arg("params"), py::arg("about") = "mean");
    m.def("bowley_skewness", &bowley_skewness, py::arg("params"));
    m.def("moors_kurtosis", &moors_kurtosis, py::arg("params"));

    m.def(
        "shannon_entropy",
        [](const NwteParams& p, const std::string& method) {
            return shannon_entropy(p, method_from(method));
        },
        py::arg("params"), py::arg("method") = "quadrature");
    m.def(
        "renyi_entropy",
        [](const NwteParams& p, double beta, const std::string& method) {
            return renyi_entropy(p, beta, method_from(method));
        },
        py::arg("params"), py::arg("beta"), py::arg("method") = "quadrature");
    m.def(
        "mathai_haubold_entropy",
        [](const NwteParams& p, double delta, const std::string& method) {
            return mathai_haubold_entropy(p, delta, method_from(method));
        },
        py::arg("params"), py::arg("delta"), py::arg("method") = "quadrature");

    m.def("residual_survival", &residual_survival);
    m.def("residual_pdf", &residual_pdf);
    m.def("residual_hazard", &residual_hazard);
    m.def("mean_residual_life",
          [](const NwteParams& p, double t) { return mean_residual_life(p, t); });
    m.def("variance_residual_life",
          [](const NwteParams& p, double t) { return variance_residual_life(p, t); });
    m.def("reversed_survival", &reversed_survival);
    m.def("reversed_pdf", &reversed_pdf);
    m.def("mean_reversed_residual_life",
          [](const NwteParams& p, double t) { return mean_reversed_residual_life(p, t); });
    m.def("variance_reversed_residual_life",
          [](const NwteParams& p, double t) { return variance_reversed_residual_life(p, t); });

    m.def(
        "model_pdf",
        [](const std::string& family, const std::vector<double>& params, double x) {
            return model_pdf(make_model(family, params), x);
        },
        py::arg("family"), py::arg("params"), py::arg("x"));
    m.def(
        "model_cdf",
        [](const std::string& family, const std::vector<double>& params, double x) {
            return model_cdf(make_model(family, params), x);
        },
        py::arg("family"), py::arg("params"), py::arg("x"));
    m.def(
        "model_loglik",
        [](const std::string& family, const std::vector<double>& params,
           const std::vector<double>& data) {
            return model_loglik(make_model(family, params), data);
        },
        py::arg("family"), py::arg("params"), py::arg("data"));
    m.def("param_names",
          [](const std::string& family) { return param_names(family_from_name(family)); });

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("estimates", &FitResult::estimates)
        .def_readonly("std_errors", &FitResult::std_errors)
        .def_readonly("std_errors_available", &FitResult::std_errors_available)
        .def_readonly("loglik", &FitResult::loglik)
        .def_readonly("converged", &FitResult::converged)
        .def_readonly("iterations", &FitResult::iterations)
        .def_readonly("score_norm_at_optimum", &FitResult::score_norm_at_optimum)
        .def_property_readonly("family",
                               [](const FitResult& f) { return family_name(f.model.family); });

    m.def(
        "fit_mle",
        [](const std::string& family, const std::vector<double>& data) {
            return fit_mle(family_from_name(family), data);
        },
        py::arg("family"), py::arg("data"));
    m.def(
        "nwte_loglik",
        [](const NwteParams& p, const std::vector<double>& data) { return nwte_loglik(p, data); },
        py::arg("params"), py::arg("data"));
    m.def(
        "nwte_score",
        [](const NwteParams& p, const std::vector<double>& data) { return nwte_score(p, data); },
        py::arg("params"), py::arg("data"));

    py::class_<GofReport>(m, "GofReport")
        .def_readonly("a_star", &GofReport::a_star)
        .def_readonly("w_star", &GofReport::w_star)
        .def_readonly("ks", &GofReport::ks)
        .def_readonly("ks_p_value", &GofReport::ks_p_value)
        .def_readonly("n", &GofReport::n);

    m.def(
        "gof_statistics",
        [](const std::string& family, const std::vector<double>& params,
           const std::vector<double>& data) {
            return gof_statistics(make_model(family, params), data);
        },
        py::arg("family"), py::arg("params"), py::arg("data"));
    m.def("ks_p_value", &ks_p_value, py::arg("ks"), py::arg("n"));

    m.def("return_level",
          [](const NwteParams& p, double T) { return return_level(p, T); });
    m.def("return_period",
          [](const NwteParams& p, double x) { return return_period(p, x); });
    m.def("mean_deviation_about_return_level", [](const NwteParams& p, double T) {
        return mean_deviation_about_return_level(p, T);
    });
    m.def("conditional_event_mean",
          [](const NwteParams& p, double Q) { return conditional_event_mean(p, Q); });
}
