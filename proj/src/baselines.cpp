#include "nwte/baselines.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "nwte/distribution.hpp"
#include "nwte/errors.hpp"
#include "nwte/special.hpp"

namespace nwte {

namespace {

struct FamilyInfo {
    std::string name;
    std::vector<std::string> params;
};

const std::map<Family, FamilyInfo>& registry() {
    static const std::map<Family, FamilyInfo> reg = {
        {Family::Gamma, {"gamma", {"k", "lambda"}}},
        {Family::MOE, {"MOE", {"beta", "lambda"}}},
        {Family::NHE, {"NHE", {"alpha", "lambda"}}},
        {Family::EE, {"EE", {"alpha", "lambda"}}},
        {Family::TW, {"TW", {"eta", "sigma", "lambda"}}},
        {Family::TGE, {"TGE", {"alpha", "theta", "lambda"}}},
        {Family::TLE, {"TLE", {"beta", "theta", "lambda"}}},
        {Family::Kappa, {"Kappa", {"alpha", "theta", "beta"}}},
        {Family::NWTE, {"NWTE", {"lambda", "gamma", "theta"}}},
    };
    return reg;
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::domain_error(std::string("model parameter ") + what + " must be positive");
}

void require_unit(double v, const char* what) {
    if (!(v >= -1.0 && v <= 1.0))
        throw std::domain_error(std::string("model parameter ") + what + " must lie in [-1, 1]");
}

void check_support(double x, const char* fn) {
    if (std::isnan(x) || x < 0.0) throw std::domain_error(std::string(fn) + ": x must be >= 0");
}

// QRTM map applied to a base cdf value: (1+l)H - l H^2 with H = 1 - E and E
// the base survival; the E form avoids cancellation for small x.
double transmuted_cdf_from_base_survival(double E, double l) {
    const double H = 1.0 - E;
    return H * (1.0 + l * E);
}

double log_nonneg(double v) { return v > 0.0 ? std::log(v) : -INFINITY; }

}  // namespace

const std::string& family_name(Family f) { return registry().at(f).name; }

Family family_from_name(const std::string& name) {
    for (const auto& [fam, info] : registry()) {
        if (info.name == name) return fam;
    }
    // accept lowercase spellings from the command line
    for (const auto& [fam, info] : registry()) {
        std::string lower = info.name;
        for (auto& ch : lower) ch = static_cast<char>(std::tolower(ch));
        if (lower == name) return fam;
    }
    throw std::domain_error("unknown model family: " + name);
}

const std::vector<std::string>& param_names(Family f) { return registry().at(f).params; }

std::size_t param_count(Family f) { return registry().at(f).params.size(); }

void validate(const ModelSpec& m) {
    const auto& names = param_names(m.family);
    if (m.params.size() != names.size())
        throw std::domain_error("model " + family_name(m.family) + " needs " +
                                std::to_string(names.size()) + " parameters");
    switch (m.family) {
        case Family::Gamma:
        case Family::MOE:
        case Family::NHE:
        case Family::EE:
        case Family::Kappa:
            for (std::size_t j = 0; j < m.params.size(); ++j)
                require_positive(m.params[j], names[j].c_str());
            break;
        case Family::TW:
        case Family::TGE:
            require_positive(m.params[0], names[0].c_str());
            require_positive(m.params[1], names[1].c_str());
            require_unit(m.params[2], names[2].c_str());
            break;
        case Family::TLE:
            require_positive(m.params[0], names[0].c_str());
            if (!(m.params[1] >= 0.0) || !std::isfinite(m.params[1]))
                throw std::domain_error("model parameter theta must be >= 0");
            require_unit(m.params[2], names[2].c_str());
            break;
        case Family::NWTE:
            NwteParams(m.params[0], m.params[1], m.params[2]);  // validates
            break;
    }
}

double model_cdf(const ModelSpec& m, double x) {
    validate(m);
    check_support(x, "model_cdf");
    if (std::isinf(x)) return 1.0;
    const auto& v = m.params;
    switch (m.family) {
        case Family::Gamma:
            return gamma_p(v[0], x / v[1]);
        case Family::MOE: {
            const double E = std::exp(-v[1] * x);
            return -std::expm1(-v[1] * x) / (1.0 - (1.0 - v[0]) * E);
        }
        case Family::NHE:
            return -std::expm1(1.0 - std::pow(1.0 + v[1] * x, v[0]));
        case Family::EE:
            return std::pow(-std::expm1(-v[1] * x), v[0]);
        case Family::TW: {
            const double E = std::exp(-std::pow(x / v[1], v[0]));
            return transmuted_cdf_from_base_survival(E, v[2]);
        }
        case Family::TGE: {
            const double H = std::pow(-std::expm1(-v[1] * x), v[0]);
            return (1.0 + v[2]) * H - v[2] * H * H;
        }
        case Family::TLE: {
            const double E = std::exp(-(v[0] * x + 0.5 * v[1] * x * x));
            return transmuted_cdf_from_base_survival(E, v[2]);
        }
        case Family::Kappa: {
            const double u = std::pow(x / v[2], v[0] * v[1]);
            return std::pow(u / (v[0] + u), 1.0 / v[0]);
        }
        case Family::NWTE:
            return cdf(NwteParams(v[0], v[1], v[2]), x);
    }
    throw std::logic_error("model_cdf: unknown family");
}

double model_log_pdf(const ModelSpec& m, double x) {
    validate(m);
    check_support(x, "model_log_pdf");
    if (x == 0.0 || std::isinf(x)) return -INFINITY;
    const auto& v = m.params;
    switch (m.family) {
        case Family::Gamma:
            return (v[0] - 1.0) * std::log(x) - x / v[1] - v[0] * std::log(v[1]) -
                   std::lgamma(v[0]);
        case Family::MOE: {
            const double E = std::exp(-v[1] * x);
            return std::log(v[0] * v[1]) - v[1] * x - 2.0 * std::log1p(-(1.0 - v[0]) * E);
        }
        case Family::NHE:
            return std::log(v[0] * v[1]) + (v[0] - 1.0) * std::log1p(v[1] * x) + 1.0 -
                   std::pow(1.0 + v[1] * x, v[0]);
        case Family::EE:
            return std::log(v[0] * v[1]) + (v[0] - 1.0) * std::log(-std::expm1(-v[1] * x)) -
                   v[1] * x;
        case Family::TW: {
            const double w = std::pow(x / v[1], v[0]);
            const double E = std::exp(-w);
            return std::log(v[0] / v[1]) + (v[0] - 1.0) * std::log(x / v[1]) - w +
                   log_nonneg(1.0 - v[2] + 2.0 * v[2] * E);
        }
        case Family::TGE: {
            const double H = std::pow(-std::expm1(-v[1] * x), v[0]);
            return std::log(v[0] * v[1]) - v[1] * x +
                   (v[0] - 1.0) * std::log(-std::expm1(-v[1] * x)) +
                   log_nonneg(1.0 + v[2] - 2.0 * v[2] * H);
        }
        case Family::TLE: {
            const double w = v[0] * x + 0.5 * v[1] * x * x;
            const double E = std::exp(-w);
            return std::log(v[0] + v[1] * x) - w + log_nonneg(1.0 - v[2] + 2.0 * v[2] * E);
        }
        case Family::Kappa:
            return std::log(v[0] * v[1] / v[2]) + (v[1] - 1.0) * std::log(x / v[2]) -
                   (v[0] + 1.0) / v[0] * std::log(v[0] + std::pow(x / v[2], v[0] * v[1]));
        case Family::NWTE: {
            const double f = pdf(NwteParams(v[0], v[1], v[2]), x);
            return log_nonneg(f);
        }
    }
    throw std::logic_error("model_log_pdf: unknown family");
}

double model_pdf(const ModelSpec& m, double x) {
    const double lp = model_log_pdf(m, x);
    return std::isfinite(lp) ? std::exp(lp) : 0.0;
}

double model_loglik(const ModelSpec& m, std::span<const double> data) {
    validate(m);
    double total = 0.0;  // empty-sum convention
    for (double x : data) {
        const double lp = model_log_pdf(m, x);
        if (!std::isfinite(lp))
            throw nonfinite_loglik_error("model_loglik: zero density at x = " + std::to_string(x));
        total += lp;
    }
    return total;
}

}  // namespace nwte
