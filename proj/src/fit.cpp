#include "nwte/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "nwte/errors.hpp"
#include "optim.hpp"

namespace nwte {

namespace {

constexpr double kThetaBox = 1.0 - 1e-9;  // transmutation box [-1+1e-9, 1-1e-9]
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ParamKind { positive, unit };

std::vector<ParamKind> param_kinds(Family f) {
    switch (f) {
        case Family::Gamma:
        case Family::MOE:
        case Family::NHE:
        case Family::EE:
            return {ParamKind::positive, ParamKind::positive};
        case Family::Kappa:
            return {ParamKind::positive, ParamKind::positive, ParamKind::positive};
        case Family::TW:
        case Family::TGE:
        case Family::TLE:
            return {ParamKind::positive, ParamKind::positive, ParamKind::unit};
        case Family::NWTE:
            return {ParamKind::positive, ParamKind::positive, ParamKind::unit};
    }
    throw std::logic_error("param_kinds: unknown family");
}

double clamp_exp(double q) { return std::exp(std::clamp(q, -690.0, 690.0)); }

std::vector<double> to_natural(const std::vector<ParamKind>& kinds, const std::vector<double>& q) {
    std::vector<double> v(q.size());
    for (std::size_t j = 0; j < q.size(); ++j)
        v[j] = kinds[j] == ParamKind::positive ? clamp_exp(q[j]) : kThetaBox * std::tanh(q[j]);
    return v;
}

std::vector<double> to_search(const std::vector<ParamKind>& kinds, const std::vector<double>& v) {
    std::vector<double> q(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        q[j] = kinds[j] == ParamKind::positive
                   ? std::log(v[j])
                   : std::atanh(std::clamp(v[j] / kThetaBox, -1.0 + 1e-12, 1.0 - 1e-12));
    return q;
}

// Default multistart boxes, scaled by the sample mean.
std::vector<std::vector<double>> default_starts(Family f, double mean) {
    const std::vector<double> shapes = {0.3, 1.0, 3.0};
    const std::vector<double> rates = {0.3 / mean, 1.0 / mean, 3.0 / mean};
    const std::vector<double> scales = {0.5 * mean, mean, 2.0 * mean};
    const std::vector<double> trans = {-0.8, 0.0, 0.8};
    std::vector<std::vector<double>> starts;
    switch (f) {
        case Family::Gamma:
            for (double a : shapes)
                for (double s : scales) starts.push_back({a, s});
            break;
        case Family::MOE:
        case Family::NHE:
        case Family::EE:
            for (double a : shapes)
                for (double r : rates) starts.push_back({a, r});
            break;
        case Family::TW:
            for (double a : shapes)
                for (double s : scales)
                    for (double t : trans) starts.push_back({a, s, t});
            break;
        case Family::TGE:
            for (double a : shapes)
                for (double r : rates)
                    for (double t : trans) starts.push_back({a, r, t});
            break;
        case Family::TLE:
            for (double b : rates)
                for (double th : {1e-3 / (mean * mean), 0.1 / (mean * mean), 1.0 / (mean * mean)})
                    for (double t : trans) starts.push_back({b, th, t});
            break;
        case Family::Kappa:
            for (double a : {0.05, 0.5, 2.0})
                for (double th : {0.5, 2.0, 10.0})
                    for (double b : {0.2 * mean, mean, 3.0 * mean}) starts.push_back({a, th, b});
            break;
        case Family::NWTE:
            // log-spaced gamma across [1e-2, 1e3] plus the theta grid
            for (double lam : rates)
                for (double g : {0.01, 0.3, 3.0, 30.0, 300.0})
                    for (double t : trans) starts.push_back({lam, g, t});
            break;
    }
    return starts;
}

// Total objective: negative log-likelihood, +inf outside the domain.
double neg_loglik(const ModelSpec& m, std::span<const double> data) {
    try {
        double total = 0.0;
        for (double x : data) {
            const double lp = model_log_pdf(m, x);
            if (!std::isfinite(lp)) return kInf;
            total -= lp;
        }
        return std::isfinite(total) ? total : kInf;
    } catch (const std::exception&) {
        return kInf;
    }
}

// Finite-difference step that keeps v[j] +- h inside the parameter domain.
double fd_step(ParamKind kind, double v) {
    if (kind == ParamKind::positive) return std::max(std::fabs(v), 1e-12) * 1e-6;
    return std::max(std::min(1e-6, 0.5 * (1.0 - std::fabs(v))), 1e-12);
}

// Scale-free score: gradient of the log-likelihood in the transformed
// coordinates (log for positive parameters, the tanh map for bounded ones).
std::vector<double> scaled_score(Family f, const std::vector<ParamKind>& kinds,
                                 const std::vector<double>& v, std::span<const double> data) {
    std::vector<double> grad(v.size(), 0.0);
    if (f == Family::NWTE) {
        const auto raw = nwte_score(NwteParams(v[0], v[1], v[2]), data);
        grad = {raw[0], raw[1], raw[2]};
    } else {
        // central differences on the natural parameters
        for (std::size_t j = 0; j < v.size(); ++j) {
            const double h = fd_step(kinds[j], v[j]);
            auto vp = v, vm = v;
            vp[j] += h;
            vm[j] -= h;
            ModelSpec mp{f, vp}, mm{f, vm};
            grad[j] = (-neg_loglik(mp, data) + neg_loglik(mm, data)) / (2.0 * h);
        }
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (kinds[j] == ParamKind::positive)
            grad[j] *= v[j];
        else
            grad[j] *= 1.0 - v[j] * v[j];  // d theta / d z at theta = tanh(z)
    }
    return grad;
}

// Observed-information standard errors: invert the symmetrized central-difference
// Hessian of -loglik at the optimum.
bool observed_info_std_errors(Family f, const std::vector<double>& v,
                              std::span<const double> data, std::vector<double>& out) {
    const std::size_t d = v.size();
    const auto kinds = param_kinds(f);
    std::vector<std::vector<double>> H(d, std::vector<double>(d, 0.0));
    std::vector<double> h(d);
    for (std::size_t j = 0; j < d; ++j) {
        h[j] = std::max(std::fabs(v[j]), 1e-10) * 1e-4;
        if (kinds[j] == ParamKind::unit)
            h[j] = std::max(std::min(h[j], (1.0 - std::fabs(v[j])) / 3.0), 1e-12);
    }
    auto nll = [&](const std::vector<double>& vv) { return neg_loglik(ModelSpec{f, vv}, data); };
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            auto vpp = v, vpm = v, vmp = v, vmm = v;
            vpp[a] += h[a]; vpp[b] += h[b];
            vpm[a] += h[a]; vpm[b] -= h[b];
            vmp[a] -= h[a]; vmp[b] += h[b];
            vmm[a] -= h[a]; vmm[b] -= h[b];
            const double val = (nll(vpp) - nll(vpm) - nll(vmp) + nll(vmm)) / (4.0 * h[a] * h[b]);
            if (!std::isfinite(val)) return false;
            H[a][b] = H[b][a] = val;
        }
    }
    // invert by Gauss-Jordan with partial pivoting
    std::vector<std::vector<double>> inv(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1.0;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::fabs(H[r][col]) > std::fabs(H[piv][col])) piv = r;
        if (std::fabs(H[piv][col]) < 1e-300) return false;
        std::swap(H[piv], H[col]);
        std::swap(inv[piv], inv[col]);
        const double pv = H[col][col];
        for (std::size_t c = 0; c < d; ++c) {
            H[col][c] /= pv;
            inv[col][c] /= pv;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col) continue;
            const double factor = H[r][col];
            for (std::size_t c = 0; c < d; ++c) {
                H[r][c] -= factor * H[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    out.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (!(inv[j][j] > 0.0)) return false;
        out[j] = std::sqrt(inv[j][j]);
    }
    return true;
}

}  // namespace

double nwte_loglik(const NwteParams& p, std::span<const double> data) {
    const double lam = p.lambda(), g = p.gamma(), th = p.theta();
    const std::size_t n = data.size();
    double sum_x = 0.0, sum_log_weight = 0.0, sum_log_trans = 0.0;
    for (double x : data) {
        if (!(x > 0.0)) throw std::domain_error("nwte_loglik: data must be positive");
        const double y = std::exp(-lam * x);
        const double one_minus_h = -std::expm1(-lam * x) * (1.0 + th * y);
        sum_x += x;
        sum_log_weight += std::log1p(g * one_minus_h);  // log(1 + g - g h)
        const double trans = 1.0 - th + 2.0 * th * y;
        if (!(trans > 0.0)) throw nonfinite_loglik_error("nwte_loglik: zero density term");
        sum_log_trans += std::log(trans);
    }
    return n * (std::log(lam) + std::log(g + 1.0) - std::log(p.normalizer())) +
           sum_log_weight / g - lam * sum_x + sum_log_trans;
}

std::array<double, 3> nwte_score(const NwteParams& p, std::span<const double> data) {
    const double lam = p.lambda(), g = p.gamma(), th = p.theta();
    const double n = static_cast<double>(data.size());
    double d_lam = n / lam, d_gam = 0.0, d_th = 0.0;
    for (double x : data) {
        if (!(x > 0.0)) throw std::domain_error("nwte_score: data must be positive");
        const double y = std::exp(-lam * x);
        const double one_minus_h = -std::expm1(-lam * x) * (1.0 + th * y);
        const double A = 1.0 + g * one_minus_h;  // 1 + g - g h
        const double trans = 1.0 - th + 2.0 * th * y;
        d_lam -= x;
        d_lam -= 2.0 * th * x * y / trans;
        d_lam += x * (2.0 * th * y * y + y * (1.0 - th)) / A;
        d_gam += (one_minus_h / A) / g - std::log(A) / (g * g);
        d_th += (2.0 * y - 1.0) / trans + y * (1.0 - y) / A;
    }
    // n-scaled constant part of the gamma component
    const double log1pg = std::log1p(g);
    d_gam += n * (1.0 / (1.0 + g) +
                  p.norm_pow() * (log1pg - g) / (g * g * p.normalizer()));
    return {d_lam, d_gam, d_th};
}

FitResult fit_mle(Family family, std::span<const double> data, const OptimizerConfig& cfg) {
    const auto kinds = param_kinds(family);
    const std::size_t d = kinds.size();
    if (data.size() < d)
        throw std::domain_error("fit_mle: need at least as many observations as parameters");
    for (double x : data)
        if (!(x > 0.0)) throw std::domain_error("fit_mle: data must be positive");

    const double mean = std::accumulate(data.begin(), data.end(), 0.0) / data.size();
    auto starts = default_starts(family, mean);
    if (cfg.multistart_count > 0 && static_cast<std::size_t>(cfg.multistart_count) < starts.size())
        starts.resize(cfg.multistart_count);

    auto in_bounds = [&](const std::vector<double>& v) {
        for (std::size_t j = 0; j < d; ++j) {
            if (j < cfg.lower.size() && v[j] < cfg.lower[j]) return false;
            if (j < cfg.upper.size() && v[j] > cfg.upper[j]) return false;
        }
        return true;
    };
    auto objective = [&](const std::vector<double>& q) {
        const auto v = to_natural(kinds, q);
        if (!in_bounds(v)) return kInf;
        try {
            return neg_loglik(ModelSpec{family, v}, data);
        } catch (const std::exception&) {
            return kInf;
        }
    };

    detail::NmOptions nm;
    nm.fatol = cfg.function_tolerance;
    nm.xatol = cfg.parameter_tolerance;
    nm.max_evaluations = cfg.max_evaluations;

    detail::NmResult best;
    best.fval = INFINITY;
    for (const auto& s : starts) {
        auto res = detail::nelder_mead(objective, to_search(kinds, s), nm);
        if (res.fval < best.fval) best = res;
    }
    // polish the winner from a fresh simplex
    for (int round = 0; round < 2; ++round) {
        detail::NmOptions tight = nm;
        tight.initial_step = round == 0 ? 0.05 : 0.005;
        auto res = detail::nelder_mead(objective, best.x, tight);
        if (res.fval <= best.fval) best = res;
    }

    FitResult out;
    out.model.family = family;
    out.model.params = to_natural(kinds, best.x);
    out.estimates = out.model.params;
    out.loglik = -best.fval;
    out.iterations = best.iterations;
    const auto score = scaled_score(family, kinds, out.estimates, data);
    out.score_norm_at_optimum = 0.0;
    for (double s : score)
        out.score_norm_at_optimum = std::max(out.score_norm_at_optimum, std::fabs(s));
    out.converged = std::isfinite(out.loglik) && best.converged &&
                    out.score_norm_at_optimum < cfg.score_tolerance;
    out.std_errors_available = observed_info_std_errors(family, out.estimates, data, out.std_errors);
    if (!out.std_errors_available)
        out.std_errors.assign(d, std::numeric_limits<double>::quiet_NaN());
    return out;
}

}  // namespace nwte
