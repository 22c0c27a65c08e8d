#include "nwte/series.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "nwte/errors.hpp"
#include "nwte/special.hpp"

namespace nwte {

namespace {

double pow_sign(double base, int k) {
    // base^k for |base| <= ~2 and k >= 0 without pow's negative-base pitfalls
    double out = 1.0, b = base;
    for (int n = k; n > 0; n >>= 1) {
        if (n & 1) out *= b;
        b *= b;
    }
    return out;
}

double unfactored(const NwteParams& p, double nu, int i, int k) {
    if (i < 0 || k < 0 || k > i) throw std::domain_error("coefficient: need 0 <= k <= i");
    const double s = p.gamma() / (1.0 + p.gamma());
    return binomial_general(nu, i) * binomial(i, k) * pow_sign(-s, i) *
           pow_sign(1.0 - p.theta(), i - k) * pow_sign(p.theta(), k);
}

[[noreturn]] void fail_truncation(const char* what, const SeriesSpec& spec) {
    throw truncation_error(std::string(what) + ": series not converged within " +
                           std::to_string(spec.max_outer_index) +
                           " outer terms at tolerance " + std::to_string(spec.abs_tolerance));
}

// Multiplies binom(nu, i) (-s)^i step by step; the factors are combined
// before multiplying so huge nu never overflows on its own.
class OuterPrefactor {
public:
    OuterPrefactor(double nu, double s) : nu_(nu), s_(s) {}
    double value() const { return value_; }
    void advance() {
        value_ *= (nu_ - i_) / (i_ + 1.0) * (-s_);
        ++i_;
    }

private:
    double nu_, s_;
    double value_ = 1.0;
    int i_ = 0;
};

}  // namespace

double coefficient_h(const NwteParams& p, int i, int k) {
    return unfactored(p, 1.0 / p.gamma() + 1.0, i, k);
}

double coefficient_a(const NwteParams& p, int i, int k) {
    return unfactored(p, 1.0 / p.gamma(), i, k);
}

double coefficient_b(const NwteParams& p, int i, int k) {
    return p.lambda() * p.norm_pow() / p.normalizer() * coefficient_a(p, i, k);
}

double coefficient_c(const NwteParams& p, double beta, int i, int k) {
    return unfactored(p, beta / p.gamma(), i, k);
}

double coefficient_d(double theta, double beta, int j, int l) {
    if (j < 0 || l < 0 || l > j) throw std::domain_error("coefficient_d: need 0 <= l <= j");
    return binomial_general(beta, j) * binomial(j, l) * pow_sign(-theta, j) * pow_sign(-2.0, l);
}

double coefficient_f(const NwteParams& p, double beta, int i, int k, int j, int l) {
    const double scale = std::pow(p.lambda() * p.norm_pow() / p.normalizer(), beta);
    return scale * coefficient_c(p, beta, i, k) * coefficient_d(p.theta(), beta, j, l);
}

double coefficient_g(const NwteParams& p, int i, int k, int m) {
    if (m < 0) throw std::domain_error("coefficient_g: need m >= 0");
    const double nu = m * (1.0 / p.gamma() + 1.0) + 1.0 / p.gamma();
    return p.lambda() * unfactored(p, nu, i, k);
}

double coefficient_h_factored(const NwteParams& p, int i, int k, const SeriesSpec& spec) {
    if (1.0 - std::fabs(p.theta()) < spec.theta_singularity_guard)
        throw std::domain_error("coefficient_h_factored: theta too close to +-1 for the factored form");
    return binomial_general(1.0 / p.gamma() + 1.0, i) * binomial(i, k) *
           pow_sign((p.gamma() * p.theta() - p.gamma()) / (1.0 + p.gamma()), i) *
           pow_sign(p.theta() / (1.0 - p.theta()), k);
}

// ---------------------------------------------------------------------------
// Pointwise expansions.  The inner k-sum of row i collapses exactly:
//   sum_k binom(i,k) (1-th)^{i-k} (th y)^k = (1 - th + th y)^i,
// so each outer row is P_i h(y)^i with h(y) = y (1 - th + th y) and
// P_i = binom(nu, i) (-s)^i.
// ---------------------------------------------------------------------------

namespace {

// Partial sum of sum_{i>=i0} P_i h^i under the spec stop rule.
double outer_power_sum(double nu, double s, double h, int i0, const SeriesSpec& spec,
                       const char* what) {
    OuterPrefactor pref(nu, s);
    double hp = 1.0;
    double total = 0.0;
    int below = 0;
    for (int i = 0; i <= spec.max_outer_index; ++i) {
        if (i >= i0) {
            const double term = pref.value() * hp;
            total += term;
            below = std::fabs(term) < spec.abs_tolerance / 10.0 ? below + 1 : 0;
            if (below >= 3) return total;
        }
        pref.advance();
        hp *= h;
    }
    fail_truncation(what, spec);
}

}  // namespace

double series_cdf(const NwteParams& p, double x, const SeriesSpec& spec) {
    if (std::isnan(x) || x < 0.0) throw std::domain_error("series_cdf: x must be >= 0");
    if (std::isinf(x)) return 1.0;
    const double y = std::exp(-p.lambda() * x);
    const double h = y * (1.0 - p.theta() + p.theta() * y);
    const double inner = outer_power_sum(1.0 / p.gamma() + 1.0, p.gamma() / (1.0 + p.gamma()),
                                         h, 0, spec, "series_cdf");
    return (p.norm_pow() * inner - 1.0) / p.normalizer();
}

double series_survival(const NwteParams& p, double x, const SeriesSpec& spec) {
    if (std::isnan(x) || x < 0.0) throw std::domain_error("series_survival: x must be >= 0");
    if (std::isinf(x)) return 0.0;
    const double y = std::exp(-p.lambda() * x);
    const double h = y * (1.0 - p.theta() + p.theta() * y);
    // 1 - sum_i P_i h^i == -sum_{i>=1} P_i h^i, summed directly for the tail
    const double inner = outer_power_sum(1.0 / p.gamma() + 1.0, p.gamma() / (1.0 + p.gamma()),
                                         h, 1, spec, "series_survival");
    return p.norm_pow() / p.normalizer() * -inner;
}

double series_pdf(const NwteParams& p, double x, const SeriesSpec& spec) {
    if (std::isnan(x) || x < 0.0) throw std::domain_error("series_pdf: x must be >= 0");
    if (std::isinf(x)) return 0.0;
    const double y = std::exp(-p.lambda() * x);
    const double h = y * (1.0 - p.theta() + p.theta() * y);
    const double inner = outer_power_sum(1.0 / p.gamma(), p.gamma() / (1.0 + p.gamma()),
                                         h, 0, spec, "series_pdf");
    return p.lambda() * p.norm_pow() / p.normalizer() * inner * y *
           (1.0 - p.theta() + 2.0 * p.theta() * y);
}

double series_hazard(const NwteParams& p, double x, const SeriesSpec& spec) {
    return series_pdf(p, x, spec) / series_survival(p, x, spec);
}

// ---------------------------------------------------------------------------
// Moment-type engines.  All at unit rate; the caller applies lambda scaling.
//
// Everything reduces to integrals
//   K^{(r)}_j(p; v0) = (1/r!) int_{v0}^1 v^p (-ln v)^r (1-th+th v)^j dv
//   M^{(r)}_j(p; v0) = (1/r!) int_0^{v0} ...
//   V_{j,m}(p)       = int_0^1 v^p (1-th+th v)^j (1-2v)^m dv
// evaluated through recurrences whose terms are nonnegative (K, M) or
// contractive (V), so negative theta never produces cancelling partial sums.
// ---------------------------------------------------------------------------

namespace detail {

namespace {

// K chains at fixed p: out[j] for j = 0..jmax, r-lifted in place.
void kr_chain(double th, double pv, int jmax, int r, double v0, std::vector<double>& out,
              std::vector<double>& scratch) {
    out.resize(jmax + 1);
    const double w0 = 1.0 - th + th * v0;
    const double v0p = v0 > 0.0 ? std::pow(v0, pv + 1.0) : 0.0;
    // r = 0 layer
    {
        double w0j = 1.0;
        out[0] = (1.0 - v0p) / (pv + 1.0);
        for (int j = 1; j <= jmax; ++j) {
            w0j *= w0;
            out[j] = (1.0 - v0p * w0j + j * (1.0 - th) * out[j - 1]) / (pv + 1.0 + j);
        }
    }
    if (r == 0 || v0p == 0.0) {
        // with v0 = 0 the boundary terms vanish and the lift simplifies
        for (int rr = 1; rr <= r; ++rr) {
            scratch = out;
            out[0] = scratch[0] / (pv + 1.0);
            for (int j = 1; j <= jmax; ++j)
                out[j] = (scratch[j] + j * (1.0 - th) * out[j - 1]) / (pv + 1.0 + j);
        }
        return;
    }
    const double L0 = -std::log(v0);
    double Lr = 1.0;
    for (int rr = 1; rr <= r; ++rr) {
        Lr *= L0 / rr;
        const double cr = v0p * Lr;
        scratch = out;
        double w0j = 1.0;
        out[0] = (scratch[0] - cr) / (pv + 1.0);
        for (int j = 1; j <= jmax; ++j) {
            w0j *= w0;
            out[j] = (scratch[j] + j * (1.0 - th) * out[j - 1] - cr * w0j) / (pv + 1.0 + j);
        }
    }
}

// Complementary chains over [0, v0].
void mr_chain(double th, double pv, int jmax, int r, double v0, std::vector<double>& out,
              std::vector<double>& scratch) {
    out.resize(jmax + 1);
    const double w0 = 1.0 - th + th * v0;
    const double v0p = std::pow(v0, pv + 1.0);
    {
        double w0j = 1.0;
        out[0] = v0p / (pv + 1.0);
        for (int j = 1; j <= jmax; ++j) {
            w0j *= w0;
            out[j] = (v0p * w0j + j * (1.0 - th) * out[j - 1]) / (pv + 1.0 + j);
        }
    }
    const double L0 = -std::log(v0);
    double Lr = 1.0;
    for (int rr = 1; rr <= r; ++rr) {
        Lr *= L0 / rr;
        const double cr = v0p * Lr;
        scratch = out;
        double w0j = 1.0;
        out[0] = (scratch[0] + cr) / (pv + 1.0);
        for (int j = 1; j <= jmax; ++j) {
            w0j *= w0;
            out[j] = (scratch[j] + j * (1.0 - th) * out[j - 1] + cr * w0j) / (pv + 1.0 + j);
        }
    }
}

enum class Part { full, lower, upper };

// sum_i P_i [ (1-th) C_i(p=i) + 2 th C_i(p=i+1) ] with C the K (full/lower)
// or M (upper) chain value at j = i.
double moment_driver(const NwteParams& p, int r, double v0, Part part, const SeriesSpec& spec,
                     const char* what) {
    const double th = p.theta();
    const double s = p.gamma() / (1.0 + p.gamma());
    OuterPrefactor pref(1.0 / p.gamma(), s);
    std::vector<double> c1, c2, scratch;
    c1.reserve(spec.max_outer_index + 1);
    c2.reserve(spec.max_outer_index + 1);
    const double scale = p.norm_pow() / p.normalizer();   // times r! applied by caller
    double total = 0.0;
    int below = 0;
    for (int i = 0; i <= spec.max_outer_index; ++i) {
        if (part == Part::upper) {
            mr_chain(th, i, i, r, v0, c1, scratch);
            mr_chain(th, i + 1.0, i, r, v0, c2, scratch);
        } else {
            const double lower_v0 = part == Part::full ? 0.0 : v0;
            kr_chain(th, i, i, r, lower_v0, c1, scratch);
            kr_chain(th, i + 1.0, i, r, lower_v0, c2, scratch);
        }
        const double row = pref.value() * ((1.0 - th) * c1[i] + 2.0 * th * c2[i]);
        total += row;
        below = std::fabs(scale * row) < spec.abs_tolerance / 10.0 ? below + 1 : 0;
        if (below >= 3) return scale * total;
        pref.advance();
    }
    fail_truncation(what, spec);
}

double factorial(int r) {
    double f = 1.0;
    for (int j = 2; j <= r; ++j) f *= j;
    return f;
}

}  // namespace

double moment_series(const NwteParams& p, int r, const SeriesSpec& spec) {
    return factorial(r) * moment_driver(p, r, 0.0, Part::full, spec, "moment series");
}

double lower_moment_series(const NwteParams& p, int r, double lt, const SeriesSpec& spec) {
    if (lt <= 0.0) return 0.0;
    if (std::isinf(lt)) return moment_series(p, r, spec);
    const double v0 = std::exp(-lt);
    return factorial(r) * moment_driver(p, r, v0, Part::lower, spec, "incomplete moment series");
}

double upper_moment_series(const NwteParams& p, int r, double lt, const SeriesSpec& spec) {
    if (lt <= 0.0) return moment_series(p, r, spec);
    if (std::isinf(lt)) return 0.0;
    const double v0 = std::exp(-lt);
    return factorial(r) * moment_driver(p, r, v0, Part::upper, spec, "tail moment series");
}

double mgf_series(const NwteParams& p, double tau, const SeriesSpec& spec) {
    const double th = p.theta();
    const double s = p.gamma() / (1.0 + p.gamma());
    OuterPrefactor pref(1.0 / p.gamma(), s);
    std::vector<double> c1, c2, scratch;
    const double scale = p.norm_pow() / p.normalizer();
    double total = 0.0;
    int below = 0;
    for (int i = 0; i <= spec.max_outer_index; ++i) {
        kr_chain(th, i - tau, i, 0, 0.0, c1, scratch);
        kr_chain(th, i + 1.0 - tau, i, 0, 0.0, c2, scratch);
        const double row = pref.value() * ((1.0 - th) * c1[i] + 2.0 * th * c2[i]);
        total += row;
        below = std::fabs(scale * row) < spec.abs_tolerance / 10.0 ? below + 1 : 0;
        if (below >= 3) return scale * total;
        pref.advance();
    }
    fail_truncation("mgf series", spec);
}

namespace {

// Outer index needed for the pdf-prefactor expansion at the requested
// tolerance (gauged on the normalization row r = 0).
int outer_depth(const NwteParams& p, const SeriesSpec& spec) {
    const double th = p.theta();
    const double s = p.gamma() / (1.0 + p.gamma());
    OuterPrefactor pref(1.0 / p.gamma(), s);
    std::vector<double> c1, c2, scratch;
    const double scale = p.norm_pow() / p.normalizer();
    int below = 0;
    for (int i = 0; i <= spec.max_outer_index; ++i) {
        kr_chain(th, i, i, 0, 0.0, c1, scratch);
        kr_chain(th, i + 1.0, i, 0, 0.0, c2, scratch);
        const double row = pref.value() * ((1.0 - th) * c1[i] + 2.0 * th * c2[i]);
        below = std::fabs(scale * row) < spec.abs_tolerance / 10.0 ? below + 1 : 0;
        if (below >= 3) return i;
        pref.advance();
    }
    fail_truncation("series outer expansion", spec);
}

}  // namespace

double shannon_series(const NwteParams& p, const SeriesSpec& spec) {
    const double th = p.theta();
    const double g = p.gamma();
    const double s = g / (1.0 + g);
    const double scale = p.norm_pow() / p.normalizer();
    const int imax = outer_depth(p, spec);
    const int mmax = spec.max_outer_index;

    // cache P_i
    std::vector<double> P(imax + 1);
    {
        OuterPrefactor pref(1.0 / g, s);
        for (int i = 0; i <= imax; ++i) {
            P[i] = pref.value();
            pref.advance();
        }
    }

    // D1(q) = int v^q (..)^q dv, D2(q) = int v^{q+1} (..)^q dv for q <= imax+mmax
    const int qmax = imax + mmax;
    std::vector<double> D1(qmax + 1), D2(qmax + 1), chain, scratch;
    for (int q = 0; q <= qmax; ++q) {
        kr_chain(th, q, q, 0, 0.0, chain, scratch);
        D1[q] = chain[q];
        kr_chain(th, q + 1.0, q, 0, 0.0, chain, scratch);
        D2[q] = chain[q];
    }

    // I1 = int f log(1 - s h(y)) dx = -sum_m (s^m / m) E[h(Y)^m]
    double I1 = 0.0;
    {
        double sm = 1.0;
        int below = 0;
        bool done = false;
        for (int m = 1; m <= mmax && !done; ++m) {
            sm *= s;
            double eh = 0.0;
            for (int i = 0; i <= imax; ++i) {
                const int q = i + m;
                eh += P[i] * ((1.0 - th) * D1[q] + 2.0 * th * D2[q]);
            }
            const double term = -(sm / m) * scale * eh;
            I1 += term;
            below = std::fabs(term) < spec.abs_tolerance / 10.0 ? below + 1 : 0;
            done = below >= 3;
        }
        if (!done) fail_truncation("shannon series (weight log)", spec);
    }

    // I2 = int f log(1 - th (1 - 2y)) dx = -sum_m (th^m / m) E[(1-2Y)^m]
    double I2 = 0.0;
    if (th != 0.0) {
        // E2y[m] accumulated over outer rows; V chains rebuilt per i because
        // the exponent p tracks i.
        std::vector<double> e2y(mmax + 1, 0.0);
        std::vector<double> vprev, vcur;
        for (int i = 0; i <= imax; ++i) {
            for (int half = 0; half < 2; ++half) {
                const double pv = i + half;  // p = i and p = i + 1
                vprev.assign(mmax + 1, 0.0);
                for (int ii = 0; ii <= i; ++ii) {
                    vcur.resize(mmax + 1);
                    double sign = 1.0;
                    for (int m = 0; m <= mmax; ++m) {
                        double acc = sign;
                        if (ii > 0) acc += ii * (1.0 - th) * vprev[m];
                        if (m > 0) acc += m * vcur[m - 1];
                        vcur[m] = acc / (pv + 1.0 + ii + m);
                        sign = -sign;
                    }
                    std::swap(vprev, vcur);
                }
                const double wgt = half == 0 ? (1.0 - th) : 2.0 * th;
                for (int m = 0; m <= mmax; ++m) e2y[m] += wgt * P[i] * vprev[m];
            }
        }
        double thm = 1.0;
        int below = 0;
        bool done = false;
        for (int m = 1; m <= mmax && !done; ++m) {
            thm *= th;
            const double term = -(thm / m) * scale * e2y[m];
            I2 += term;
            below = std::fabs(term) < spec.abs_tolerance / 10.0 ? below + 1 : 0;
            done = below >= 3;
        }
        if (!done) fail_truncation("shannon series (transmutation log)", spec);
    }

    const double mu1 = moment_series(p, 1, spec);
    return -std::log(scale) - I1 / g + mu1 - I2;
}

double f_power_integral_series(const NwteParams& p, double beta, const SeriesSpec& spec) {
    const double th = p.theta();
    const double g = p.gamma();
    const double s = g / (1.0 + g);
    const double scale = std::pow(p.norm_pow() / p.normalizer(), beta);
    const int jcap = spec.max_outer_index;

    // binom(beta, j) (-th)^j
    std::vector<double> bj(jcap + 1);
    bj[0] = 1.0;
    for (int j = 0; j < jcap; ++j) bj[j + 1] = bj[j] * ((beta - j) / (j + 1.0)) * (-th);

    OuterPrefactor pref(beta / g, s);
    std::vector<double> vprev, vcur;
    double total = 0.0;
    int below = 0;
    for (int i = 0; i <= spec.max_outer_index; ++i) {
        const double pv = i + beta - 1.0;
        vprev.assign(jcap + 1, 0.0);
        for (int ii = 0; ii <= i; ++ii) {
            vcur.resize(jcap + 1);
            double sign = 1.0;
            for (int m = 0; m <= jcap; ++m) {
                double acc = sign;
                if (ii > 0) acc += ii * (1.0 - th) * vprev[m];
                if (m > 0) acc += m * vcur[m - 1];
                vcur[m] = acc / (pv + 1.0 + ii + m);
                sign = -sign;
            }
            std::swap(vprev, vcur);
        }
        // inner j-sum with its own tail check
        double inner = 0.0;
        int jbelow = 0;
        bool jdone = th == 0.0;
        for (int j = 0; j <= jcap; ++j) {
            const double t = bj[j] * vprev[j];
            inner += t;
            if (th == 0.0) break;  // series terminates at j = 0
            jbelow = std::fabs(t) < spec.abs_tolerance / 100.0 ? jbelow + 1 : 0;
            if (jbelow >= 3) {
                jdone = true;
                break;
            }
        }
        if (!jdone) fail_truncation("f^beta series (transmutation factor)", spec);
        const double row = pref.value() * inner;
        total += row;
        below = std::fabs(scale * row) < spec.abs_tolerance / 10.0 ? below + 1 : 0;
        if (below >= 3) return scale * total;
        pref.advance();
    }
    fail_truncation("f^beta series", spec);
}

}  // namespace detail

}  // namespace nwte
