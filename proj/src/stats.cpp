#include "covertsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "covertsim/population.hpp"
#include "covertsim/protocols.hpp"

namespace covertsim {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln(sqrt(2*pi))
constexpr double kSqrt2 = 1.4142135623730950488;

double log_pdf(double x) { return -0.5 * x * x - kLogSqrt2Pi; }
double pdf(double x) { return std::exp(log_pdf(x)); }

// Composite Simpson over [lo, hi] with an even number of panels.
template <typename F>
double simpson(F f, double lo, double hi, int panels) {
    const double h = (hi - lo) / panels;
    double sum = f(lo) + f(hi);
    for (int i = 1; i < panels; ++i)
        sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double normal_tail(double z) { return 0.5 * std::erfc(z / kSqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal_quantile: p must lie in (0,1)");
    // rational approximation (relative error ~1e-9)...
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double pl = 0.02425;
    double x;
    if (p < pl) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - pl) {
        const double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // ...polished with one Newton step against the cdf
    const double err = normal_cdf(x) - p;
    x -= err / pdf(x);
    return x;
}

double kl_gauss(double epsilon) {
    if (!std::isfinite(epsilon)) throw std::invalid_argument("kl_gauss: non-finite epsilon");
    return 0.5 * epsilon * epsilon;
}

double tv_gauss(double epsilon, int copies) {
    if (epsilon < 0.0) throw std::invalid_argument("tv_gauss: epsilon must be >= 0");
    if (copies < 1) throw std::invalid_argument("tv_gauss: copies must be >= 1");
    return 2.0 * normal_cdf(epsilon * std::sqrt(static_cast<double>(copies)) / 2.0) - 1.0;
}

double pinsker_bound(double epsilon) {
    if (epsilon < 0.0) throw std::invalid_argument("pinsker_bound: epsilon must be >= 0");
    return epsilon / kSqrt2;
}

double tv_gauss_quadrature(double epsilon) {
    if (epsilon < 0.0)
        throw std::invalid_argument("tv_gauss_quadrature: epsilon must be >= 0");
    // (1/2) integral of |p0 - p1|. The integrand has a kink where the
    // densities cross (x = eps/2), so integrate the smooth halves separately.
    auto f = [epsilon](double x) {
        return 0.5 * std::abs(pdf(x) - pdf(x - epsilon));
    };
    const double split = epsilon / 2.0;
    return simpson(f, split - 12.0, split, 20000) +
           simpson(f, split, split + 12.0, 20000);
}

double kl_gauss_quadrature(double epsilon) {
    if (!std::isfinite(epsilon))
        throw std::invalid_argument("kl_gauss_quadrature: non-finite epsilon");
    // integral of p0 * (log p0 - log p1), log-densities evaluated directly
    auto f = [epsilon](double x) {
        const double lp0 = log_pdf(x);
        const double lp1 = log_pdf(x - epsilon);
        return std::exp(lp0) * (lp0 - lp1);
    };
    return simpson(f, -14.0, 14.0 + epsilon, 40000);
}

PsiBoundReport psi_bound_check(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw std::invalid_argument("psi_bound_check: epsilon must lie in (0, 0.5)");
    PsiBoundReport r;
    r.epsilon = epsilon;
    r.psi = normal_tail(epsilon);
    r.lower = (1.0 - 2.0 * epsilon) / 2.0;
    r.upper = (1.0 - (2.0 / 3.0) * epsilon) / 2.0;
    r.approximation =
        (1.0 - std::sqrt(1.0 - std::exp(-std::sqrt(M_PI / 8.0) * epsilon * epsilon))) / 2.0;
    const double slack = 1.0 / 500.0;
    r.ok = r.psi > r.lower && r.psi < r.upper &&
           std::abs(r.psi - r.approximation) <= slack &&
           r.approximation - slack > r.lower && r.approximation + slack < r.upper;
    return r;
}

double chernoff_reference(ChernoffBound bound, const ChernoffArgs& args) {
    const double eps = args.epsilon, q = args.q, deg = args.degree;
    switch (bound) {
        case ChernoffBound::QsOutputRisk:
            if (deg <= 0) throw std::invalid_argument("chernoff: degree must be positive");
            return 2.0 * std::exp(-9.0 * deg * eps * eps / 200.0);
        case ChernoffBound::MedianFewRisk:
            if (deg <= 0) throw std::invalid_argument("chernoff: degree must be positive");
            return std::exp(-0.015 * (1.0 - 2.0 * eps) * eps * eps * deg);
        case ChernoffBound::MedianManyFailure:
            if (deg <= 0) throw std::invalid_argument("chernoff: degree must be positive");
            return std::exp(-0.036 * eps * eps * deg);
        case ChernoffBound::SiOutputRisk:
            if (deg <= 0 || q < 0)
                throw std::invalid_argument("chernoff: need degree > 0 and q >= 0");
            return std::exp(-(3.0 / 20.0) * q * deg);
    }
    throw std::invalid_argument("chernoff_reference: unknown bound");
}

Interval wilson_interval(double successes, double n, double confidence) {
    if (!(n > 0.0)) throw std::invalid_argument("wilson_interval: n must be positive");
    if (successes < 0.0 || successes > n)
        throw std::invalid_argument("wilson_interval: successes out of [0, n]");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("wilson_interval: confidence must lie in (0,1)");
    const double z = normal_quantile(0.5 + confidence / 2.0);
    const double p = successes / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = p + z2n / 2.0;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n));
    return {std::max(0.0, (center - half) / denom), std::min(1.0, (center + half) / denom)};
}

// ---------------------------------------------------------------------------
// Estimators
// ---------------------------------------------------------------------------

double Estimate::standard_error() const {
    if (effective_n <= 0.0) return 0.0;
    return std::sqrt(value * (1.0 - value) / effective_n);
}

double MessageRiskEstimate::standard_error() const {
    const double a = rebel_rate.standard_error();
    const double b = obedient_rate.standard_error();
    return std::sqrt(a * a + b * b);
}

namespace {

constexpr double kConfidence = 0.99;

// Pooled proportion over per-trial (successes y_i, exposures m_i) with a
// cluster adjustment: indicators within a trial share senders and are
// correlated, so the interval width comes from the between-trial variance of
// the ratio estimator rather than from the raw pool size.
Estimate pooled_proportion(std::span<const TrialCounts> trials,
                           std::int64_t TrialCounts::* y_field,
                           std::int64_t TrialCounts::* m_field) {
    double S = 0.0, M = 0.0;
    std::int64_t used = 0;
    for (const auto& t : trials) {
        S += static_cast<double>(t.*y_field);
        M += static_cast<double>(t.*m_field);
        if (t.*m_field > 0) ++used;
    }
    if (M <= 0.0)
        throw std::invalid_argument("estimate: empty pool (no exposed agents in any trial)");
    Estimate e;
    e.successes = S;
    e.n = M;
    e.value = S / M;
    e.effective_n = M;
    if (used >= 2 && e.value > 0.0 && e.value < 1.0) {
        const double mbar = M / static_cast<double>(used);
        double ss = 0.0;
        for (const auto& t : trials) {
            const double r = static_cast<double>(t.*y_field) -
                             e.value * static_cast<double>(t.*m_field);
            ss += r * r;
        }
        const double var_p =
            ss / (static_cast<double>(used) * static_cast<double>(used - 1) * mbar * mbar);
        if (var_p > 0.0) {
            const double eff = e.value * (1.0 - e.value) / var_p;
            e.effective_n = std::clamp(eff, 1.0, M);
        }
    }
    e.ci99 = wilson_interval(e.value * e.effective_n, e.effective_n, kConfidence);
    return e;
}

void check_regime(std::span<const TrialCounts> trials, Regime expected,
                  const char* who) {
    for (const auto& t : trials)
        if (classify_regime(t.rho) != expected)
            throw std::invalid_argument(std::string(who) +
                                        ": trial batch is outside the required regime "
                                        "(pass nonstandard_regime to override)");
}

}  // namespace

Estimate estimate_success(std::span<const TrialCounts> trials, bool nonstandard_regime,
                          int min_trials) {
    if (static_cast<int>(trials.size()) < min_trials)
        throw std::invalid_argument("estimate_success: too few trials");
    if (!nonstandard_regime) check_regime(trials, Regime::Many, "estimate_success");
    std::int64_t wins = 0;
    for (const auto& t : trials)
        wins += (3 * t.many >= t.rebels && t.rebels > 0) ? 1 : 0;  // fraction >= 1/3, exact
    Estimate e;
    e.successes = static_cast<double>(wins);
    e.n = static_cast<double>(trials.size());
    e.effective_n = e.n;  // trials are independent by construction
    e.value = e.successes / e.n;
    e.ci99 = wilson_interval(e.successes, e.n, kConfidence);
    return e;
}

Estimate pooled_many_rate(std::span<const TrialCounts> trials, Pool pool) {
    return pool == Pool::DegreeGated
               ? pooled_proportion(trials, &TrialCounts::many, &TrialCounts::gated_rebels)
               : pooled_proportion(trials, &TrialCounts::many, &TrialCounts::rebels);
}

Estimate estimate_output_risk(std::span<const TrialCounts> trials, Pool pool,
                              bool nonstandard_regime) {
    if (trials.empty()) throw std::invalid_argument("estimate_output_risk: no trials");
    if (!nonstandard_regime) check_regime(trials, Regime::Few, "estimate_output_risk");
    return pooled_many_rate(trials, pool);
}

Estimate pooled_huge_rate(std::span<const TrialCounts> trials) {
    return pooled_proportion(trials, &TrialCounts::huge_broadcasts, &TrialCounts::rebels);
}

namespace {

// Materializes one arrest pool as per-trial (arrests, pool size) counts so the
// shared cluster-adjusted helper can run on it.
Estimate arrest_rate(std::span<const TrialCounts> trials, int police_index,
                     bool rebels) {
    if (trials.empty()) throw std::invalid_argument("arrest rate: no trials");
    for (const auto& t : trials)
        if (police_index < 0 || police_index >= static_cast<int>(t.arrests.size()))
            throw std::invalid_argument("arrest rate: police index out of range");
    std::vector<TrialCounts> pool(trials.size());
    for (std::size_t i = 0; i < trials.size(); ++i) {
        pool[i].many = rebels ? trials[i].arrests[police_index].rebel_arrests
                              : trials[i].arrests[police_index].obedient_arrests;
        pool[i].gated_rebels = rebels ? trials[i].rebels : trials[i].obedient;
    }
    return pooled_proportion(pool, &TrialCounts::many, &TrialCounts::gated_rebels);
}

}  // namespace

Estimate pooled_rebel_arrest_rate(std::span<const TrialCounts> trials,
                                  int police_index) {
    return arrest_rate(trials, police_index, true);
}

Estimate pooled_obedient_arrest_rate(std::span<const TrialCounts> trials,
                                     int police_index) {
    return arrest_rate(trials, police_index, false);
}

MessageRiskEstimate estimate_message_risk(std::span<const TrialCounts> trials,
                                          int police_index) {
    MessageRiskEstimate m;
    m.rebel_rate = arrest_rate(trials, police_index, true);
    m.obedient_rate = arrest_rate(trials, police_index, false);
    m.value = m.rebel_rate.value - m.obedient_rate.value;
    const double z = normal_quantile(0.5 + kConfidence / 2.0);
    const double se = m.standard_error();
    m.ci99 = {std::max(-1.0, m.value - z * se), std::min(1.0, m.value + z * se)};
    return m;
}

// ---------------------------------------------------------------------------
// Exact finite-sample predictions
// ---------------------------------------------------------------------------

double binomial_tail_above(int n, double p, double threshold) {
    if (n < 0) throw std::invalid_argument("binomial_tail_above: n must be >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binomial_tail_above: p must lie in [0,1]");
    const double kf = std::floor(threshold) + 1.0;  // strict: P(X >= kf)
    if (kf <= 0.0) return 1.0;
    if (kf > n) return 0.0;
    const int k0 = static_cast<int>(kf);
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;  // kf <= n, so X = n clears it
    const double lp = std::log(p), lq = std::log1p(-p);
    const double lgn = std::lgamma(n + 1.0);
    // accumulate the smaller side for accuracy
    const bool upper_is_small = k0 > static_cast<int>(p * n) + 1;
    double sum = 0.0;
    if (upper_is_small) {
        for (int k = k0; k <= n; ++k)
            sum += std::exp(lgn - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                            k * lp + (n - k) * lq);
        return std::min(1.0, sum);
    }
    for (int k = 0; k < k0; ++k)
        sum += std::exp(lgn - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                        k * lp + (n - k) * lq);
    return std::clamp(1.0 - sum, 0.0, 1.0);
}

double qs_many_prob(double epsilon, double rho, int deg) {
    if (deg < 1) throw std::invalid_argument("qs_many_prob: degree must be >= 1");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("qs_many_prob: rho must lie in [0,1]");
    // mean signal = eps*R/deg + N(0, 1/deg), R ~ Bin(deg, rho); exact mixture
    const double sq = std::sqrt(static_cast<double>(deg));
    if (rho == 0.0) return normal_tail(0.5 * epsilon * sq);
    if (rho == 1.0) return normal_tail(-0.5 * epsilon * sq);
    const double lp = std::log(rho), lq = std::log1p(-rho);
    const double lgn = std::lgamma(deg + 1.0);
    double sum = 0.0;
    for (int r = 0; r <= deg; ++r) {
        const double lpmf = lgn - std::lgamma(r + 1.0) - std::lgamma(deg - r + 1.0) +
                            r * lp + (deg - r) * lq;
        if (lpmf < -45.0) continue;  // pmf < 3e-20, cannot move the sum
        sum += std::exp(lpmf) *
               normal_tail((0.5 * epsilon - epsilon * r / deg) * sq);
    }
    return std::min(1.0, sum);
}

double qs_many_prob_fixed_mix(double epsilon, double rho, int deg) {
    if (deg < 1) throw std::invalid_argument("qs_many_prob_fixed_mix: degree must be >= 1");
    return normal_tail((0.5 - rho) * epsilon * std::sqrt(static_cast<double>(deg)));
}

double median_high_signal_prob(double epsilon, double rho, double undercover_prob) {
    if (!(rho >= 0.0 && rho <= 1.0) ||
        !(undercover_prob >= 0.0 && undercover_prob <= 1.0))
        throw std::invalid_argument("median_high_signal_prob: probabilities out of [0,1]");
    // huge-positive infiltrators always land above eps; rebels send eps
    // (tail 1/2 exactly); obedient send 0 (tail psi(eps))
    return undercover_prob +
           (1.0 - undercover_prob) * (rho * 0.5 + (1.0 - rho) * normal_tail(epsilon));
}

double median_many_prob(double epsilon, double rho, double undercover_prob, int deg) {
    if (deg < 1) throw std::invalid_argument("median_many_prob: degree must be >= 1");
    return binomial_tail_above(deg, median_high_signal_prob(epsilon, rho, undercover_prob),
                               median_count_fraction(epsilon) * deg);
}

double median_many_prob_shifted(double epsilon, double rho, int deg, int forced_high) {
    if (deg < 1 || forced_high < 0 || forced_high > deg)
        throw std::invalid_argument("median_many_prob_shifted: bad degree or shift");
    const double p = median_high_signal_prob(epsilon, rho, 0.0);
    return binomial_tail_above(deg - forced_high, p,
                               median_count_fraction(epsilon) * deg - forced_high);
}

double si_many_prob(double q, double tau, double rho, double undercover_prob,
                    int deg, int median_deg) {
    if (deg < 1 || median_deg < 1)
        throw std::invalid_argument("si_many_prob: degrees must be >= 1");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("si_many_prob: q must lie in [0,1]");
    const double p_huge = undercover_prob + (1.0 - undercover_prob) * rho * q;
    return binomial_tail_above(deg, p_huge,
                               tau * static_cast<double>(deg) / median_deg);
}

}  // namespace covertsim
