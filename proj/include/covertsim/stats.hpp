#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace covertsim {

// ---------------------------------------------------------------------------
// Gaussian primitives
// ---------------------------------------------------------------------------

// Standard normal CDF / upper tail, absolute error below 1e-12 across the
// double range (delegates to erfc so large |z| keeps relative accuracy).
double normal_cdf(double z);
double normal_tail(double z);

// Inverse CDF, |error| ~ 1e-13 (rational seed + one Newton step on normal_cdf).
double normal_quantile(double p);

// KL(N(0,1) || N(eps,1)) = eps^2/2 in nats.
double kl_gauss(double epsilon);

// Total variation between `copies` independent unit-noise observations of 0
// versus of eps: 2*Phi(eps*sqrt(copies)/2) - 1.
double tv_gauss(double epsilon, int copies = 1);

// TV <= sqrt(KL) bound specialised to the Gaussian pair: eps/sqrt(2).
double pinsker_bound(double epsilon);

// Independent numerical routes for the two closed forms above, used by the
// verification suite: composite-Simpson integrals of (1/2)|p0 - p1| and of
// p0*log(p0/p1) over a truncated axis.
double tv_gauss_quadrature(double epsilon);
double kl_gauss_quadrature(double epsilon);

// Upper-tail sandwich used by the median rule's analysis. Checks, for one
// epsilon, that (1-2eps)/2 < psi(eps) < (1-(2/3)eps)/2 and that psi(eps) sits
// within 1/500 of the square-root exponential approximation
// (1 - sqrt(1 - exp(-sqrt(pi/8) eps^2)))/2, with the bounds still holding
// after that slack. Intended range: eps in [0.04, 0.2].
struct PsiBoundReport {
    double epsilon = 0.0;
    double psi = 0.0;
    double lower = 0.0;        // (1-2eps)/2
    double upper = 0.0;        // (1-(2/3)eps)/2
    double approximation = 0.0;
    bool ok = false;
};
PsiBoundReport psi_bound_check(double epsilon);

// ---------------------------------------------------------------------------
// Reference concentration bounds (loose by design; estimators must beat them)
// ---------------------------------------------------------------------------

enum class ChernoffBound {
    QsOutputRisk,       // 2*exp(-9*deg*eps^2/200)
    MedianFewRisk,      // exp(-0.015*(1-2eps)*eps^2*deg)
    MedianManyFailure,  // exp(-0.036*eps^2*deg)
    SiOutputRisk,       // exp(-(3/20)*q*deg)
};

struct ChernoffArgs {
    double epsilon = 0.0;
    double q = 0.0;
    double degree = 0.0;
};

double chernoff_reference(ChernoffBound bound, const ChernoffArgs& args);

// ---------------------------------------------------------------------------
// Interval estimation
// ---------------------------------------------------------------------------

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
};

// Wilson score interval for a binomial proportion. Requires n > 0,
// 0 <= successes <= n, confidence in (0,1).
Interval wilson_interval(double successes, double n, double confidence);

// ---------------------------------------------------------------------------
// Trial aggregation
// ---------------------------------------------------------------------------

// Everything the estimators need from one simulated round, as plain counts.
// Counts are integers, so folding them is exact and order-independent: the
// same records give the same estimates no matter how many threads ran them.
struct ArrestCounts {
    std::int64_t rebel_arrests = 0;
    std::int64_t obedient_arrests = 0;
};

struct TrialCounts {
    std::int64_t trial = 0;
    double rho = 0.0;
    std::int64_t rebels = 0;
    std::int64_t obedient = 0;
    std::int64_t undercover = 0;
    std::int64_t gated_rebels = 0;     // rebels passing the degree gate
    std::int64_t many = 0;             // rebels that output Many
    std::int64_t huge_broadcasts = 0;  // rebels whose message was huge
    std::vector<ArrestCounts> arrests; // one entry per configured police
    double fraction_many() const {
        return rebels > 0 ? static_cast<double>(many) / static_cast<double>(rebels) : 0.0;
    }
};

// A pooled proportion with a 99% interval. Per-agent indicators from the same
// trial are correlated (they share senders), so the interval uses an
// effective sample size derived from the between-trial variance of the
// per-trial proportions (a standard cluster adjustment); effective_n == n
// when trials look independent.
struct Estimate {
    double value = 0.0;
    Interval ci99;
    double successes = 0.0;
    double n = 0.0;
    double effective_n = 0.0;
    double standard_error() const;
};

// Fraction of trials in which at least a third of the rebels output Many.
// Precondition: at least `min_trials` records, all in the Many regime
// (rho >= 0.8) unless nonstandard_regime is set.
Estimate estimate_success(std::span<const TrialCounts> trials,
                          bool nonstandard_regime = false, int min_trials = 100);

// Pooled per-rebel frequency of Many. The headline number conditions on the
// degree gate (that is the population the guarantees quantify over);
// Pool::AllRebels divides by every rebel instead and is reported as a
// diagnostic. Precondition: Few regime (rho <= 0.2) unless nonstandard.
enum class Pool { DegreeGated, AllRebels };
Estimate estimate_output_risk(std::span<const TrialCounts> trials,
                              Pool pool = Pool::DegreeGated,
                              bool nonstandard_regime = false);

// Pooled per-rebel frequency of Many without any regime precondition; also
// serves as the per-rebel success rate when fed Many-regime records.
Estimate pooled_many_rate(std::span<const TrialCounts> trials,
                          Pool pool = Pool::DegreeGated);

// Pooled per-rebel frequency of huge broadcasts (self-immolation diagnostics).
Estimate pooled_huge_rate(std::span<const TrialCounts> trials);

// Advantage of one arrest rule: rebel arrest rate minus obedient arrest rate,
// with a propagated 99% interval (cluster-adjusted on both pools). Undercover
// agents are in neither pool. Errors if either pool is empty.
struct MessageRiskEstimate {
    double value = 0.0;
    Interval ci99;
    Estimate rebel_rate;
    Estimate obedient_rate;
    double standard_error() const;
};
MessageRiskEstimate estimate_message_risk(std::span<const TrialCounts> trials,
                                          int police_index);

// The two arrest-rate pools individually (usable when one pool is empty,
// e.g. an all-rebel population probing the best case of an arrest rule).
Estimate pooled_rebel_arrest_rate(std::span<const TrialCounts> trials,
                                  int police_index);
Estimate pooled_obedient_arrest_rate(std::span<const TrialCounts> trials,
                                     int police_index);

// ---------------------------------------------------------------------------
// Exact finite-sample predictions (the oracles the simulator is checked against)
// ---------------------------------------------------------------------------

// P(Bin(n, p) > threshold), exact (log-space pmf, strict inequality).
double binomial_tail_above(int n, double p, double threshold);

// Quorum sensing, rebel of degree deg, neighbors independently rebel with
// probability rho sending eps: P(mean signal >= eps/2). Exact mixture of
// Gaussian tails over the binomial rebel-neighbor count.
double qs_many_prob(double epsilon, double rho, int deg);

// The fixed-mixture shortcut N(rho*eps, 1/deg) for the same quantity; close
// to qs_many_prob at moderate degrees but not exact.
double qs_many_prob_fixed_mix(double epsilon, double rho, int deg);

// Median rule: probability one received signal lands strictly above eps when
// each neighbor is undercover (huge-positive) w.p. u, else rebel w.p. rho.
double median_high_signal_prob(double epsilon, double rho, double undercover_prob);

// Median rule: P(output Many) for a gate-passing rebel of degree deg.
double median_many_prob(double epsilon, double rho, double undercover_prob, int deg);

// Same, with `forced_high` signals pinned high (planted infiltrators among
// the neighbors) and only deg - forced_high genuinely random.
double median_many_prob_shifted(double epsilon, double rho, int deg, int forced_high);

// Self-immolation: P(output Many) for a gate-passing rebel of degree deg.
double si_many_prob(double q, double tau, double rho, double undercover_prob,
                    int deg, int median_deg);

}  // namespace covertsim
