#include "covertsim/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertsim/attacks.hpp"
#include "covertsim/experiment.hpp"
#include "covertsim/report.hpp"
#include "covertsim/rng.hpp"
#include "covertsim/stats.hpp"

namespace covertsim {

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename... Args>
std::string strf(const char* f, Args... args) {
    char buf[768];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void add(SuiteResult& r, std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

// ---------------------------------------------------------------------------
// criterion 1
// ---------------------------------------------------------------------------

SuiteResult suite_pinsker_tv(int) {
    SuiteResult r{"pinsker_tv", "criterion 1: total variation vs the Pinsker bound", {}, 0};
    double worst_margin = 1e300, worst_margin_eps = 0;
    double worst_quad = 0, worst_quad_eps = 0;
    for (int i = 1; i <= 100; ++i) {
        const double eps = i / 100.0;
        const double tv = tv_gauss(eps, 1);
        const double margin = pinsker_bound(eps) - tv;
        if (margin < worst_margin) { worst_margin = margin; worst_margin_eps = eps; }
        const double err = std::abs(tv - tv_gauss_quadrature(eps));
        if (err > worst_quad) { worst_quad = err; worst_quad_eps = eps; }
    }
    add(r, "tv <= eps/sqrt(2) on eps in {0.01..1.00}", worst_margin >= 0.0,
        strf("smallest slack %.6g at eps=%.2f", worst_margin, worst_margin_eps));
    add(r, "closed form matches quadrature within 1e-8", worst_quad <= 1e-8,
        strf("largest |closed - integral| %.3g at eps=%.2f", worst_quad, worst_quad_eps));
    return r;
}

// ---------------------------------------------------------------------------
// criterion 2
// ---------------------------------------------------------------------------

SuiteResult suite_kl_identity(int) {
    SuiteResult r{"kl_identity", "criterion 2: KL identity for the unit-noise pair", {}, 0};
    for (const double eps : {0.05, 0.1, 0.5, 1.0}) {
        const double err = std::abs(kl_gauss_quadrature(eps) - kl_gauss(eps));
        add(r, strf("quadrature = eps^2/2 within 1e-6 at eps=%.2f", eps), err <= 1e-6,
            strf("|integral - %.6g| = %.3g", kl_gauss(eps), err));
    }
    return r;
}

// ---------------------------------------------------------------------------
// criterion 3
// ---------------------------------------------------------------------------

ExperimentConfig desk_config(ProtocolKind kind, double eps, std::uint64_t seed) {
    ExperimentConfig c;
    c.topology.kind = TopologyKind::Regular;
    c.topology.n = 2000;
    c.topology.degree = 200;
    c.protocol.kind = kind;
    c.protocol.epsilon = eps;
    c.trials = 1000;
    c.seed = seed;
    return c;
}

SuiteResult suite_theorem1(int threads) {
    SuiteResult r{"theorem1", "criterion 3: quorum sensing at desk scale", {}, 0};
    ExperimentConfig c = desk_config(ProtocolKind::QuorumSensing, 0.2, 101);
    c.threads = threads;
    const Scenario s = build_scenario(c);
    const auto many = run_trials(s, 0.8, c.trials, threads);
    const auto few = run_trials(s, 0.2, c.trials, threads);

    const Estimate success = estimate_success(many);
    add(r, "success >= 0.99 in the many regime", success.value >= 0.99,
        strf("measured %.4f (99%% CI [%.4f, %.4f], %d trials)", success.value,
             success.ci99.lo, success.ci99.hi, c.trials));

    const Estimate out = estimate_output_risk(few);
    const double tv = tv_gauss(0.2, 1);
    const double total = out.value + tv;
    const double bound = 0.715 * 0.2;
    const double slack = 3.0 * out.standard_error();
    add(r, "total risk <= 0.715*eps + 3 SE in the few regime", total <= bound + slack,
        strf("output %.4f + analytic %.4f = %.4f vs bound %.4f (+%.4f slack); at "
             "degree 200 the mean-signal tail has not decayed yet -- the bound is "
             "met at degree 2500, see theorem1_asymptotic",
             out.value, tv, total, bound, slack));

    const Estimate rate_many = pooled_many_rate(many);
    const double oracle_many = qs_many_prob(0.2, 0.8, 200);
    add(r, "per-rebel many-regime rate matches the Gaussian-mixture oracle",
        rate_many.ci99.contains(oracle_many),
        strf("oracle %.6f, measured %.6f (99%% CI [%.6f, %.6f], effective n %.0f)",
             oracle_many, rate_many.value, rate_many.ci99.lo, rate_many.ci99.hi,
             rate_many.effective_n));
    const double oracle_few = qs_many_prob(0.2, 0.2, 200);
    add(r, "per-rebel few-regime rate matches the Gaussian-mixture oracle",
        out.ci99.contains(oracle_few),
        strf("oracle %.6f, measured %.6f (99%% CI [%.6f, %.6f], effective n %.0f)",
             oracle_few, out.value, out.ci99.lo, out.ci99.hi, out.effective_n));
    return r;
}

// ---------------------------------------------------------------------------
// criterion 4
// ---------------------------------------------------------------------------

SuiteResult suite_theorem2(int threads) {
    SuiteResult r{"theorem2", "criterion 4: median rule with infiltration at desk scale",
                  {}, 0};
    for (const double eps : {0.04, 0.12, 0.2}) {
        for (const double u : {0.0, 0.01}) {
            ExperimentConfig c = desk_config(ProtocolKind::Median, eps, 202);
            c.population.undercover_prob = u;  // attack defaults to huge-positive
            c.threads = threads;
            const Scenario s = build_scenario(c);
            const auto many = run_trials(s, 0.8, c.trials, threads);
            const auto few = run_trials(s, 0.2, c.trials, threads);
            const std::string tag = strf("eps=%.2f u=%.2f", eps, u);

            const Estimate success = estimate_success(many);
            add(r, "success >= 0.99 [" + tag + "]", success.value >= 0.99,
                strf("measured %.4f (99%% CI [%.4f, %.4f])", success.value,
                     success.ci99.lo, success.ci99.hi));

            const Estimate rate_many = pooled_many_rate(many);
            const double om = median_many_prob(eps, 0.8, u, 200);
            add(r, "per-rebel many rate matches binomial oracle [" + tag + "]",
                rate_many.ci99.contains(om),
                strf("oracle %.6f, measured %.6f (99%% CI [%.6f, %.6f])", om,
                     rate_many.value, rate_many.ci99.lo, rate_many.ci99.hi));

            const Estimate out = estimate_output_risk(few);
            const double of = median_many_prob(eps, 0.2, u, 200);
            add(r, "per-rebel few rate matches binomial oracle [" + tag + "]",
                out.ci99.contains(of),
                strf("oracle %.6f, measured %.6f (99%% CI [%.6f, %.6f])", of, out.value,
                     out.ci99.lo, out.ci99.hi));

            const double tv = tv_gauss(eps, 1);
            const double total = out.value + tv;
            const double bound = 0.715 * eps;
            const double slack = 3.0 * out.standard_error();
            add(r, "total risk <= 0.715*eps + 3 SE [" + tag + "]", total <= bound + slack,
                strf("output %.4f + analytic %.4f = %.4f vs bound %.4f (+%.4f); the "
                     "count threshold needs degree >> 200 at these eps to push the "
                     "binomial tail under the bound -- met at degree 8000, see "
                     "theorem2_asymptotic",
                     out.value, tv, total, bound, slack));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// criterion 5
// ---------------------------------------------------------------------------

SuiteResult suite_fragility(int) {
    SuiteResult r{"fragility", "criterion 5: quorum-sensing fragility vs median robustness",
                  {}, 0};
    QsBreakConfig cfg;  // complete graph n=1000, eps=0.2, rho=0.2, one infiltrator
    const QsBreakReport rep = qs_break_demo(cfg);
    add(r, "one infiltrator drives quorum sensing to output risk >= 0.99",
        rep.qs_output_risk >= 0.99,
        strf("measured %.4f; a single huge broadcast shifts every mean by %.4g vs "
             "threshold %.2g",
             rep.qs_output_risk, rep.mean_shift, cfg.epsilon / 2.0));
    add(r, "median rule stays at its one-count-shifted oracle",
        rep.median_ci_lo <= rep.median_oracle && rep.median_oracle <= rep.median_ci_hi,
        strf("oracle %.6f, measured %.6f (99%% CI [%.6f, %.6f])", rep.median_oracle,
             rep.median_output_risk, rep.median_ci_lo, rep.median_ci_hi));
    return r;
}

// ---------------------------------------------------------------------------
// criterion 6
// ---------------------------------------------------------------------------

SuiteResult suite_impossibility(int threads) {
    SuiteResult r{"impossibility", "criterion 6: private-mode arrest lower bound", {}, 0};
    const double p = 0.99;        // premise: success probability of the protocol
    const double quarter = p / 4.0;
    const int n = 2000;

    // premise check: the protocol really does succeed in private mode
    ExperimentConfig cs = desk_config(ProtocolKind::QuorumSensing, 0.2, 606);
    cs.mode = Mode::PrivateUniform;
    cs.trials = 300;
    cs.regimes = RegimeSelection::Many;
    cs.threads = threads;
    {
        const Scenario s = build_scenario(cs);
        const auto many = run_trials(s, 0.8, cs.trials, threads);
        const Estimate success = estimate_success(many);
        add(r, "premise: private-mode success >= 0.99", success.value >= p,
            strf("measured %.4f (99%% CI [%.4f, %.4f])", success.value, success.ci99.lo,
                 success.ci99.hi));
    }

    // (a) all-rebel population: the reverse rule arrests rebels at rate >= p/4
    ExperimentConfig ca = desk_config(ProtocolKind::QuorumSensing, 0.2, 606);
    ca.mode = Mode::PrivateUniform;
    ca.police = {PoliceKind::Reverse};
    ca.population.rho_many = 1.0;
    ca.regimes = RegimeSelection::Many;
    ca.trials = 200;
    ca.threads = threads;
    const Scenario sa = build_scenario(ca);
    const auto all_rebels = run_trials(sa, 1.0, ca.trials, threads);
    const Estimate rebel_rate = pooled_rebel_arrest_rate(all_rebels, 0);
    add(r, "reverse rule arrests rebels at rate >= p/4 when everyone is a rebel",
        rebel_rate.value >= quarter,
        strf("measured %.4f (99%% CI [%.4f, %.4f]) vs %.4f", rebel_rate.value,
             rebel_rate.ci99.lo, rebel_rate.ci99.hi, quarter));

    // (b) a single planted rebel: obedient arrests stay near the output risk
    ExperimentConfig cb = desk_config(ProtocolKind::QuorumSensing, 0.2, 607);
    cb.mode = Mode::PrivateUniform;
    cb.police = {PoliceKind::Reverse};
    cb.population.rho_few = 0.0;
    cb.population.planted_rebels = 1;
    cb.regimes = RegimeSelection::Few;
    cb.trials = 500;
    cb.threads = threads;
    const Scenario sb = build_scenario(cb);
    const auto lone = run_trials(sb, 0.0, cb.trials, threads);
    const Estimate out = estimate_output_risk(lone);
    const Estimate obed = pooled_obedient_arrest_rate(lone, 0);
    const double slack_b =
        3.0 * std::sqrt(out.standard_error() * out.standard_error() +
                        obed.standard_error() * obed.standard_error());
    add(r, "obedient arrest rate <= output risk + 1/n + 3 SE",
        obed.value <= out.value + 1.0 / n + slack_b,
        strf("obedient %.4f vs output %.4f + 1/n %.4f (+%.4f slack)", obed.value,
             out.value, 1.0 / n, slack_b));

    // (c) the witnessed total risk meets the lower bound p/4 - 1/n
    const double total = out.value + (rebel_rate.value - obed.value);
    const double slack_c = 3.0 * std::sqrt(out.standard_error() * out.standard_error() +
                                           rebel_rate.standard_error() *
                                               rebel_rate.standard_error() +
                                           obed.standard_error() * obed.standard_error());
    add(r, "empirical total risk >= p/4 - 1/n",
        total >= quarter - 1.0 / n - slack_c,
        strf("output %.4f + advantage %.4f = %.4f vs %.4f (-%.4f slack)", out.value,
             rebel_rate.value - obed.value, total, quarter - 1.0 / n, slack_c));
    return r;
}

// ---------------------------------------------------------------------------
// criterion 7
// ---------------------------------------------------------------------------

SuiteResult suite_risk_gap(int threads) {
    SuiteResult r{"risk_gap", "criterion 7: private-vs-public total-risk gap", {}, 0};
    const int n = 10000, degree = 500, trials = 100;
    const std::uint64_t seed = 7;

    // a >= 10^4-node sample exercised through the edge-list interface
    auto graph_rng = rng::engine(seed, 0, rng::Stream::Graph);
    const Network generated = build_random_regular(n, degree, graph_rng);
    const std::string path = "risk_gap_sample.edges";
    save_edge_list(generated, path);
    Network net = load_edge_list(path);
    const DegreeStats ds = degree_stats(net);
    add(r, "edge-list round trip at 10^4 nodes",
        net.size() == n && ds.median == degree &&
            net.edge_count() == generated.edge_count(),
        strf("%d nodes, %zu edges, median degree %d reloaded from %s", net.size(),
             net.edge_count(), ds.median, path.c_str()));

    Protocol proto;
    proto.kind = ProtocolKind::QuorumSensing;
    PopulationSpec pop;
    Scenario pub{net, ds, Mode::Public, proto, {}, pop, seed, 1.0};
    Scenario priv{std::move(net), ds, Mode::PrivateUniform, proto,
                  {make_np_threshold(0.2)}, pop, seed, 1.0};

    bool all_hold = true;
    for (const double eps : {0.07, 0.1, 0.13, 0.16, 0.2, 0.25, 0.3}) {
        pub.protocol.epsilon = eps;
        priv.protocol.epsilon = eps;
        priv.police[0] = make_np_threshold(eps);

        const auto pub_many = run_trials(pub, 0.8, trials, threads);
        const Estimate success = estimate_success(pub_many);
        const auto pub_few = run_trials(pub, 0.2, trials, threads);
        const Estimate pub_out = estimate_output_risk(pub_few);
        const auto priv_few = run_trials(priv, 0.2, trials, threads);
        const Estimate priv_out = estimate_output_risk(priv_few);
        const MessageRiskEstimate priv_msg = estimate_message_risk(priv_few, 0);

        const double pub_total = pub_out.value + tv_gauss(eps, 1);
        const double priv_total = priv_out.value + priv_msg.value;
        const double slack =
            3.0 * std::sqrt(priv_out.standard_error() * priv_out.standard_error() +
                            priv_msg.standard_error() * priv_msg.standard_error() +
                            4.0 * pub_out.standard_error() * pub_out.standard_error());
        const bool qualified = success.value >= 0.9;
        const bool holds = !qualified || priv_total > 2.0 * pub_total - slack;
        all_hold = all_hold && holds;
        add(r, strf("private total > 2x public total at eps=%.2f", eps), holds,
            qualified ? strf("private %.4f vs 2 x public %.4f (success %.2f, slack %.4f)",
                             priv_total, 2.0 * pub_total, success.value, slack)
                      : strf("skipped: public success %.2f < 0.9", success.value));
    }
    add(r, "gap holds at every qualified grid point", all_hold,
        "grid {0.07, 0.1, 0.13, 0.16, 0.2, 0.25, 0.3}");
    return r;
}

// ---------------------------------------------------------------------------
// criterion 8
// ---------------------------------------------------------------------------

SuiteResult suite_theorem4(int threads) {
    SuiteResult r{"theorem4", "criterion 8: self-immolation at scale", {}, 0};
    ExperimentConfig c;
    c.topology.kind = TopologyKind::Regular;
    c.topology.n = 10000;
    c.topology.degree = 500;
    c.mode = Mode::PrivateUniform;
    c.protocol.kind = ProtocolKind::SelfImmolation;
    c.protocol.si_c = 8.0;
    c.trials = 300;
    c.seed = 808;
    c.threads = threads;
    const Scenario s = build_scenario(c);
    const double q = s.protocol.si.q, tau = s.protocol.si.tau;

    const auto many = run_trials(s, 0.8, c.trials, threads);
    const Estimate success = estimate_success(many);
    add(r, "success >= 0.99 in the many regime", success.value >= 0.99,
        strf("measured %.4f (q=%.6f, tau=%.4f)", success.value, q, tau));

    const auto few = run_trials(s, 0.2, c.trials, threads);
    const Estimate out = estimate_output_risk(few);
    const double oracle = si_many_prob(q, tau, 0.2, 0.0, 500, 500);
    add(r, "few-regime per-rebel rate matches the binomial-tail oracle",
        out.ci99.contains(oracle),
        strf("oracle %.3g, measured %.3g (99%% CI [%.3g, %.3g], pool %.0f)", oracle,
             out.value, out.ci99.lo, out.ci99.hi, out.n));
    const double chernoff =
        chernoff_reference(ChernoffBound::SiOutputRisk, {.epsilon = 0, .q = q, .degree = 500});
    add(r, "few-regime per-rebel rate <= exp(-(3/20) q deg)", out.value <= chernoff,
        strf("measured %.3g vs reference %.3g", out.value, chernoff));

    const Estimate huge = pooled_huge_rate(many);
    add(r, "fraction of rebels broadcasting huge sits at q",
        huge.ci99.contains(q),
        strf("q %.6f, measured %.6f (99%% CI [%.6f, %.6f])", q, huge.value, huge.ci99.lo,
             huge.ci99.hi));
    return r;
}

// ---------------------------------------------------------------------------
// criterion 9
// ---------------------------------------------------------------------------

SuiteResult suite_determinism(int) {
    SuiteResult r{"determinism", "criterion 9: byte-identical reruns and thread independence",
                  {}, 0};
    ExperimentConfig c = desk_config(ProtocolKind::QuorumSensing, 0.2, 909);
    c.police = {PoliceKind::NpThreshold};
    c.trials = 400;

    const std::string csv1 = result_to_csv(run_experiment(c));
    const std::string csv2 = result_to_csv(run_experiment(c));
    add(r, "rerun with the same seed is byte-identical", csv1 == csv2,
        strf("%zu bytes of CSV compared", csv1.size()));

    ExperimentConfig serial = c;
    serial.threads = 1;
    const std::string csv3 = result_to_csv(run_experiment(serial));
    add(r, "serial reference run is byte-identical to the default path", csv1 == csv3,
        "threads=1 vs threads=0");

    ExperimentConfig two = c;
    two.threads = 2;
    const std::string csv4 = result_to_csv(run_experiment(two));
    add(r, "two-thread run is byte-identical", csv1 == csv4, "threads=2 vs threads=0");
    return r;
}

// ---------------------------------------------------------------------------
// criterion 10
// ---------------------------------------------------------------------------

SuiteResult suite_psi_bounds(int) {
    SuiteResult r{"psi_bounds", "criterion 10: Gaussian tail sandwich", {}, 0};
    bool all_ok = true;
    double worst_lower = 1e300, worst_upper = 1e300, worst_approx = 0;
    double at_lower = 0, at_upper = 0, at_approx = 0;
    int points = 0;
    for (int k = 0;; ++k) {
        const double eps = 0.04 + 0.002 * k;
        if (eps > 0.2 + 1e-12) break;
        ++points;
        const PsiBoundReport p = psi_bound_check(eps);
        all_ok = all_ok && p.ok;
        if (p.psi - p.lower < worst_lower) { worst_lower = p.psi - p.lower; at_lower = eps; }
        if (p.upper - p.psi < worst_upper) { worst_upper = p.upper - p.psi; at_upper = eps; }
        const double ae = std::abs(p.psi - p.approximation);
        if (ae > worst_approx) { worst_approx = ae; at_approx = eps; }
    }
    add(r, "sandwich and 1/500 approximation hold on [0.04, 0.2] step 0.002", all_ok,
        strf("%d points; min slack above lower %.3g (eps=%.3f), below upper %.3g "
             "(eps=%.3f); max |psi - approx| %.3g (eps=%.3f)",
             points, worst_lower, at_lower, worst_upper, at_upper, worst_approx,
             at_approx));
    return r;
}

// ---------------------------------------------------------------------------
// supplements: the theorem-1/2 bounds in the degree regime they claim
// ---------------------------------------------------------------------------

// Per-rebel marginal sampler: a gate-passing rebel's decision depends only on
// its own received signals, whose law is exactly the binomial-over-Gaussian
// mixture below, so sampling the marginal reproduces per-rebel rates without
// simulating a whole graph at degree 2500+.
SuiteResult suite_theorem1_asymptotic(int) {
    SuiteResult r{"theorem1_asymptotic",
                  "supplement: quorum sensing in its asymptotic regime", {}, 0};
    const int deg = 2500, samples = 200000;
    const double eps = 0.2, rho = 0.2;
    auto gen = rng::engine(42, 0, rng::Stream::Receiver);
    std::binomial_distribution<int> rebels(deg, rho);
    std::normal_distribution<double> noise(0.0, 1.0);
    const double sq = std::sqrt(static_cast<double>(deg));
    int hits = 0;
    for (int i = 0; i < samples; ++i) {
        const int rcount = rebels(gen);
        const double mean = eps * rcount / deg + noise(gen) / sq;
        if (mean >= eps / 2.0) ++hits;
    }
    const double rate = static_cast<double>(hits) / samples;
    const Interval ci = wilson_interval(hits, samples, 0.99);
    const double oracle = qs_many_prob(eps, rho, deg);
    add(r, "few-regime rate matches the mixture oracle at degree 2500",
        ci.contains(oracle),
        strf("oracle %.6g, measured %.6g (99%% CI [%.6g, %.6g], %d samples)", oracle,
             rate, ci.lo, ci.hi, samples));
    const double total = rate + tv_gauss(eps, 1);
    const double bound = 0.715 * eps;
    add(r, "total risk <= 0.715*eps at degree 2500", total + (ci.hi - rate) <= bound,
        strf("output %.6g + analytic %.6g = %.6g vs bound %.4f", rate, tv_gauss(eps, 1),
             total, bound));
    return r;
}

SuiteResult suite_theorem2_asymptotic(int) {
    SuiteResult r{"theorem2_asymptotic",
                  "supplement: median rule in its asymptotic regime", {}, 0};
    const int deg = 8000, samples = 200000;
    const double eps = 0.2, rho = 0.2;
    for (const double u : {0.0, 0.01}) {
        const double p_high = median_high_signal_prob(eps, rho, u);
        auto gen = rng::engine(43, static_cast<std::uint64_t>(u * 1000),
                               rng::Stream::Receiver);
        std::binomial_distribution<int> high(deg, p_high);
        const double threshold = median_count_fraction(eps) * deg;
        int hits = 0;
        for (int i = 0; i < samples; ++i)
            if (static_cast<double>(high(gen)) > threshold) ++hits;
        const double rate = static_cast<double>(hits) / samples;
        const Interval ci = wilson_interval(hits, samples, 0.99);
        const double oracle = median_many_prob(eps, rho, u, deg);
        add(r, strf("few-regime rate matches the binomial oracle at degree 8000, u=%.2f", u),
            ci.contains(oracle),
            strf("oracle %.6g, measured %.6g (99%% CI [%.6g, %.6g])", oracle, rate, ci.lo,
                 ci.hi));
        const double total = rate + tv_gauss(eps, 1);
        const double bound = 0.715 * eps;
        add(r, strf("total risk <= 0.715*eps at degree 8000, u=%.2f", u),
            total + (ci.hi - rate) <= bound,
            strf("output %.6g + analytic %.6g = %.6g vs bound %.4f", rate,
                 tv_gauss(eps, 1), total, bound));
    }
    return r;
}

}  // namespace

bool SuiteResult::pass() const {
    if (checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& acceptance_suites() {
    static const std::vector<std::string> names = {
        "pinsker_tv",  "kl_identity", "theorem1",   "theorem2",
        "fragility",   "impossibility", "risk_gap", "theorem4",
        "determinism", "psi_bounds",  "theorem1_asymptotic", "theorem2_asymptotic"};
    return names;
}

bool is_acceptance_suite(std::string_view name) {
    const auto& all = acceptance_suites();
    return std::find(all.begin(), all.end(), name) != all.end();
}

SuiteResult run_acceptance_suite(std::string_view name, int threads) {
    const double t0 = now_seconds();
    SuiteResult r;
    if (name == "pinsker_tv") r = suite_pinsker_tv(threads);
    else if (name == "kl_identity") r = suite_kl_identity(threads);
    else if (name == "theorem1") r = suite_theorem1(threads);
    else if (name == "theorem2") r = suite_theorem2(threads);
    else if (name == "fragility") r = suite_fragility(threads);
    else if (name == "impossibility") r = suite_impossibility(threads);
    else if (name == "risk_gap") r = suite_risk_gap(threads);
    else if (name == "theorem4") r = suite_theorem4(threads);
    else if (name == "determinism") r = suite_determinism(threads);
    else if (name == "psi_bounds") r = suite_psi_bounds(threads);
    else if (name == "theorem1_asymptotic") r = suite_theorem1_asymptotic(threads);
    else if (name == "theorem2_asymptotic") r = suite_theorem2_asymptotic(threads);
    else throw std::invalid_argument("unknown acceptance suite '" + std::string(name) + "'");
    r.seconds = now_seconds() - t0;
    return r;
}

std::vector<SuiteResult> run_acceptance(std::string_view name_or_all, int threads) {
    std::vector<SuiteResult> out;
    if (name_or_all == "all") {
        for (const auto& name : acceptance_suites())
            out.push_back(run_acceptance_suite(name, threads));
    } else {
        out.push_back(run_acceptance_suite(name_or_all, threads));
    }
    return out;
}

void print_suite_result(const SuiteResult& result, std::ostream& os) {
    os << '[' << (result.pass() ? "PASS" : "FAIL") << "] " << result.title
       << strf(" -- %s (%.2f s)\n", result.suite.c_str(), result.seconds);
    for (const auto& c : result.checks)
        os << "    [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail
           << '\n';
}

}  // namespace covertsim
