#include "covertsim/attacks.hpp"

#include <cstdio>
#include <stdexcept>
#include <type_traits>

#include "covertsim/experiment.hpp"
#include "covertsim/population.hpp"
#include "covertsim/stats.hpp"

namespace covertsim {

Message undercover_message(const AttackStrategy& attack) {
    return std::visit(
        [](const auto& a) -> Message {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ConstantValue>)
                return Message{a.value};
            else if constexpr (std::is_same_v<T, HugePositive>)
                return Message{kHugeValue};
            else if constexpr (std::is_same_v<T, HugeNegative>)
                return Message{-kHugeValue};
            else
                return Message{a.epsilon};  // MimicRebel
        },
        attack);
}

namespace {

Estimate infiltrated_output_risk(const QsBreakConfig& config, ProtocolKind kind) {
    ExperimentConfig c;
    c.topology.kind = TopologyKind::Complete;
    c.topology.n = config.n;
    c.mode = Mode::Public;
    c.protocol.kind = kind;
    c.protocol.epsilon = config.epsilon;
    c.population.rho_few = config.rho;
    c.population.undercover_prob = 0.0;
    c.population.attack = HugePositive{};
    c.population.planted_undercover = 1;
    c.regimes = RegimeSelection::Few;
    c.trials = config.trials;
    c.seed = config.seed;
    const Scenario s = build_scenario(c);
    const auto records = run_trials(s, config.rho, config.trials);
    const bool nonstandard = classify_regime(config.rho) != Regime::Few;
    return estimate_output_risk(records, Pool::DegreeGated, nonstandard);
}

}  // namespace

QsBreakReport qs_break_demo(const QsBreakConfig& config) {
    if (config.n < 3)
        throw std::invalid_argument("qs_break_demo: need at least 3 agents");
    if (config.trials < 1)
        throw std::invalid_argument("qs_break_demo: need at least 1 trial");
    if (!(config.rho >= 0.0 && config.rho <= 1.0))
        throw std::invalid_argument("qs_break_demo: rho must lie in [0,1]");

    QsBreakReport r;
    r.config = config;
    const Estimate qs = infiltrated_output_risk(config, ProtocolKind::QuorumSensing);
    const Estimate med = infiltrated_output_risk(config, ProtocolKind::Median);
    r.qs_output_risk = qs.value;
    r.median_output_risk = med.value;
    r.median_ci_lo = med.ci99.lo;
    r.median_ci_hi = med.ci99.hi;
    // one forced-high neighbor; the other n-2 draw their roles independently
    r.median_oracle = median_many_prob_shifted(config.epsilon, config.rho,
                                               config.n - 1, 1);
    r.mean_shift = kHugeValue / static_cast<double>(config.n - 1);
    return r;
}

std::string QsBreakReport::summary() const {
    char buf[512];
    std::snprintf(
        buf, sizeof buf,
        "one huge-positive infiltrator on the complete graph, n=%d "
        "(rho=%.3g, eps=%.3g, %d trials)\n"
        "  mean-signal shift per receiver: %.6g vs decision threshold %.3g\n"
        "  quorum sensing output risk: %.4f\n"
        "  median rule    output risk: %.4f  99%% CI [%.4f, %.4f]  oracle %.4f",
        config.n, config.rho, config.epsilon, config.trials, mean_shift,
        config.epsilon / 2.0, qs_output_risk, median_output_risk, median_ci_lo,
        median_ci_hi, median_oracle);
    return buf;
}

}  // namespace covertsim
