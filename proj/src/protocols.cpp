#include "covertsim/protocols.hpp"

#include <cmath>
#include <stdexcept>

namespace covertsim {

namespace {

void check_signals(std::span<const double> signals, int deg) {
    if (static_cast<int>(signals.size()) != deg)
        throw std::invalid_argument("decide: signal count must equal degree");
}

}  // namespace

SelfImmolationParams si_params_from_rate_constant(double c, int n, int median_deg) {
    if (c <= 0.0) throw std::invalid_argument("si_params: rate constant must be positive");
    if (n < 2 || median_deg < 1)
        throw std::invalid_argument("si_params: need n >= 2 and median_deg >= 1");
    const double cln = c * std::log(static_cast<double>(n));
    SelfImmolationParams p;
    p.q = std::min(1.0, cln / median_deg);
    p.tau = cln / 2.0;
    return p;
}

Message si_message(const SelfImmolationParams& p, std::mt19937_64& coin_rng) {
    if (!(p.q >= 0.0 && p.q <= 1.0))
        throw std::invalid_argument("si_message: q must lie in [0,1]");
    // exactly one draw per call, so coin streams advance predictably
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return unif(coin_rng) < p.q ? Message{kHugeValue} : Message{0.0};
}

RebelOutput qs_decide(std::span<const double> signals, int deg, int median_deg,
                      const QuorumSensingParams& p) {
    check_signals(signals, deg);
    if (deg < median_deg) return RebelOutput::Silent;
    double sum = 0.0;
    for (double s : signals) sum += s;
    // "at least eps/2" is inclusive
    return sum >= 0.5 * p.epsilon * deg ? RebelOutput::Many : RebelOutput::Few;
}

RebelOutput median_decide(std::span<const double> signals, int deg, int median_deg,
                          const MedianParams& p) {
    check_signals(signals, deg);
    if (deg < median_deg) return RebelOutput::Silent;
    std::int64_t high = 0;
    for (double s : signals) high += (s > p.epsilon) ? 1 : 0;  // strictly above
    // strictly more than (1/2 - 7 eps/30) of the degree
    return static_cast<double>(high) > median_count_fraction(p.epsilon) * deg
               ? RebelOutput::Many
               : RebelOutput::Few;
}

RebelOutput si_decide(std::span<const double> signals, int deg, int median_deg,
                      const SelfImmolationParams& p) {
    check_signals(signals, deg);
    if (deg < median_deg) return RebelOutput::Silent;
    std::int64_t huge = 0;
    for (double s : signals) huge += is_huge_signal(s) ? 1 : 0;
    // threshold scales with deg relative to the median degree; strict
    return static_cast<double>(huge) > p.tau * deg / median_deg ? RebelOutput::Many
                                                                : RebelOutput::Few;
}

RebelOutput always_many_decide(std::span<const double> signals, int deg, int median_deg) {
    check_signals(signals, deg);
    return deg < median_deg ? RebelOutput::Silent : RebelOutput::Many;
}

RebelOutput never_many_decide(std::span<const double> signals, int deg, int median_deg) {
    check_signals(signals, deg);
    return deg < median_deg ? RebelOutput::Silent : RebelOutput::Few;
}

Message Protocol::message(std::mt19937_64& coin_rng) const {
    switch (kind) {
        case ProtocolKind::QuorumSensing: return qs_message({epsilon});
        case ProtocolKind::Median: return median_message({epsilon});
        case ProtocolKind::SelfImmolation: return si_message(si, coin_rng);
        case ProtocolKind::AlwaysZero: return always_zero_message();
    }
    throw std::logic_error("Protocol::message: unknown kind");
}

RebelOutput Protocol::decide(std::span<const double> signals, int deg,
                             int median_deg) const {
    switch (kind) {
        case ProtocolKind::QuorumSensing:
            return qs_decide(signals, deg, median_deg, {epsilon});
        case ProtocolKind::Median:
            return median_decide(signals, deg, median_deg, {epsilon});
        case ProtocolKind::SelfImmolation:
            return si_decide(signals, deg, median_deg, si);
        case ProtocolKind::AlwaysZero:
            return baseline == BaselineDecider::AlwaysMany
                       ? always_many_decide(signals, deg, median_deg)
                       : never_many_decide(signals, deg, median_deg);
    }
    throw std::logic_error("Protocol::decide: unknown kind");
}

double Protocol::announced_value() const {
    switch (kind) {
        case ProtocolKind::QuorumSensing:
        case ProtocolKind::Median: return epsilon;
        case ProtocolKind::SelfImmolation: return kHugeValue;
        case ProtocolKind::AlwaysZero: return 0.0;
    }
    throw std::logic_error("Protocol::announced_value: unknown kind");
}

}  // namespace covertsim
