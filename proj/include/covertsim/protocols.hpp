#pragma once

#include <random>
#include <span>

#include "covertsim/channel.hpp"

namespace covertsim {

// What a rebel outputs after the round. Silent is forced by the degree gate
// (deg < median degree) for every protocol: poorly connected agents cannot
// average away the noise, so they abstain rather than guess.
enum class RebelOutput : unsigned char { Silent, Few, Many };

struct QuorumSensingParams {
    double epsilon = 0.2;  // announced intensity, also the decision scale
};

struct MedianParams {
    double epsilon = 0.2;
};

struct SelfImmolationParams {
    double q = 0.0;    // probability of broadcasting the huge value
    double tau = 0.0;  // count threshold at the median degree
};

// Count threshold fraction for the median rule: output Many when strictly
// more than (1/2 - 7*eps/30) of the received signals land strictly above eps.
inline double median_count_fraction(double epsilon) {
    return 0.5 - 7.0 * epsilon / 30.0;
}

// Derives the self-immolation knobs from a rate constant c: broadcast with
// probability q = c*ln(n)/median_deg (clamped to 1) and demand strictly more
// than (c*ln(n)/2) * deg/median_deg huge signals.
SelfImmolationParams si_params_from_rate_constant(double c, int n, int median_deg);

// Message rules. Obedient agents always send 0; quorum-sensing and median
// rebels announce epsilon deterministically (identical rule, asserted by
// tests); self-immolation rebels consume exactly one coin.
inline Message obedient_message() { return {0.0}; }
inline Message qs_message(const QuorumSensingParams& p) { return {p.epsilon}; }
inline Message median_message(const MedianParams& p) { return {p.epsilon}; }
Message si_message(const SelfImmolationParams& p, std::mt19937_64& coin_rng);

// Decision rules. signals.size() must equal deg.
RebelOutput qs_decide(std::span<const double> signals, int deg, int median_deg,
                      const QuorumSensingParams& p);
RebelOutput median_decide(std::span<const double> signals, int deg, int median_deg,
                          const MedianParams& p);
RebelOutput si_decide(std::span<const double> signals, int deg, int median_deg,
                      const SelfImmolationParams& p);

// Baselines for calibrating estimators: a mute message rule and the two
// constant deciders (still subject to the degree gate).
inline Message always_zero_message() { return {0.0}; }
RebelOutput always_many_decide(std::span<const double> signals, int deg, int median_deg);
RebelOutput never_many_decide(std::span<const double> signals, int deg, int median_deg);

// Value-type dispatcher used by the harness and the reverse police.
enum class ProtocolKind { QuorumSensing, Median, SelfImmolation, AlwaysZero };
enum class BaselineDecider { NeverMany, AlwaysMany };

struct Protocol {
    ProtocolKind kind = ProtocolKind::QuorumSensing;
    double epsilon = 0.2;                                  // qs / median
    SelfImmolationParams si;                               // self-immolation
    BaselineDecider baseline = BaselineDecider::NeverMany; // always-zero

    Message message(std::mt19937_64& coin_rng) const;
    RebelOutput decide(std::span<const double> signals, int deg, int median_deg) const;

    // Largest value this protocol ever puts on the channel; the analytic
    // message-risk bounds key off it.
    double announced_value() const;
};

}  // namespace covertsim
