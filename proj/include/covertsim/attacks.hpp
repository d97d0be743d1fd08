#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "covertsim/channel.hpp"

namespace covertsim {

// What an undercover agent puts on the channel. Undercover agents follow the
// protocol's outward shape (they transmit like everyone else) but choose the
// content adversarially; they never produce a rebel output and are excluded
// from both arrest-rate pools.
struct ConstantValue { double value = 0.0; };
struct HugePositive {};
struct HugeNegative {};
struct MimicRebel { double epsilon = 0.2; };  // indistinguishable from a real rebel

using AttackStrategy = std::variant<ConstantValue, HugePositive, HugeNegative, MimicRebel>;

Message undercover_message(const AttackStrategy& attack);

// Demonstration that quorum sensing is brittle while the median rule is not:
// complete graph, few-regime population, one planted huge-positive
// infiltrator. One infiltrator moves every mean by kHugeValue/(n-1) and drags
// the whole quorum-sensing population to Many; the same infiltrator moves
// each median-rule count by at most one.
struct QsBreakConfig {
    int n = 1000;
    double epsilon = 0.2;
    double rho = 0.2;  // few regime
    int trials = 1000;
    std::uint64_t seed = 1;
};

struct QsBreakReport {
    QsBreakConfig config;
    double qs_output_risk = 0.0;      // with the infiltrator
    double median_output_risk = 0.0;  // with the infiltrator
    double median_oracle = 0.0;       // no-attack binomial tail shifted by one count
    double median_ci_lo = 0.0;        // cluster-adjusted 99% interval
    double median_ci_hi = 0.0;
    double mean_shift = 0.0;          // kHugeValue/(n-1), vs decision threshold eps/2
    std::string summary() const;
};

QsBreakReport qs_break_demo(const QsBreakConfig& config);

}  // namespace covertsim
