#pragma once

#include <span>
#include <string>
#include <vector>

#include "covertsim/experiment.hpp"

namespace covertsim {

// Estimates for one regime of one parameter point.
struct RegimeSummary {
    std::string regime;  // "many", "few" or "nonstandard"
    double rho = 0.0;
    int trials = 0;
    Estimate success;           // fraction of trials with >= 1/3 of rebels at Many
    Estimate output_gated;      // pooled per-rebel Many rate, degree-gated pool
    Estimate output_all;        // same, unrestricted pool (diagnostic)
    Estimate huge_rate;         // pooled per-rebel huge-broadcast rate
    double analytic_message_risk = 0.0;  // best-possible arrest advantage
    std::vector<MessageRiskEstimate> message_risks;  // parallel to police list
};

struct ParamPointResult {
    double param = 0.0;
    std::vector<RegimeSummary> regimes;
};

struct ExperimentResult {
    ExperimentConfig config;
    int n = 0;
    DegreeStats degrees;
    std::vector<std::string> police_names;
    std::vector<ParamPointResult> points;
};

// Pinned CSV schema; consumers key on this exact header line.
extern const char* const kCsvHeader;

// One CSV row per (parameter point, regime, police); police "none" when no
// police is configured, with empirical message-risk columns set to nan.
// total_risk = output_risk + msg_risk_analytic on every row.
std::string result_to_csv(const ExperimentResult& result);

// Runs every regime at every sweep point (a config without a sweep is a
// single point at the protocol's own parameter) and, when config.out is set,
// writes the CSV plus a small gnuplot script next to it.
ExperimentResult run_experiment(const ExperimentConfig& config);

std::string gnuplot_script(const ExperimentResult& result, const std::string& csv_path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace covertsim
