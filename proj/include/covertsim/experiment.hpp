#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covertsim/attacks.hpp"
#include "covertsim/channel.hpp"
#include "covertsim/graph.hpp"
#include "covertsim/police.hpp"
#include "covertsim/protocols.hpp"
#include "covertsim/stats.hpp"

namespace covertsim {

enum class TopologyKind { Complete, Regular, ErdosRenyi, EdgeList };

struct TopologySpec {
    TopologyKind kind = TopologyKind::Regular;
    int n = 2000;
    int degree = 200;       // regular
    double p = 0.1;         // erdos_renyi
    std::string edge_list;  // edge_list: path to the file
};

struct ProtocolSpec {
    ProtocolKind kind = ProtocolKind::QuorumSensing;
    double epsilon = 0.2;
    double si_c = 8.0;  // q = c*ln(n)/median_deg, tau = c*ln(n)/2
    std::optional<double> si_q;    // explicit overrides for q and tau
    std::optional<double> si_tau;
    BaselineDecider baseline = BaselineDecider::NeverMany;
};

struct PopulationSpec {
    double rho_many = 0.8;
    double rho_few = 0.2;
    double undercover_prob = 0.0;
    AttackStrategy attack = HugePositive{};
    int planted_rebels = 0;
    int planted_undercover = 0;
};

enum class RegimeSelection { Both, Many, Few };

struct SweepSpec {
    std::string param;             // "epsilon", "undercover_prob" or "rho_few"
    std::vector<double> values;    // empty = no sweep
};

// One experiment as read from a flat key=value config file ('#' comments,
// blank lines ignored). Defaults describe the desk-scale reference setup.
struct ExperimentConfig {
    TopologySpec topology;
    Mode mode = Mode::Public;
    ProtocolSpec protocol;
    std::vector<PoliceKind> police;  // reverse polices reuse the run's protocol
    PopulationSpec population;
    RegimeSelection regimes = RegimeSelection::Both;
    int trials = 1000;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = runtime default
    bool nonstandard_regime = false;
    SweepSpec sweep;
    std::string out;  // CSV destination ("" = stdout only)
};

// Throw std::invalid_argument with the offending line/key on any problem.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);
void validate_config(const ExperimentConfig& config);

// A config with the topology built and the protocol knobs resolved against
// it (self-immolation's q and tau depend on n and the median degree).
struct Scenario {
    Network net;
    DegreeStats degrees;
    Mode mode = Mode::Public;
    Protocol protocol;
    std::vector<Police> police;
    PopulationSpec population;
    std::uint64_t seed = 1;
    double noise_sd = 1.0;  // != 1 is a test-only hook; emission rejects it
                            // unless built with COVERTSIM_ALLOW_TEST_NOISE
};

Scenario build_scenario(const ExperimentConfig& config);

// One round: sample roles, compose messages, emit through the channel, let
// rebels decide, let every configured police mark arrests, reduce to counts.
// Deterministic in (scenario.seed, rho, trial_index) alone.
TrialCounts run_trial(const Scenario& s, double rho, std::uint64_t trial_index);

// Trial loop. threads == 1 uses the plain serial loop (the reference
// implementation); anything else hands the loop to OpenMP with that many
// threads (0 = runtime default). Records come back indexed by trial, so the
// results are identical whichever path ran them.
std::vector<TrialCounts> run_trials(const Scenario& s, double rho, int trials,
                                    int threads = 0);
std::vector<TrialCounts> run_trials_serial(const Scenario& s, double rho, int trials);

}  // namespace covertsim
