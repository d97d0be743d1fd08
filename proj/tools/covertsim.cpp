// Command-line front end: run one experiment, sweep a parameter grid, or run
// the acceptance suites. Exit codes: 0 success, 1 validation/usage error,
// 2 acceptance failure.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "covertsim/acceptance.hpp"
#include "covertsim/experiment.hpp"
#include "covertsim/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"covertsim: covert fraction-estimation protocols under surveillance"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> threads;
    std::string suite;

    CLI::App* run = app.add_subcommand("run", "run a single experiment from a config file");
    CLI::App* sweep =
        app.add_subcommand("sweep", "run a parameter sweep (config must define a grid)");
    for (CLI::App* sub : {run, sweep}) {
        sub->add_option("--config", config_path, "path to a key=value config file")
            ->required();
        sub->add_option("--seed", seed, "override the master seed");
        sub->add_option("--out", out, "override the CSV destination");
        sub->add_option("--threads", threads, "trial-loop threads (0 = runtime default)");
    }
    CLI::App* accept = app.add_subcommand("accept", "run acceptance suites");
    accept->add_option("suite", suite, "suite name or 'all'")->required();
    int accept_threads = 0;
    accept->add_option("--threads", accept_threads,
                       "trial-loop threads (0 = runtime default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // normalize usage errors; --help stays 0
    }

    try {
        if (run->parsed() || sweep->parsed()) {
            covertsim::ExperimentConfig config = covertsim::parse_config_file(config_path);
            if (seed) config.seed = *seed;
            if (out) config.out = *out;
            if (threads) config.threads = *threads;
            if (sweep->parsed() && config.sweep.values.empty())
                throw std::invalid_argument(
                    "sweep: config defines no grid (set sweep_param and sweep_values)");
            const covertsim::ExperimentResult result = covertsim::run_experiment(config);
            std::cout << covertsim::result_to_csv(result);
            if (!config.out.empty())
                std::cerr << "wrote " << config.out << " and " << config.out << ".gp\n";
            return 0;
        }
        // accept
        if (suite != "all" && !covertsim::is_acceptance_suite(suite)) {
            std::cerr << "error: unknown suite '" << suite << "'; known suites:";
            for (const auto& name : covertsim::acceptance_suites())
                std::cerr << ' ' << name;
            std::cerr << " all\n";
            return 1;
        }
        const auto results = covertsim::run_acceptance(suite, accept_threads);
        bool all_pass = true;
        int passed = 0;
        for (const auto& r : results) {
            covertsim::print_suite_result(r, std::cout);
            all_pass = all_pass && r.pass();
            passed += r.pass() ? 1 : 0;
        }
        std::cout << passed << " of " << results.size() << " suites passed\n";
        return all_pass ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
