// Times the serial reference trial loop against the OpenMP loop on the
// desk-scale reference setup and verifies that both produce identical
// per-trial counts. Exit code 1 if the aggregates ever differ.
#include <chrono>
#include <cstdint>
#include <iostream>

#include <CLI11.hpp>

#include "covertsim/experiment.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

bool same_counts(const covertsim::TrialCounts& a, const covertsim::TrialCounts& b) {
    if (a.trial != b.trial || a.rho != b.rho || a.rebels != b.rebels ||
        a.obedient != b.obedient || a.undercover != b.undercover ||
        a.gated_rebels != b.gated_rebels || a.many != b.many ||
        a.huge_broadcasts != b.huge_broadcasts || a.arrests.size() != b.arrests.size())
        return false;
    for (std::size_t i = 0; i < a.arrests.size(); ++i)
        if (a.arrests[i].rebel_arrests != b.arrests[i].rebel_arrests ||
            a.arrests[i].obedient_arrests != b.arrests[i].obedient_arrests)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covertsim-bench: serial reference vs OpenMP trial loop"};
    int n = 2000, degree = 200, trials = 200, threads = 0;
    std::uint64_t seed = 1;
    double rho = 0.8;
    app.add_option("--n", n, "agents");
    app.add_option("--degree", degree, "regular-graph degree");
    app.add_option("--trials", trials, "trials per timed run");
    app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--rho", rho, "rebel probability");
    CLI11_PARSE(app, argc, argv);

    covertsim::ExperimentConfig config;
    config.topology.kind = covertsim::TopologyKind::Regular;
    config.topology.n = n;
    config.topology.degree = degree;
    config.police = {covertsim::PoliceKind::NpThreshold};
    config.trials = trials;
    config.seed = seed;
    config.nonstandard_regime = true;  // rho is a free knob here

    try {
        const covertsim::Scenario s = covertsim::build_scenario(config);

        // touch both paths once so first-run allocation noise stays out of the timing
        (void)covertsim::run_trials_serial(s, rho, 8);
        (void)covertsim::run_trials(s, rho, 8, threads);

        const double t0 = now_seconds();
        const auto serial = covertsim::run_trials_serial(s, rho, trials);
        const double t_serial = now_seconds() - t0;

        const double t1 = now_seconds();
        const auto parallel = covertsim::run_trials(s, rho, trials, threads);
        const double t_parallel = now_seconds() - t1;

        bool identical = serial.size() == parallel.size();
        for (std::size_t i = 0; identical && i < serial.size(); ++i)
            identical = same_counts(serial[i], parallel[i]);

        int used = 1;
#ifdef _OPENMP
        used = threads > 0 ? threads : omp_get_max_threads();
#endif
        std::printf("n=%d degree=%d trials=%d rho=%.2f seed=%llu\n", n, degree, trials,
                    rho, static_cast<unsigned long long>(seed));
        std::printf("serial   %8.3f s  %8.1f trials/s\n", t_serial, trials / t_serial);
        std::printf("openmp   %8.3f s  %8.1f trials/s  (%d threads, speedup %.2fx)\n",
                    t_parallel, trials / t_parallel, used, t_serial / t_parallel);
        std::printf("per-trial counts identical: %s\n", identical ? "yes" : "NO");
        return identical ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
