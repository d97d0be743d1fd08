#include <doctest.h>

#include "covertsim/police.hpp"
#include "covertsim/rng.hpp"
#include "covertsim/stats.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace covertsim;

TEST_SUITE("police") {

TEST_CASE("no-arrest baseline arrests nobody") {
    const Police p = make_no_arrest();
    CHECK(p.name() == "no_arrest");
    std::vector<double> view{kHugeValue, kHugeValue};
    CHECK_FALSE(p.arrests(view, 2, 1));
    CHECK_FALSE(p.arrests({}, 0, 1));
}

TEST_CASE("threshold rule cuts the view mean inclusively at epsilon/2") {
    const Police p = make_np_threshold(0.2);
    CHECK(p.name() == "np_threshold");
    std::vector<double> at{0.1};
    CHECK(p.arrests(at, 5, 1));  // inclusive
    std::vector<double> under{0.0999};
    CHECK_FALSE(p.arrests(under, 5, 1));
    std::vector<double> avg{0.5, -0.25};  // mean 0.125 >= 0.1
    CHECK(p.arrests(avg, 5, 1));
    // an empty view carries no evidence
    CHECK_FALSE(p.arrests({}, 0, 1));

    CHECK_THROWS_AS((void)make_np_threshold(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_np_threshold(-0.5), std::invalid_argument);
}

TEST_CASE("threshold rule achieves the analytic advantage on one copy") {
    // rebel sends eps = 0.2, obedient sends 0, one noised copy each:
    // P(arrest rebel) = Phi(eps/2 + ... ) evaluated exactly as Phi(0.1) via
    // the symmetric construction; the advantage equals tv_gauss(0.2, 1).
    const Police p = make_np_threshold(0.2);
    auto gen = rng::engine(31, 0, rng::Stream::Police);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int reps = 200000;
    int rebel_hits = 0, obedient_hits = 0;
    for (int k = 0; k < reps; ++k) {
        const double rebel_copy[] = {0.2 + gauss(gen)};
        const double obedient_copy[] = {gauss(gen)};
        rebel_hits += p.arrests(rebel_copy, 5, 1) ? 1 : 0;
        obedient_hits += p.arrests(obedient_copy, 5, 1) ? 1 : 0;
    }
    const Interval rebel_ci = wilson_interval(rebel_hits, reps, 0.999);
    CHECK(rebel_ci.contains(0.53982783727702898));  // Phi(0.1)
    const Interval obedient_ci = wilson_interval(obedient_hits, reps, 0.999);
    CHECK(obedient_ci.contains(0.46017216272297102));  // 1 - Phi(0.1)

    const double advantage =
        static_cast<double>(rebel_hits - obedient_hits) / reps;
    const double slack = 3.3 * std::sqrt(2.0 * 0.25 / reps);
    CHECK(std::abs(advantage - tv_gauss(0.2, 1)) < slack);
}

TEST_CASE("reverse rule gates on the true degree") {
    Protocol qs{ProtocolKind::QuorumSensing, 0.2, {}, BaselineDecider::NeverMany};
    const Police p = make_reverse(qs);
    CHECK(p.name() == "reverse");
    std::vector<double> loud{kHugeValue};
    CHECK(p.arrests(loud, 10, 10));
    CHECK_FALSE(p.arrests(loud, 9, 10));  // below the median: the rule assumes silence
}

TEST_CASE("reverse rule in private shape equals the rebel decider exactly") {
    Protocol md{ProtocolKind::Median, 0.2, {}, BaselineDecider::NeverMany};
    const Police p = make_reverse(md);
    auto gen = rng::engine(32, 0, rng::Stream::Police);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int deg = 20;
    std::vector<double> view(deg);
    for (int rep = 0; rep < 1000; ++rep) {
        for (double& s : view) s = 0.1 + gauss(gen);
        const bool arrested = p.arrests(view, deg, deg);
        const bool decided_many = md.decide(view, deg, deg) == RebelOutput::Many;
        CHECK(arrested == decided_many);
    }
}

TEST_CASE("reverse rule on a single public copy normalizes per copy") {
    Protocol qs{ProtocolKind::QuorumSensing, 0.2, {}, BaselineDecider::NeverMany};
    const Police p = make_reverse(qs);
    std::vector<double> at{0.1};
    CHECK(p.arrests(at, 10, 5));  // mean of the one copy >= eps/2, inclusive
    std::vector<double> under{0.0999};
    CHECK_FALSE(p.arrests(under, 10, 5));
}

TEST_CASE("reverse rule with the self-immolation decider counts huge copies") {
    Protocol si{ProtocolKind::SelfImmolation, 0.2, {0.5, 2.0}, BaselineDecider::NeverMany};
    const Police p = make_reverse(si);
    // tau * copies / median = 2 * 10 / 5 = 4: need strictly more than 4
    std::vector<double> view(10, 0.0);
    for (int i = 0; i < 5; ++i) view[i] = kHugeValue;
    CHECK(p.arrests(view, 10, 5));
    view[0] = 0.0;
    CHECK_FALSE(p.arrests(view, 10, 5));
}

TEST_CASE("reverse rule rejects the decider that would arrest everyone") {
    Protocol mute{ProtocolKind::AlwaysZero, 0.2, {}, BaselineDecider::AlwaysMany};
    CHECK_THROWS_AS((void)make_reverse(mute), std::invalid_argument);

    // the never-many variant is allowed and simply never fires
    mute.baseline = BaselineDecider::NeverMany;
    const Police p = make_reverse(mute);
    std::vector<double> loud{kHugeValue, kHugeValue};
    CHECK_FALSE(p.arrests(loud, 10, 5));
}

TEST_CASE("analytic message risk matches the frozen references") {
    CHECK(analytic_message_risk(0.2, 1) ==
          doctest::Approx(0.079655674554057963).epsilon(1e-14));
    CHECK(analytic_message_risk(0.2, 400) ==
          doctest::Approx(0.95449973610364159).epsilon(1e-14));
    CHECK(analytic_message_risk(0.1, 10000) ==
          doctest::Approx(0.99999942669685624).epsilon(1e-14));
    // identical to the closed-form total variation
    for (int copies : {1, 7, 100})
        CHECK(analytic_message_risk(0.13, copies) == tv_gauss(0.13, copies));
    CHECK_THROWS_AS((void)analytic_message_risk(0.2, 0), std::invalid_argument);
}

} // TEST_SUITE
