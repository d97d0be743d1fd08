#include <doctest.h>

#include "covertsim/protocols.hpp"
#include "covertsim/rng.hpp"
#include "covertsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace covertsim;

TEST_SUITE("protocols") {

TEST_CASE("message rules: rebels announce epsilon, obedient agents zero") {
    CHECK(obedient_message().value == 0.0);
    CHECK(always_zero_message().value == 0.0);
    CHECK(qs_message({0.13}).value == 0.13);
    CHECK(median_message({0.13}).value == 0.13);
    // the two active rules put the identical value on the channel
    CHECK(qs_message({0.2}).value == median_message({0.2}).value);
}

TEST_CASE("quorum rule thresholds the mean inclusively at epsilon/2") {
    const QuorumSensingParams p{0.2};
    // deg 4, threshold mean 0.1 -> sum 0.4
    std::vector<double> exact{0.1, 0.1, 0.1, 0.1};
    CHECK(qs_decide(exact, 4, 4, p) == RebelOutput::Many);
    std::vector<double> under{0.1, 0.1, 0.1, 0.0999};
    CHECK(qs_decide(under, 4, 4, p) == RebelOutput::Few);
    std::vector<double> over{5.0, -1.0, -1.0, -1.0};  // sum 2.0
    CHECK(qs_decide(over, 4, 4, p) == RebelOutput::Many);
}

TEST_CASE("median rule: strict signal cut and strict count cut") {
    const MedianParams p{0.2};
    const int deg = 30;
    // count fraction f = 0.5 - 7*0.2/30; f*30 = 13.6, so 14 high signals
    // are needed (strictly more than 13.6)
    const double need = median_count_fraction(0.2) * deg;
    CHECK(need == doctest::Approx(13.6));

    auto with_high = [&](int high) {
        std::vector<double> s(deg, -1.0);
        for (int i = 0; i < high; ++i) s[i] = 0.5;  // strictly above eps
        return s;
    };
    CHECK(median_decide(with_high(14), deg, deg, p) == RebelOutput::Many);
    CHECK(median_decide(with_high(13), deg, deg, p) == RebelOutput::Few);

    // a signal exactly at eps is not "above eps"
    std::vector<double> at_eps(deg, 0.2);
    CHECK(median_decide(at_eps, deg, deg, p) == RebelOutput::Few);
    std::vector<double> above_eps(deg, 0.2000001);
    CHECK(median_decide(above_eps, deg, deg, p) == RebelOutput::Many);
}

TEST_CASE("self-immolation rule counts huge signals against a scaled cut") {
    // tau = 2, deg = 10, median = 5 -> need strictly more than 4 huge signals
    const SelfImmolationParams p{0.5, 2.0};
    auto with_huge = [&](int huge) {
        std::vector<double> s(10, 0.0);
        for (int i = 0; i < huge; ++i) s[i] = kHugeValue;
        return s;
    };
    CHECK(si_decide(with_huge(5), 10, 5, p) == RebelOutput::Many);
    CHECK(si_decide(with_huge(4), 10, 5, p) == RebelOutput::Few);

    // the huge classification is inclusive at the threshold
    std::vector<double> edge(10, 0.0);
    for (int i = 0; i < 5; ++i) edge[i] = kHugeThreshold;
    CHECK(si_decide(edge, 10, 5, p) == RebelOutput::Many);
    edge[0] = kHugeThreshold - 1.0;
    CHECK(si_decide(edge, 10, 5, p) == RebelOutput::Few);
}

TEST_CASE("degree gate silences every decider") {
    std::vector<double> loud(3, kHugeValue);
    CHECK(qs_decide(loud, 3, 4, {0.2}) == RebelOutput::Silent);
    CHECK(median_decide(loud, 3, 4, {0.2}) == RebelOutput::Silent);
    CHECK(si_decide(loud, 3, 4, {0.5, 1.0}) == RebelOutput::Silent);
    CHECK(always_many_decide(loud, 3, 4) == RebelOutput::Silent);
    CHECK(never_many_decide(loud, 3, 4) == RebelOutput::Silent);

    // at the median the gate opens
    CHECK(always_many_decide(loud, 3, 3) == RebelOutput::Many);
    CHECK(never_many_decide(loud, 3, 3) == RebelOutput::Few);
}

TEST_CASE("decisions are permutation invariant") {
    std::mt19937_64 shuffler(99);
    std::vector<double> s{0.5, -0.3, 0.25, 1.4, -2.0, 0.21, 0.05, 0.9};
    const int deg = static_cast<int>(s.size());
    const RebelOutput qs0 = qs_decide(s, deg, deg, {0.2});
    const RebelOutput md0 = median_decide(s, deg, deg, {0.2});
    for (int rep = 0; rep < 10; ++rep) {
        std::shuffle(s.begin(), s.end(), shuffler);
        CHECK(qs_decide(s, deg, deg, {0.2}) == qs0);
        CHECK(median_decide(s, deg, deg, {0.2}) == md0);
    }
}

TEST_CASE("self-immolation knobs derive from the rate constant") {
    const SelfImmolationParams p8 = si_params_from_rate_constant(8.0, 10000, 500);
    CHECK(p8.q == doctest::Approx(0.14736544595161892).epsilon(1e-14));
    CHECK(p8.tau == doctest::Approx(36.841361487904731).epsilon(1e-14));

    const SelfImmolationParams p4 = si_params_from_rate_constant(4.0, 10000, 500);
    CHECK(p4.q == doctest::Approx(0.073682722975809462).epsilon(1e-14));
    CHECK(p4.tau == doctest::Approx(18.420680743952365).epsilon(1e-14));

    // q clamps at 1 when the degree is small relative to c*ln(n)
    const SelfImmolationParams clamped = si_params_from_rate_constant(8.0, 10000, 10);
    CHECK(clamped.q == 1.0);

    CHECK_THROWS_AS((void)si_params_from_rate_constant(0.0, 100, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)si_params_from_rate_constant(8.0, 1, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)si_params_from_rate_constant(8.0, 100, 0),
                    std::invalid_argument);
}

TEST_CASE("self-immolation message consumes exactly one coin") {
    const SelfImmolationParams p{0.3, 5.0};
    auto used = rng::engine(12, 0, rng::Stream::Coins);
    auto mirror = rng::engine(12, 0, rng::Stream::Coins);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const Message m = si_message(p, used);
        const double coin = unif(mirror);
        CHECK(m.is_huge() == (coin < p.q));
        CHECK((m.value == kHugeValue || m.value == 0.0));
    }
    // engines stay in lockstep: one draw per message, no more, no less
    CHECK(used() == mirror());
}

TEST_CASE("self-immolation coin frequencies match q") {
    auto coins = rng::engine(13, 0, rng::Stream::Coins);
    const SelfImmolationParams p{0.3, 5.0};
    int huge = 0;
    const int reps = 10000;
    for (int k = 0; k < reps; ++k) huge += si_message(p, coins).is_huge() ? 1 : 0;
    const double sd = std::sqrt(reps * 0.3 * 0.7);
    CHECK(std::abs(huge - reps * 0.3) < 5 * sd);

    auto more = rng::engine(14, 0, rng::Stream::Coins);
    CHECK_FALSE(si_message({0.0, 5.0}, more).is_huge());
    CHECK(si_message({1.0, 5.0}, more).is_huge());
}

TEST_CASE("decide-level monte carlo matches the exact tail oracles") {
    // neighbors: rebel with prob rho sending eps, else 0; unit noise
    const int deg = 200, reps = 20000;
    const double eps = 0.2, rho = 0.2;
    auto gen = rng::engine(15, 0, rng::Stream::Receiver);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    int qs_many = 0, md_many = 0;
    std::vector<double> s(deg);
    for (int r = 0; r < reps; ++r) {
        for (int k = 0; k < deg; ++k)
            s[k] = (unif(gen) < rho ? eps : 0.0) + gauss(gen);
        qs_many += qs_decide(s, deg, deg, {eps}) == RebelOutput::Many ? 1 : 0;
        md_many += median_decide(s, deg, deg, {eps}) == RebelOutput::Many ? 1 : 0;
    }
    const Interval qs_ci = wilson_interval(qs_many, reps, 0.999);
    CHECK(qs_ci.contains(qs_many_prob(eps, rho, deg)));
    const Interval md_ci = wilson_interval(md_many, reps, 0.999);
    CHECK(md_ci.contains(median_many_prob(eps, rho, 0.0, deg)));

    // self-immolation: huge count ~ Bin(deg, rho*q)
    const SelfImmolationParams sp{0.5, 10.0};
    int si_many = 0;
    for (int r = 0; r < reps; ++r) {
        for (int k = 0; k < deg; ++k)
            s[k] = (unif(gen) < rho && unif(gen) < sp.q ? kHugeValue : 0.0) + gauss(gen);
        si_many += si_decide(s, deg, deg, sp) == RebelOutput::Many ? 1 : 0;
    }
    const Interval si_ci = wilson_interval(si_many, reps, 0.999);
    CHECK(si_ci.contains(si_many_prob(sp.q, sp.tau, rho, 0.0, deg, deg)));
}

TEST_CASE("protocol dispatcher routes kinds and exposes announced values") {
    auto coins = rng::engine(16, 0, rng::Stream::Coins);
    std::vector<double> high(10, kHugeValue);
    std::vector<double> low(10, -1.0);

    Protocol qs{ProtocolKind::QuorumSensing, 0.2, {}, BaselineDecider::NeverMany};
    CHECK(qs.message(coins).value == 0.2);
    CHECK(qs.announced_value() == 0.2);
    CHECK(qs.decide(high, 10, 10) == RebelOutput::Many);
    CHECK(qs.decide(low, 10, 10) == RebelOutput::Few);

    Protocol md{ProtocolKind::Median, 0.15, {}, BaselineDecider::NeverMany};
    CHECK(md.message(coins).value == 0.15);
    CHECK(md.announced_value() == 0.15);
    CHECK(md.decide(high, 10, 10) == RebelOutput::Many);

    Protocol si{ProtocolKind::SelfImmolation, 0.2, {1.0, 2.0}, BaselineDecider::NeverMany};
    CHECK(si.message(coins).value == kHugeValue);  // q = 1
    CHECK(si.announced_value() == kHugeValue);
    CHECK(si.decide(high, 10, 10) == RebelOutput::Many);
    CHECK(si.decide(low, 10, 10) == RebelOutput::Few);

    Protocol mute{ProtocolKind::AlwaysZero, 0.2, {}, BaselineDecider::AlwaysMany};
    CHECK(mute.message(coins).value == 0.0);
    CHECK(mute.announced_value() == 0.0);
    CHECK(mute.decide(low, 10, 10) == RebelOutput::Many);
    mute.baseline = BaselineDecider::NeverMany;
    CHECK(mute.decide(high, 10, 10) == RebelOutput::Few);
    const std::vector<double> nine(9, kHugeValue);
    CHECK(mute.decide(nine, 9, 10) == RebelOutput::Silent);

    // signal count must match the declared degree
    CHECK_THROWS_AS((void)qs.decide(nine, 10, 10), std::invalid_argument);
}

} // TEST_SUITE
