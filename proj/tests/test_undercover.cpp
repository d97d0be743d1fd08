#include <doctest.h>

#include "covertsim/attacks.hpp"
#include "covertsim/stats.hpp"

#include <stdexcept>

using namespace covertsim;

TEST_SUITE("attacks") {

TEST_CASE("undercover message follows the configured strategy") {
    CHECK(undercover_message(ConstantValue{3.5}).value == 3.5);
    CHECK(undercover_message(HugePositive{}).value == kHugeValue);
    CHECK(undercover_message(HugePositive{}).is_huge());
    CHECK(undercover_message(HugeNegative{}).value == -kHugeValue);
    CHECK_FALSE(undercover_message(HugeNegative{}).is_huge());
    CHECK(undercover_message(MimicRebel{0.17}).value == 0.17);
}

TEST_CASE("one infiltrator breaks quorum sensing but barely moves the median rule") {
    QsBreakConfig cfg;
    cfg.n = 200;
    cfg.trials = 400;
    cfg.epsilon = 0.2;
    cfg.rho = 0.2;
    cfg.seed = 5;
    const QsBreakReport r = qs_break_demo(cfg);

    // the huge announcement shifts every mean far past the decision cut
    CHECK(r.mean_shift == doctest::Approx(kHugeValue / 199.0));
    CHECK(r.mean_shift > cfg.epsilon / 2.0);
    CHECK(r.qs_output_risk == 1.0);

    // the median rule's count moves by at most one: risk stays near the
    // one-count-shifted oracle, far from collapse
    CHECK(r.median_oracle ==
          doctest::Approx(median_many_prob_shifted(0.2, 0.2, 199, 1)).epsilon(1e-12));
    CHECK(r.median_oracle == doctest::Approx(0.3299617189404206).epsilon(1e-9));
    CHECK(r.median_ci_lo <= r.median_oracle);
    CHECK(r.median_oracle <= r.median_ci_hi);
    CHECK(r.median_output_risk < 0.6);

    const std::string text = r.summary();
    CHECK(text.find("quorum") != std::string::npos);
    CHECK(text.find("median") != std::string::npos);
}

TEST_CASE("the break demo validates its configuration") {
    QsBreakConfig bad;
    bad.n = 2;
    CHECK_THROWS_AS((void)qs_break_demo(bad), std::invalid_argument);
    bad = {};
    bad.trials = 0;
    CHECK_THROWS_AS((void)qs_break_demo(bad), std::invalid_argument);
    bad = {};
    bad.rho = 1.5;
    CHECK_THROWS_AS((void)qs_break_demo(bad), std::invalid_argument);
}

} // TEST_SUITE
