#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "ptcd/errors.hpp"
#include "ptcd/schemes.hpp"

using namespace ptcd;

namespace {
TrialStreams test_streams(std::uint32_t point) {
    return TrialStreams{1717, stream_domain::kTest, 4, point};
}

bool within_3_sigma(const OutageEstimate& est, double expected) {
    return std::abs(est.outage - expected) <= 3.0 * (est.ci_half_width / 1.96);
}
}  // namespace

TEST_SUITE("schemes") {

TEST_CASE("scheme descriptors") {
    CHECK(BenchmarkScheme::direct().label() == "direct");
    CHECK(BenchmarkScheme::direct().code_rate == 1.0);

    CHECK(BenchmarkScheme::stbc(2).code_rate == 1.0);
    CHECK(BenchmarkScheme::stbc(3).code_rate == 0.75);
    CHECK(BenchmarkScheme::stbc(4).code_rate == 0.75);
    CHECK(BenchmarkScheme::stbc(3).label() == "stbc-tx3");
    CHECK_THROWS_AS(BenchmarkScheme::stbc(1), ConfigError);
    CHECK_THROWS_AS(BenchmarkScheme::stbc(5), ConfigError);

    CHECK(BenchmarkScheme::cooperative(1).branch_count == 2);
    CHECK(BenchmarkScheme::cooperative(3).relay_count() == 3);
    CHECK(BenchmarkScheme::cooperative(2).label() == "coop-r2");
    CHECK_THROWS_AS(BenchmarkScheme::cooperative(0), ConfigError);
}

TEST_CASE("single link against the exponential tail") {
    const auto est = direct_outage(FadingModel::rayleigh(1.0), QosTarget::from_rate(1.0), 10.0,
                                   1000000, test_streams(0));
    CHECK(within_3_sigma(est, 1.0 - std::exp(-0.1)));
}

TEST_CASE("single link against the gamma-envelope cdf") {
    // Shape 2, mean power 1: gain ~ Gamma(2, 1/2); P(10 g < 1) = P(g < 0.1)
    // = regularized P(2, 0.2).
    const auto est = direct_outage(FadingModel::nakagami(2.0, 1.0), QosTarget::from_rate(1.0),
                                   10.0, 1000000, test_streams(1));
    CHECK(within_3_sigma(est, oracle::regularized_gamma_p(2.0, 0.2)));
}

TEST_CASE("single link outage vanishes at extreme snr") {
    const auto est = direct_outage(FadingModel::rayleigh(1.0), QosTarget::from_rate(1.0), 1e12,
                                   100000, test_streams(2));
    CHECK(est.outage == 0.0);
}

TEST_CASE("two-antenna scheme against the two-term erlang cdf") {
    // Full-rate code, rate 1, snr 10: event sum of two unit exponentials
    // below 2 * 1 / 10.
    const auto est = stbc_outage(2, FadingModel::rayleigh(1.0), QosTarget::from_rate(1.0), 10.0,
                                 1000000, test_streams(3));
    CHECK(within_3_sigma(est, oracle::erlang_cdf(2, 0.2)));
}

TEST_CASE("three- and four-antenna schemes fold the code rate into the threshold") {
    // Rate 3/4 code: threshold 2^{4/3} - 1; event floor tx * thr / snr.
    const double threshold = std::exp2(4.0 / 3.0) - 1.0;
    CHECK(threshold == doctest::Approx(1.51984).epsilon(1e-5));

    const auto est3 = stbc_outage(3, FadingModel::rayleigh(1.0), QosTarget::from_rate(1.0), 10.0,
                                  1000000, test_streams(4));
    CHECK(within_3_sigma(est3, oracle::erlang_cdf(3, 3.0 * threshold / 10.0)));

    const auto est4 = stbc_outage(4, FadingModel::rayleigh(1.0), QosTarget::from_rate(1.0), 10.0,
                                  1000000, test_streams(5));
    CHECK(within_3_sigma(est4, oracle::erlang_cdf(4, 4.0 * threshold / 10.0)));
}

TEST_CASE("zero rate target never triggers an outage") {
    const auto est = stbc_outage(2, FadingModel::rayleigh(1.0), QosTarget::from_rate(0.0), 10.0,
                                 10000, test_streams(6));
    CHECK(est.outage == 0.0);
}

TEST_CASE("single-relay network against the semi-analytic oracle") {
    const auto est = cooperative_outage(1, FadingModel::rayleigh(1.0), QosTarget::from_rate(1.0),
                                        10.0, 1000000, test_streams(7));
    CHECK(within_3_sigma(est, oracle::cooperative_single_relay_outage(1.0, 10.0)));
}

TEST_CASE("partitioned event counting is independent of the split for every scheme") {
    const auto model = FadingModel::rayleigh(1.0);
    const auto qos = QosTarget::from_rate(1.0);
    const std::uint64_t n = 40000;
    for (const auto& scheme : {BenchmarkScheme::direct(), BenchmarkScheme::stbc(3),
                               BenchmarkScheme::cooperative(2)}) {
        const auto streams = test_streams(8);
        const auto whole = benchmark_outage_events(scheme, model, qos, 10.0, 0, n, streams);
        const auto split = benchmark_outage_events(scheme, model, qos, 10.0, 0, 17, streams) +
                           benchmark_outage_events(scheme, model, qos, 10.0, 17, 29000, streams) +
                           benchmark_outage_events(scheme, model, qos, 10.0, 29000, n, streams);
        CHECK(whole == split);
    }
}

TEST_CASE("relay diversity shows in a coarse two-point slope") {
    // Single relay: slope over a high-snr decade should approach 2.
    const auto model = FadingModel::rayleigh(1.0);
    const auto qos = QosTarget::from_rate(1.0);
    const auto lo = cooperative_outage(1, model, qos, snr_db_to_linear(20.0), 4000000,
                                       test_streams(9));
    const auto hi = cooperative_outage(1, model, qos, snr_db_to_linear(30.0), 4000000,
                                       test_streams(10));
    REQUIRE(lo.outage > 0.0);
    REQUIRE(hi.outage > 0.0);
    const double slope = -(std::log10(hi.outage) - std::log10(lo.outage));
    CHECK(slope == doctest::Approx(2.0).epsilon(0.1));
}

}  // TEST_SUITE
