#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "ptcd/errors.hpp"
#include "ptcd/fading.hpp"
#include "ptcd/interleaver.hpp"
#include "ptcd/rng.hpp"
#include "ptcd/siinr.hpp"

using namespace ptcd;

namespace {
ChannelRealization constant_channel(std::size_t n, std::complex<double> value) {
    ChannelRealization ch;
    ch.coefficients.assign(n, value);
    return ch;
}
}  // namespace

TEST_SUITE("siinr") {

TEST_CASE("two-branch worked example on a unit channel") {
    // Weights [0.8, 0.2], snr 10, all gains 1:
    // branch 1: 0.8 / (0.2 + 0.1) = 8/3; branch 2: 10 * 0.2 = 2.
    const auto weights = PowerWeights::reference(2);
    const auto set = InterleaverSet::build(8, 2);
    const auto channel = constant_channel(8, {1.0, 0.0});
    const auto breakdown = siinr_per_branch(channel, set, weights, 10.0, 3);
    REQUIRE(breakdown.per_branch.size() == 2);
    CHECK(breakdown.per_branch[0] == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK(breakdown.per_branch[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(breakdown.total == doctest::Approx(14.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("zero channel gives zero everywhere") {
    const auto weights = PowerWeights::reference(3);
    const auto set = InterleaverSet::build(6, 3);
    const auto breakdown = siinr_per_branch(constant_channel(6, {0.0, 0.0}), set, weights, 10.0, 0);
    for (double v : breakdown.per_branch) CHECK(v == 0.0);
    CHECK(breakdown.total == 0.0);
}

TEST_CASE("single branch reduces to plain snr") {
    const auto weights = PowerWeights::reference(1);
    const auto set = InterleaverSet::build(4, 1);
    const auto channel = constant_channel(4, {0.5, 0.5});  // |h|^2 = 0.5
    const auto breakdown = siinr_per_branch(channel, set, weights, 20.0, 2);
    CHECK(breakdown.total == doctest::Approx(20.0 * 0.5).epsilon(1e-12));
}

TEST_CASE("last branch is interference-free") {
    const auto weights = PowerWeights::reference(3);
    CHECK(branch_siinr(weights, 2, 1.7, 100.0) == doctest::Approx(100.0 * 0.01 * 1.7).epsilon(1e-12));
}

TEST_CASE("per-branch values respect the interference ceilings at any snr") {
    RngStream rng(77, StreamId{stream_domain::kTest, 1, 0, 0});
    const auto model = FadingModel::rayleigh(1.0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t branches = 2 + rng.next_u32() % 3;
        const auto weights = fixtures::random_descending_weights(rng, branches);
        const std::size_t n = branches + rng.next_u32() % 20;
        const auto set = InterleaverSet::build(n, branches);
        const auto channel = sample_block(model, n, rng);
        const double snr = std::pow(10.0, rng.next_double() * 8.0);  // up to 80 dB
        const auto breakdown =
            siinr_per_branch(channel, set, weights, snr, rng.next_u32() % n);
        double total = 0.0;
        for (std::size_t b = 0; b + 1 < branches; ++b) {
            CHECK(breakdown.per_branch[b] < weights.ceiling(b));
        }
        for (double v : breakdown.per_branch) total += v;
        CHECK(breakdown.total == doctest::Approx(total).epsilon(1e-12));
    }
}

TEST_CASE("dimension and argument validation") {
    const auto weights = PowerWeights::reference(2);
    const auto set = InterleaverSet::build(8, 2);
    const auto channel = constant_channel(8, {1.0, 0.0});
    CHECK_THROWS_AS(siinr_per_branch(channel, set, weights, 10.0, 8), ConfigError);
    CHECK_THROWS_AS(siinr_per_branch(channel, set, weights, 0.0, 0), ConfigError);
    CHECK_THROWS_AS(siinr_per_branch(channel, InterleaverSet::build(8, 3), weights, 10.0, 0),
                    ConfigError);
    CHECK_THROWS_AS(siinr_per_branch(constant_channel(4, {1.0, 0.0}), set, weights, 10.0, 0),
                    ConfigError);
}

}  // TEST_SUITE
