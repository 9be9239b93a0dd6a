#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "ptcd/errors.hpp"
#include "ptcd/fading.hpp"
#include "ptcd/rng.hpp"

using namespace ptcd;

namespace {
RngStream test_stream(std::uint64_t trial) {
    return RngStream(2024, StreamId{stream_domain::kTest, 0, 0, trial});
}
}  // namespace

TEST_SUITE("fading") {

TEST_CASE("model validation") {
    CHECK_THROWS_AS(FadingModel::rayleigh(0.0), ConfigError);
    CHECK_THROWS_AS(FadingModel::rayleigh(-1.0), ConfigError);
    CHECK_THROWS_AS(FadingModel::nakagami(0.49), ConfigError);
    CHECK_THROWS_AS(FadingModel::nakagami(1.0, 0.0), ConfigError);
    CHECK(FadingModel::nakagami(0.5).shape_m == 0.5);
    CHECK(FadingModel::rayleigh().mean_power == 1.0);
}

TEST_CASE("rayleigh mean power and component variances") {
    const auto model = FadingModel::rayleigh(1.0);
    auto rng = test_stream(1);
    const int n = 1000000;
    double power = 0.0, re2 = 0.0, im2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto h = sample_gain(model, rng);
        power += std::norm(h);
        re2 += h.real() * h.real();
        im2 += h.imag() * h.imag();
    }
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(re2 / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(im2 / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("power-gain path matches the configured mean for both families") {
    auto rng = test_stream(2);
    const int n = 1000000;
    for (const auto& model :
         {FadingModel::rayleigh(2.0), FadingModel::nakagami(0.5), FadingModel::nakagami(2.0)}) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += sample_power_gain(model, rng);
        CHECK(sum / n == doctest::Approx(model.mean_power).epsilon(0.01));
    }
}

TEST_CASE("unit-shape gamma envelope is indistinguishable from rayleigh") {
    auto rng_a = test_stream(3);
    auto rng_b = test_stream(4);
    const std::size_t n = 100000;
    std::vector<double> rayleigh(n), nakagami_1(n);
    const auto ray = FadingModel::rayleigh(1.0);
    const auto nak = FadingModel::nakagami(1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        rayleigh[i] = sample_power_gain(ray, rng_a);
        nakagami_1[i] = sample_power_gain(nak, rng_b);
    }
    const double d = oracle::ks_two_sample(rayleigh, nakagami_1);
    CHECK(d < oracle::ks_critical_001(n, n));
}

TEST_CASE("gamma envelope variance matches the quadrature oracle") {
    // Shape 2, mean power 1 -> Gamma(2, 1/2) power gain.
    const auto model = FadingModel::nakagami(2.0, 1.0);
    const auto expected = oracle::gamma_moments_numeric(2.0, 0.5);
    auto rng = test_stream(5);
    const int n = 1000000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = sample_power_gain(model, rng);
        sum += g;
        sum2 += g * g;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(mean == doctest::Approx(expected.mean).epsilon(0.01));
    CHECK(std::abs(var - expected.variance) < 0.01);
}

TEST_CASE("complex gains carry the envelope power for the gamma family") {
    const auto model = FadingModel::nakagami(2.0, 1.0);
    auto rng = test_stream(6);
    const int n = 200000;
    double power = 0.0;
    std::complex<double> meanary{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const auto h = sample_gain(model, rng);
        power += std::norm(h);
        meanary += h;
    }
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.01));
    // Uniform phase: the complex mean vanishes.
    CHECK(std::abs(meanary) / n < 0.01);
}

TEST_CASE("block sampling is deterministic and validated") {
    const auto model = FadingModel::rayleigh(1.0);
    auto rng_a = test_stream(7);
    auto rng_b = test_stream(7);
    const auto block_a = sample_block(model, 32, rng_a);
    const auto block_b = sample_block(model, 32, rng_b);
    REQUIRE(block_a.block_len() == 32);
    for (std::size_t k = 0; k < 32; ++k) {
        CHECK(block_a.coefficients[k] == block_b.coefficients[k]);
        CHECK(std::isfinite(block_a.coefficients[k].real()));
        CHECK(std::isfinite(block_a.coefficients[k].imag()));
    }
    auto rng_c = test_stream(8);
    CHECK_THROWS_AS(sample_block(model, 0, rng_c), ConfigError);
}

}  // TEST_SUITE
