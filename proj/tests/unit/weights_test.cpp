#include <vector>

#include "doctest.h"
#include "ptcd/errors.hpp"
#include "ptcd/weights.hpp"

using ptcd::ConfigError;
using ptcd::PowerWeights;

TEST_SUITE("weights") {

TEST_CASE("validation accepts the reference sets and rejects bad vectors") {
    for (std::size_t l = 1; l <= 4; ++l) {
        const auto w = PowerWeights::reference(l);
        CHECK(w.branch_count() == l);
    }
    CHECK_THROWS_AS(PowerWeights::reference(5), ConfigError);
    CHECK_THROWS_AS(PowerWeights::from({}), ConfigError);
    CHECK_THROWS_AS(PowerWeights::from({0.5, 0.5}), ConfigError);          // not descending
    CHECK_THROWS_AS(PowerWeights::from({0.2, 0.8}), ConfigError);          // ascending
    CHECK_THROWS_AS(PowerWeights::from({0.9, 0.2}), ConfigError);          // sum != 1
    CHECK_THROWS_AS(PowerWeights::from({1.2, -0.2}), ConfigError);         // negative entry
    CHECK_THROWS_AS(PowerWeights::from({0.5, 0.4, 0.0999}), ConfigError);  // sum off by 1e-4
    CHECK(PowerWeights::from({0.8, 0.2}).value(0) == 0.8);
    CHECK(PowerWeights::from({1.0}).branch_count() == 1);
}

TEST_CASE("tail sums") {
    const auto w = PowerWeights::reference(4);  // [0.8, 0.15, 0.04, 0.01]
    CHECK(w.tail_sum_after(0) == doctest::Approx(0.20).epsilon(1e-12));
    CHECK(w.tail_sum_after(1) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(w.tail_sum_after(2) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(w.tail_sum_after(3) == 0.0);
}

TEST_CASE("interference ceilings for the reference sets") {
    const auto w2 = PowerWeights::reference(2);
    CHECK(w2.ceiling(0) == doctest::Approx(4.0).epsilon(1e-12));

    const auto w3 = PowerWeights::reference(3);
    CHECK(w3.ceiling(0) == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(w3.ceiling(1) == doctest::Approx(9.0).epsilon(1e-12));

    const auto w4 = PowerWeights::reference(4);
    CHECK(w4.ceiling(0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(w4.ceiling(1) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(w4.ceiling(2) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("describe is human readable") {
    CHECK(PowerWeights::reference(2).describe() == "[0.8, 0.2]");
}

}  // TEST_SUITE
