#ifndef PTCD_TESTS_FIXTURES_HPP
#define PTCD_TESTS_FIXTURES_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "ptcd/rng.hpp"
#include "ptcd/weights.hpp"

// Shared randomized-test fixtures (not oracles; these call library code).
namespace fixtures {

/// Random valid weight vector: positive, strictly descending, sum 1. The
/// smallest weight is kept above 1e-4 so floating-point comparisons between
/// the waveform and analytic paths stay well conditioned.
inline ptcd::PowerWeights random_descending_weights(ptcd::RngStream& rng, std::size_t branches) {
    for (;;) {
        std::vector<double> w(branches);
        double sum = 0.0;
        for (auto& x : w) {
            x = rng.next_exponential(1.0) + 5e-3;
            sum += x;
        }
        for (auto& x : w) x /= sum;
        std::sort(w.begin(), w.end(), std::greater<>());
        bool ok = w.back() > 1e-4;
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (!(w[i] < w[i - 1])) ok = false;
        }
        if (!ok) continue;
        return ptcd::PowerWeights::from(w);
    }
}

}  // namespace fixtures

#endif
