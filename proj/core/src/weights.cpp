#include "ptcd/weights.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "ptcd/errors.hpp"

namespace ptcd {

PowerWeights::PowerWeights(std::vector<double> values) : values_(std::move(values)) {
    tail_sums_.resize(values_.size());
    double tail = 0.0;
    for (std::size_t i = values_.size(); i-- > 0;) {
        tail_sums_[i] = tail;
        tail += values_[i];
    }
}

PowerWeights PowerWeights::from(std::vector<double> weights) {
    if (weights.empty()) {
        throw ConfigError("power weights must contain at least one branch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0)) {
            throw ConfigError("power weight " + std::to_string(i + 1) + " must be positive");
        }
        if (i > 0 && !(weights[i] < weights[i - 1])) {
            throw ConfigError("power weights must be strictly descending");
        }
        sum += weights[i];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "power weights must sum to 1 (got %.15g)", sum);
        throw ConfigError(buf);
    }
    return PowerWeights(std::move(weights));
}

PowerWeights PowerWeights::reference(std::size_t branch_count) {
    switch (branch_count) {
        case 1: return PowerWeights({1.0});
        case 2: return PowerWeights({0.8, 0.2});
        case 3: return PowerWeights({0.9, 0.09, 0.01});
        case 4: return PowerWeights({0.8, 0.15, 0.04, 0.01});
        default:
            throw ConfigError("no reference weight set for branch count " +
                              std::to_string(branch_count));
    }
}

std::string PowerWeights::describe() const {
    std::string out = "[";
    char buf[32];
    for (std::size_t i = 0; i < values_.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%g", values_[i]);
        if (i) out += ", ";
        out += buf;
    }
    out += "]";
    return out;
}

}  // namespace ptcd
