#include "ptcd/fading.hpp"

#include <cstdio>

#include "ptcd/errors.hpp"

namespace ptcd {

FadingModel FadingModel::rayleigh(double mean_power) {
    if (!(mean_power > 0.0)) {
        throw ConfigError("fading mean_power must be positive");
    }
    return {FadingKind::kRayleigh, 1.0, mean_power};
}

FadingModel FadingModel::nakagami(double shape_m, double mean_power) {
    if (!(shape_m >= 0.5)) {
        throw ConfigError("nakagami shape m must be >= 0.5");
    }
    if (!(mean_power > 0.0)) {
        throw ConfigError("fading mean_power must be positive");
    }
    return {FadingKind::kNakagami, shape_m, mean_power};
}

ChannelRealization sample_block(const FadingModel& model, std::size_t block_len, RngStream& rng) {
    if (block_len == 0) {
        throw ConfigError("channel block length must be positive");
    }
    ChannelRealization block;
    block.coefficients.resize(block_len);
    sample_gains(model, rng, block.coefficients);
    return block;
}

std::string FadingModel::describe() const {
    char buf[96];
    if (kind == FadingKind::kRayleigh) {
        std::snprintf(buf, sizeof(buf), "rayleigh(mean_power=%g)", mean_power);
    } else {
        std::snprintf(buf, sizeof(buf), "nakagami(m=%g, mean_power=%g)", shape_m, mean_power);
    }
    return buf;
}

}  // namespace ptcd
