#include "ptcd/siinr.hpp"

#include "ptcd/errors.hpp"

namespace ptcd {

SiinrBreakdown siinr_per_branch(const ChannelRealization& channel,
                                const InterleaverSet& interleavers, const PowerWeights& weights,
                                double snr_linear, std::size_t position) {
    const std::size_t branches = weights.branch_count();
    if (interleavers.branch_count() != branches) {
        throw ConfigError("interleaver set and weights disagree on branch count");
    }
    if (channel.block_len() != interleavers.block_len()) {
        throw ConfigError("channel realization and interleaver block lengths differ");
    }
    if (position >= channel.block_len()) {
        throw ConfigError("position outside the block");
    }
    if (!(snr_linear > 0.0)) {
        throw ConfigError("snr_linear must be positive");
    }

    SiinrBreakdown out;
    out.per_branch.resize(branches);
    for (std::size_t b = 0; b < branches; ++b) {
        const auto h = channel.coefficients[interleavers.position(b, position)];
        out.per_branch[b] = branch_siinr(weights, b, std::norm(h), snr_linear);
        out.total += out.per_branch[b];
    }
    return out;
}

}  // namespace ptcd
