#ifndef PTCD_SIINR_HPP
#define PTCD_SIINR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ptcd/fading.hpp"
#include "ptcd/interleaver.hpp"
#include "ptcd/weights.hpp"

namespace ptcd {

/// Per-branch post-SIC SIINR values (linear) and their MRC total.
struct SiinrBreakdown {
    std::vector<double> per_branch;
    double total = 0.0;
};

/// SIINR of branch b (0-based) given its power gain g: the branch sees
/// residual interference only from the weaker branches j > b, plus unit
/// noise: rho*w_b*g / (rho*g*tail_b + 1). For the last branch the tail is
/// empty and this reduces to rho*w_L*g.
inline double branch_siinr(const PowerWeights& weights, std::size_t b, double gain,
                           double snr_linear) {
    const double num = snr_linear * weights.value(b) * gain;
    return num / (snr_linear * weights.tail_sum_after(b) * gain + 1.0);
}

/// Total SIINR from L already-deinterleaved branch power gains.
inline double total_siinr(const PowerWeights& weights, std::span<const double> gains,
                          double snr_linear) {
    double total = 0.0;
    for (std::size_t b = 0; b < gains.size(); ++b) {
        total += branch_siinr(weights, b, gains[b], snr_linear);
    }
    return total;
}

/// Analytic per-branch SIINR at block position k. Branch 0 reads the channel
/// at k directly; branches 1..L-1 read the deinterleaved coefficient, i.e.
/// the channel at position p_b(k).
SiinrBreakdown siinr_per_branch(const ChannelRealization& channel,
                                const InterleaverSet& interleavers, const PowerWeights& weights,
                                double snr_linear, std::size_t position);

}  // namespace ptcd

#endif
