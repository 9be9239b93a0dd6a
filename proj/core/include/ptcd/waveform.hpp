#ifndef PTCD_WAVEFORM_HPP
#define PTCD_WAVEFORM_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "ptcd/fading.hpp"
#include "ptcd/interleaver.hpp"
#include "ptcd/rng.hpp"
#include "ptcd/siinr.hpp"
#include "ptcd/weights.hpp"

namespace ptcd {

/// One transmit block: N source symbols, their L interleaved branch copies,
/// and the weighted superposition that actually goes over the air.
/// E[|composite|^2] = 1 because the weights sum to 1 and symbols have unit
/// mean power.
struct WaveformFrame {
    std::vector<std::complex<double>> symbols;
    std::vector<std::vector<std::complex<double>>> branch_signals;
    std::vector<std::complex<double>> composite;

    std::size_t block_len() const { return symbols.size(); }
};

/// Weighted superposition: composite[k] = sum_b sqrt(w_b) * signals[b][k].
/// Throws ConfigError on branch-count or length mismatch.
std::vector<std::complex<double>> superpose(
    const std::vector<std::vector<std::complex<double>>>& branch_signals,
    const PowerWeights& weights);

/// Builds a frame of unit-power QPSK symbols: branch b carries symbol k at
/// time position p_b(k), so each symbol's copies land on distinct positions.
WaveformFrame make_qpsk_frame(const InterleaverSet& interleavers, const PowerWeights& weights,
                              RngStream& rng);

/// Noiseless channel pass: y[k] = sqrt(rho) * composite[k] * h[k].
std::vector<std::complex<double>> apply_channel(const std::vector<std::complex<double>>& composite,
                                                const ChannelRealization& channel,
                                                double snr_linear);

/// Channel pass with unit-variance circularly symmetric complex noise added.
std::vector<std::complex<double>> apply_channel(const std::vector<std::complex<double>>& composite,
                                                const ChannelRealization& channel,
                                                double snr_linear, RngStream& noise_rng);

/// Receive chain with genie-aided SIC: per branch, subtract the exactly
/// reconstructed stronger branches from the received block, then decompose
/// the residual at each copy position into desired / remaining-interference /
/// noise powers using the known symbols. Returns one breakdown per source
/// symbol position; values agree with the analytic siinr_per_branch path.
std::vector<SiinrBreakdown> measure_waveform_siinr(const WaveformFrame& frame,
                                                   const ChannelRealization& channel,
                                                   const InterleaverSet& interleavers,
                                                   const PowerWeights& weights,
                                                   double snr_linear);

}  // namespace ptcd

#endif
