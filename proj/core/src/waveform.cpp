#include "ptcd/waveform.hpp"

#include <cmath>

#include "ptcd/errors.hpp"

namespace ptcd {

std::vector<std::complex<double>> superpose(
    const std::vector<std::vector<std::complex<double>>>& branch_signals,
    const PowerWeights& weights) {
    if (branch_signals.size() != weights.branch_count()) {
        throw ConfigError("superpose: branch signal count does not match weight count");
    }
    const std::size_t block_len = branch_signals.front().size();
    for (const auto& s : branch_signals) {
        if (s.size() != block_len) {
            throw ConfigError("superpose: branch signals have differing lengths");
        }
    }
    std::vector<std::complex<double>> composite(block_len, 0.0);
    for (std::size_t b = 0; b < branch_signals.size(); ++b) {
        const double amp = std::sqrt(weights.value(b));
        for (std::size_t k = 0; k < block_len; ++k) {
            composite[k] += amp * branch_signals[b][k];
        }
    }
    return composite;
}

WaveformFrame make_qpsk_frame(const InterleaverSet& interleavers, const PowerWeights& weights,
                              RngStream& rng) {
    if (interleavers.branch_count() != weights.branch_count()) {
        throw ConfigError("interleaver set and weights disagree on branch count");
    }
    const std::size_t n = interleavers.block_len();
    const std::size_t branches = weights.branch_count();

    WaveformFrame frame;
    frame.symbols.resize(n);
    const double amp = 1.0 / std::sqrt(2.0);
    for (auto& s : frame.symbols) {
        const std::uint32_t bits = rng.next_u32();
        s = {(bits & 1u) ? amp : -amp, (bits & 2u) ? amp : -amp};
    }

    frame.branch_signals.assign(branches, std::vector<std::complex<double>>(n));
    for (std::size_t b = 0; b < branches; ++b) {
        for (std::size_t k = 0; k < n; ++k) {
            frame.branch_signals[b][interleavers.position(b, k)] = frame.symbols[k];
        }
    }
    frame.composite = superpose(frame.branch_signals, weights);
    return frame;
}

std::vector<std::complex<double>> apply_channel(const std::vector<std::complex<double>>& composite,
                                                const ChannelRealization& channel,
                                                double snr_linear) {
    if (composite.size() != channel.block_len()) {
        throw ConfigError("apply_channel: block length mismatch");
    }
    if (!(snr_linear > 0.0)) {
        throw ConfigError("apply_channel: snr_linear must be positive");
    }
    const double amp = std::sqrt(snr_linear);
    std::vector<std::complex<double>> received(composite.size());
    for (std::size_t k = 0; k < composite.size(); ++k) {
        received[k] = amp * composite[k] * channel.coefficients[k];
    }
    return received;
}

std::vector<std::complex<double>> apply_channel(const std::vector<std::complex<double>>& composite,
                                                const ChannelRealization& channel,
                                                double snr_linear, RngStream& noise_rng) {
    auto received = apply_channel(composite, channel, snr_linear);
    for (auto& y : received) {
        y += noise_rng.next_cn(1.0);
    }
    return received;
}

std::vector<SiinrBreakdown> measure_waveform_siinr(const WaveformFrame& frame,
                                                   const ChannelRealization& channel,
                                                   const InterleaverSet& interleavers,
                                                   const PowerWeights& weights,
                                                   double snr_linear) {
    const std::size_t n = interleavers.block_len();
    const std::size_t branches = weights.branch_count();
    if (frame.block_len() != n || channel.block_len() != n) {
        throw ConfigError("measure_waveform_siinr: block length mismatch");
    }
    if (frame.branch_signals.size() != branches ||
        interleavers.branch_count() != branches) {
        throw ConfigError("measure_waveform_siinr: branch count mismatch");
    }
    if (!(snr_linear > 0.0)) {
        throw ConfigError("measure_waveform_siinr: snr_linear must be positive");
    }

    const auto received = apply_channel(frame.composite, channel, snr_linear);
    const double rho_amp = std::sqrt(snr_linear);

    // residual[t] starts as the noiseless received block; after branch b it
    // has branches 0..b exactly reconstructed and removed (genie SIC).
    auto residual = received;

    std::vector<SiinrBreakdown> out(n);
    for (auto& breakdown : out) breakdown.per_branch.resize(branches);

    std::vector<double> branch_amp(branches);
    for (std::size_t b = 0; b < branches; ++b) {
        branch_amp[b] = rho_amp * std::sqrt(weights.value(b));
    }

    for (std::size_t b = 0; b < branches; ++b) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t t = interleavers.position(b, k);
            const auto h = channel.coefficients[t];
            // Decompose the residual at t using the known symbols: peel off the
            // weaker-branch terms to isolate the desired one, and account their
            // powers as remaining interference. Reference noise power is 1.
            std::complex<double> desired_term = residual[t];
            double interference = 0.0;
            for (std::size_t j = b + 1; j < branches; ++j) {
                const auto term = branch_amp[j] * frame.branch_signals[j][t] * h;
                desired_term -= term;
                interference += std::norm(term);
            }
            out[k].per_branch[b] = std::norm(desired_term) / (interference + 1.0);
        }
        // Genie SIC: remove this branch's exact reconstruction before
        // detecting the next one.
        for (std::size_t t = 0; t < n; ++t) {
            residual[t] -= branch_amp[b] * frame.branch_signals[b][t] * channel.coefficients[t];
        }
    }

    for (auto& breakdown : out) {
        breakdown.total = 0.0;
        for (double v : breakdown.per_branch) breakdown.total += v;
    }
    return out;
}

}  // namespace ptcd
