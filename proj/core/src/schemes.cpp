#include "ptcd/schemes.hpp"

#include <cmath>
#include <string>

#include "ptcd/errors.hpp"

namespace ptcd {

BenchmarkScheme BenchmarkScheme::direct() { return {BenchmarkKind::kDirect, 1, 1.0}; }

BenchmarkScheme BenchmarkScheme::stbc(std::size_t tx_antennas) {
    if (tx_antennas < 2 || tx_antennas > 4) {
        throw ConfigError("stbc supports 2, 3 or 4 transmit antennas (got " +
                          std::to_string(tx_antennas) + ")");
    }
    return {BenchmarkKind::kStbc, tx_antennas, tx_antennas == 2 ? 1.0 : 0.75};
}

BenchmarkScheme BenchmarkScheme::cooperative(std::size_t relay_count) {
    if (relay_count < 1) {
        throw ConfigError("cooperative scheme needs at least one relay");
    }
    return {BenchmarkKind::kCooperative, relay_count + 1, 1.0};
}

std::string BenchmarkScheme::label() const {
    switch (kind) {
        case BenchmarkKind::kDirect: return "direct";
        case BenchmarkKind::kStbc: return "stbc-tx" + std::to_string(branch_count);
        case BenchmarkKind::kCooperative: return "coop-r" + std::to_string(relay_count());
    }
    return "unknown";
}

namespace {

std::uint64_t direct_events(const FadingModel& model, const QosTarget& qos, double snr_linear,
                            std::uint64_t trial_begin, std::uint64_t trial_end,
                            const TrialStreams& streams) {
    // Outage iff rho * g < threshold, i.e. g < threshold / rho.
    const double gain_floor = qos.threshold_linear / snr_linear;
    std::uint64_t events = 0;
    for (std::uint64_t trial = trial_begin; trial < trial_end; ++trial) {
        RngStream rng = streams.at(trial);
        if (sample_power_gain(model, rng) < gain_floor) ++events;
    }
    return events;
}

std::uint64_t stbc_events(const BenchmarkScheme& scheme, const FadingModel& model,
                          const QosTarget& qos, double snr_linear, std::uint64_t trial_begin,
                          std::uint64_t trial_end, const TrialStreams& streams) {
    const std::size_t tx = scheme.branch_count;
    // Code rate scales the rate target: effective threshold 2^(rate/R_k) - 1.
    const double threshold = std::exp2(qos.rate_bpcu / scheme.code_rate) - 1.0;
    // Equal power split: outage iff (rho/tx) * sum g < threshold.
    const double gain_floor = threshold * static_cast<double>(tx) / snr_linear;
    std::uint64_t events = 0;
    for (std::uint64_t trial = trial_begin; trial < trial_end; ++trial) {
        RngStream rng = streams.at(trial);
        double sum = 0.0;
        for (std::size_t a = 0; a < tx && sum < gain_floor; ++a) {
            sum += sample_power_gain(model, rng);
        }
        if (sum < gain_floor) ++events;
    }
    return events;
}

std::uint64_t cooperative_events(const BenchmarkScheme& scheme, const FadingModel& model,
                                 const QosTarget& qos, double snr_linear,
                                 std::uint64_t trial_begin, std::uint64_t trial_end,
                                 const TrialStreams& streams) {
    const std::size_t nodes = scheme.branch_count;  // source + relays
    const std::size_t relays = scheme.relay_count();
    const double node_snr = snr_linear / static_cast<double>(nodes);
    // nodes time slots are spent per message, so the per-slot rate target is
    // rate * nodes.
    const double threshold = std::exp2(qos.rate_bpcu * static_cast<double>(nodes)) - 1.0;
    const double gain_floor = threshold / node_snr;

    std::uint64_t events = 0;
    for (std::uint64_t trial = trial_begin; trial < trial_end; ++trial) {
        RngStream rng = streams.at(trial);
        // Draw order is fixed: source-destination, then per relay the
        // source-relay link and, only if that relay decodes, its
        // relay-destination link. Non-decoding relays stay silent.
        double combined = sample_power_gain(model, rng);
        for (std::size_t r = 0; r < relays && combined < gain_floor; ++r) {
            const double source_relay = sample_power_gain(model, rng);
            if (node_snr * source_relay >= threshold) {
                combined += sample_power_gain(model, rng);
            }
        }
        if (combined < gain_floor) ++events;
    }
    return events;
}

}  // namespace

std::uint64_t benchmark_outage_events(const BenchmarkScheme& scheme, const FadingModel& model,
                                      const QosTarget& qos, double snr_linear,
                                      std::uint64_t trial_begin, std::uint64_t trial_end,
                                      const TrialStreams& streams) {
    if (!(snr_linear > 0.0)) {
        throw ConfigError("snr_linear must be positive");
    }
    switch (scheme.kind) {
        case BenchmarkKind::kDirect:
            return direct_events(model, qos, snr_linear, trial_begin, trial_end, streams);
        case BenchmarkKind::kStbc:
            return stbc_events(scheme, model, qos, snr_linear, trial_begin, trial_end, streams);
        case BenchmarkKind::kCooperative:
            return cooperative_events(scheme, model, qos, snr_linear, trial_begin, trial_end,
                                      streams);
    }
    throw ConfigError("unknown benchmark scheme");
}

OutageEstimate benchmark_outage(const BenchmarkScheme& scheme, const FadingModel& model,
                                const QosTarget& qos, double snr_linear, std::uint64_t trials,
                                const TrialStreams& streams) {
    if (trials == 0) {
        throw ConfigError("outage estimation needs at least one trial");
    }
    const std::uint64_t events =
        benchmark_outage_events(scheme, model, qos, snr_linear, 0, trials, streams);
    return estimate_from_events(events, trials);
}

OutageEstimate direct_outage(const FadingModel& model, const QosTarget& qos, double snr_linear,
                             std::uint64_t trials, const TrialStreams& streams) {
    return benchmark_outage(BenchmarkScheme::direct(), model, qos, snr_linear, trials, streams);
}

OutageEstimate stbc_outage(std::size_t tx_antennas, const FadingModel& model,
                           const QosTarget& qos, double snr_linear, std::uint64_t trials,
                           const TrialStreams& streams) {
    return benchmark_outage(BenchmarkScheme::stbc(tx_antennas), model, qos, snr_linear, trials,
                            streams);
}

OutageEstimate cooperative_outage(std::size_t relay_count, const FadingModel& model,
                                  const QosTarget& qos, double snr_linear, std::uint64_t trials,
                                  const TrialStreams& streams) {
    return benchmark_outage(BenchmarkScheme::cooperative(relay_count), model, qos, snr_linear,
                            trials, streams);
}

}  // namespace ptcd
