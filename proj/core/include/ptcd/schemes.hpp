#ifndef PTCD_SCHEMES_HPP
#define PTCD_SCHEMES_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "ptcd/fading.hpp"
#include "ptcd/outage.hpp"
#include "ptcd/qos.hpp"

namespace ptcd {

enum class BenchmarkKind { kDirect, kStbc, kCooperative };

/// Comparison schemes, normalized for fairness against the superposition
/// scheme: equal total transmit power and equal end-to-end rate target.
/// - Direct: single link, full power, rate as given.
/// - STBC: tx antennas split the power evenly; the rate target is scaled by
///   the code rate (1 for 2 antennas, 3/4 for 3 or 4).
/// - Cooperative decode-and-forward: source plus relay_count relays split the
///   power evenly and need relay_count+1 time slots, so the per-slot rate
///   target is scaled up accordingly.
struct BenchmarkScheme {
    BenchmarkKind kind = BenchmarkKind::kDirect;
    std::size_t branch_count = 1;  ///< tx antennas (STBC) or 1 + relay_count (cooperative)
    double code_rate = 1.0;

    static BenchmarkScheme direct();
    static BenchmarkScheme stbc(std::size_t tx_antennas);
    static BenchmarkScheme cooperative(std::size_t relay_count);

    std::size_t relay_count() const { return branch_count - 1; }
    std::string label() const;
};

/// Outage event count for the scheme over trials [trial_begin, trial_end),
/// using one deterministic stream per trial (same contract as the
/// superposition estimator).
std::uint64_t benchmark_outage_events(const BenchmarkScheme& scheme, const FadingModel& model,
                                      const QosTarget& qos, double snr_linear,
                                      std::uint64_t trial_begin, std::uint64_t trial_end,
                                      const TrialStreams& streams);

OutageEstimate benchmark_outage(const BenchmarkScheme& scheme, const FadingModel& model,
                                const QosTarget& qos, double snr_linear, std::uint64_t trials,
                                const TrialStreams& streams);

/// Convenience single-scheme wrappers.
OutageEstimate direct_outage(const FadingModel& model, const QosTarget& qos, double snr_linear,
                             std::uint64_t trials, const TrialStreams& streams);
OutageEstimate stbc_outage(std::size_t tx_antennas, const FadingModel& model,
                           const QosTarget& qos, double snr_linear, std::uint64_t trials,
                           const TrialStreams& streams);
OutageEstimate cooperative_outage(std::size_t relay_count, const FadingModel& model,
                                  const QosTarget& qos, double snr_linear, std::uint64_t trials,
                                  const TrialStreams& streams);

}  // namespace ptcd

#endif
