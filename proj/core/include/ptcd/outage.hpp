#ifndef PTCD_OUTAGE_HPP
#define PTCD_OUTAGE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptcd/fading.hpp"
#include "ptcd/qos.hpp"
#include "ptcd/rng.hpp"
#include "ptcd/weights.hpp"

namespace ptcd {

/// One estimated point of an outage curve. bound is the closed-form upper
/// bound where one exists (superposition scheme under Rayleigh), else absent.
struct OutagePoint {
    double snr_db = 0.0;
    double outage = 0.0;
    std::uint64_t trials = 0;
    double ci_half_width = 0.0;
    std::optional<double> bound;
};

struct OutageCurve {
    std::string scheme_label;
    std::vector<OutagePoint> points;
};

struct OutageEstimate {
    double outage = 0.0;
    double ci_half_width = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t events = 0;
};

/// Factory for per-trial random streams at one (scheme, SNR point) cell.
/// Trial index is the only varying coordinate, so trial ranges can be
/// partitioned across workers in any way without changing a single draw.
struct TrialStreams {
    std::uint64_t master_seed = 0;
    std::uint32_t domain = 0;
    std::uint32_t scheme = 0;
    std::uint32_t point = 0;

    RngStream at(std::uint64_t trial) const {
        return RngStream(master_seed, StreamId{domain, scheme, point, trial});
    }
};

/// events/trials with a 95% normal-approximation confidence half-width.
OutageEstimate estimate_from_events(std::uint64_t events, std::uint64_t trials);

/// Counts outage events (total SIINR < threshold) over trials
/// [trial_begin, trial_end). Draws the per-branch power gains as independent
/// variates; the coordinated-interleaving guarantee is what justifies the
/// independence. If the threshold exceeds any branch ceiling the SIC chain
/// cannot succeed at any SNR and every trial is an outage.
std::uint64_t superposition_outage_events(const PowerWeights& weights, const FadingModel& model,
                                          const QosTarget& qos, double snr_linear,
                                          std::uint64_t trial_begin, std::uint64_t trial_end,
                                          const TrialStreams& streams);

/// Single-range convenience wrapper around superposition_outage_events.
OutageEstimate superposition_outage(const PowerWeights& weights, const FadingModel& model,
                                    const QosTarget& qos, double snr_linear, std::uint64_t trials,
                                    const TrialStreams& streams);

/// Closed-form Rayleigh upper bound on the superposition outage probability:
/// product over branches of 1 - exp(-thr / (rho * (w_i - thr * tail_i))),
/// and exactly 1 if thr > w_i / tail_i for some non-final branch (no SIC
/// order can succeed there).
double outage_bound_rayleigh(const PowerWeights& weights, const QosTarget& qos,
                             double snr_linear);

/// Raised when the threshold meets or exceeds a branch's interference
/// ceiling: the outage floor regime where added SNR buys nothing.
struct DegenerateWarning {
    std::size_t branch = 0;  ///< first violating branch, 1-based
    double ceiling = 0.0;
    double threshold = 0.0;
    std::string message;
};

/// ok (nullopt) iff threshold < w_i / tail_i for every non-final branch.
std::optional<DegenerateWarning> validate_operating_point(const PowerWeights& weights,
                                                          const QosTarget& qos);

struct SlopePoint {
    double snr_db_midpoint = 0.0;
    double slope = 0.0;
};

/// Finite-SNR log-log slopes of an outage curve; the high-SNR limit is the
/// diversity order. asymptote_claim records the caller's target order.
struct DiversityEstimate {
    std::vector<SlopePoint> slopes;
    double asymptote_claim = 0.0;
    std::vector<std::string> diagnostics;  ///< skipped pairs (zero-outage points)
};

/// Slope between each adjacent pair of positive-outage points:
/// -(log10 P2 - log10 P1) / (log10 rho2 - log10 rho1). Pairs touching a
/// zero estimate are skipped with a diagnostic; fewer than two positive
/// points is an error.
DiversityEstimate diversity_slope(const OutageCurve& curve, double asymptote_claim = 0.0);

}  // namespace ptcd

#endif
