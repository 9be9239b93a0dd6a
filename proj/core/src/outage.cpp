#include "ptcd/outage.hpp"

#include <cmath>
#include <cstdio>

#include "ptcd/errors.hpp"
#include "ptcd/siinr.hpp"

namespace ptcd {

OutageEstimate estimate_from_events(std::uint64_t events, std::uint64_t trials) {
    if (trials == 0) {
        throw ConfigError("outage estimation needs at least one trial");
    }
    OutageEstimate est;
    est.trials = trials;
    est.events = events;
    est.outage = static_cast<double>(events) / static_cast<double>(trials);
    est.ci_half_width = 1.96 * std::sqrt(est.outage * (1.0 - est.outage) /
                                         static_cast<double>(trials));
    return est;
}

std::uint64_t superposition_outage_events(const PowerWeights& weights, const FadingModel& model,
                                          const QosTarget& qos, double snr_linear,
                                          std::uint64_t trial_begin, std::uint64_t trial_end,
                                          const TrialStreams& streams) {
    if (!(snr_linear > 0.0)) {
        throw ConfigError("snr_linear must be positive");
    }
    const std::size_t branches = weights.branch_count();
    const double threshold = qos.threshold_linear;

    // Outage floor: a threshold above any non-final branch ceiling defeats
    // the SIC chain for every realization; no sampling needed.
    for (std::size_t b = 0; b + 1 < branches; ++b) {
        if (threshold > weights.ceiling(b)) {
            return trial_end - trial_begin;
        }
    }

    // Per-branch constants, iterated strongest-last so the interference-free
    // final branch (the only unbounded term) is tested first and most trials
    // resolve after a single draw at high SNR.
    std::vector<double> num_scale(branches);   // rho * w_b
    std::vector<double> den_scale(branches);   // rho * tail_b
    for (std::size_t b = 0; b < branches; ++b) {
        num_scale[b] = snr_linear * weights.value(b);
        den_scale[b] = snr_linear * weights.tail_sum_after(b);
    }

    std::uint64_t events = 0;
    for (std::uint64_t trial = trial_begin; trial < trial_end; ++trial) {
        RngStream rng = streams.at(trial);
        double total = 0.0;
        bool resolved_ok = false;
        for (std::size_t idx = branches; idx-- > 0;) {
            if (total >= threshold) {
                resolved_ok = true;  // gains are non-negative; sum can only grow
                break;
            }
            const double g = sample_power_gain(model, rng);
            total += num_scale[idx] * g / (den_scale[idx] * g + 1.0);
        }
        if (!resolved_ok && total < threshold) ++events;
    }
    return events;
}

OutageEstimate superposition_outage(const PowerWeights& weights, const FadingModel& model,
                                    const QosTarget& qos, double snr_linear, std::uint64_t trials,
                                    const TrialStreams& streams) {
    if (trials == 0) {
        throw ConfigError("outage estimation needs at least one trial");
    }
    const std::uint64_t events =
        superposition_outage_events(weights, model, qos, snr_linear, 0, trials, streams);
    return estimate_from_events(events, trials);
}

double outage_bound_rayleigh(const PowerWeights& weights, const QosTarget& qos,
                             double snr_linear) {
    if (!(snr_linear > 0.0)) {
        throw ConfigError("snr_linear must be positive");
    }
    const double threshold = qos.threshold_linear;
    double product = 1.0;
    for (std::size_t b = 0; b < weights.branch_count(); ++b) {
        const double margin = weights.value(b) - threshold * weights.tail_sum_after(b);
        if (margin < 0.0) {
            return 1.0;  // threshold above the branch ceiling: outage floor
        }
        // margin == 0 gives exp(-inf) = 0, i.e. a factor of exactly 1.
        product *= -std::expm1(-threshold / (snr_linear * margin));
    }
    return product;
}

std::optional<DegenerateWarning> validate_operating_point(const PowerWeights& weights,
                                                          const QosTarget& qos) {
    for (std::size_t b = 0; b + 1 < weights.branch_count(); ++b) {
        const double ceiling = weights.ceiling(b);
        if (!(qos.threshold_linear < ceiling)) {
            DegenerateWarning warn;
            warn.branch = b + 1;
            warn.ceiling = ceiling;
            warn.threshold = qos.threshold_linear;
            char buf[192];
            std::snprintf(buf, sizeof(buf),
                          "degenerate operating point: threshold %.6g reaches the branch-%zu "
                          "interference ceiling %.6g; outage floors at 1 regardless of SNR",
                          warn.threshold, warn.branch, warn.ceiling);
            warn.message = buf;
            return warn;
        }
    }
    return std::nullopt;
}

DiversityEstimate diversity_slope(const OutageCurve& curve, double asymptote_claim) {
    DiversityEstimate est;
    est.asymptote_claim = asymptote_claim;

    std::size_t positive_points = 0;
    for (const auto& p : curve.points) {
        if (p.outage > 0.0) ++positive_points;
    }
    if (positive_points < 2) {
        throw ConfigError("diversity slope needs at least two points with positive outage");
    }

    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
        const auto& a = curve.points[i];
        const auto& b = curve.points[i + 1];
        if (a.outage <= 0.0 || b.outage <= 0.0) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "slope pair (%g dB, %g dB) skipped: zero outage estimate "
                          "(Monte Carlo starvation)",
                          a.snr_db, b.snr_db);
            est.diagnostics.emplace_back(buf);
            continue;
        }
        // log10(rho) = snr_db / 10, so the log-log slope is
        // -(delta log10 P) * 10 / (delta snr_db).
        SlopePoint sp;
        sp.snr_db_midpoint = 0.5 * (a.snr_db + b.snr_db);
        sp.slope = -(std::log10(b.outage) - std::log10(a.outage)) * 10.0 /
                   (b.snr_db - a.snr_db);
        est.slopes.push_back(sp);
    }
    return est;
}

}  // namespace ptcd
