#include "ptcd/engine.hpp"

#include <chrono>
#include <cstdio>
#include <thread>

#include "ptcd/errors.hpp"
#include "ptcd/version.hpp"

namespace ptcd {

SchemeSpec SchemeSpec::superposed(PowerWeights weights) {
    SchemeSpec spec;
    spec.label = "ptcd-L" + std::to_string(weights.branch_count());
    spec.superposition = std::move(weights);
    return spec;
}

SchemeSpec SchemeSpec::direct() {
    SchemeSpec spec;
    spec.benchmark = BenchmarkScheme::direct();
    spec.label = spec.benchmark->label();
    return spec;
}

SchemeSpec SchemeSpec::stbc(std::size_t tx_antennas) {
    SchemeSpec spec;
    spec.benchmark = BenchmarkScheme::stbc(tx_antennas);
    spec.label = spec.benchmark->label();
    return spec;
}

SchemeSpec SchemeSpec::cooperative(std::size_t relay_count) {
    SchemeSpec spec;
    spec.benchmark = BenchmarkScheme::cooperative(relay_count);
    spec.label = spec.benchmark->label();
    return spec;
}

void validate_config(const SweepConfig& config) {
    if (config.snr_grid_db.empty()) {
        throw ConfigError("snr grid must contain at least one point");
    }
    for (std::size_t i = 1; i < config.snr_grid_db.size(); ++i) {
        if (!(config.snr_grid_db[i] > config.snr_grid_db[i - 1])) {
            throw ConfigError("snr grid must be strictly ascending");
        }
    }
    if (config.trials_per_point == 0) {
        throw ConfigError("trials_per_point must be at least 1");
    }
    if (config.schemes.empty()) {
        throw ConfigError("scheme list must not be empty");
    }
    for (const auto& scheme : config.schemes) {
        if (scheme.superposition.has_value() == scheme.benchmark.has_value()) {
            throw ConfigError("scheme spec must be exactly one of superposition or benchmark");
        }
    }
}

namespace {

std::uint32_t stream_domain_for(const SchemeSpec& scheme) {
    if (scheme.is_superposition()) return stream_domain::kOutage;
    switch (scheme.benchmark->kind) {
        case BenchmarkKind::kDirect: return stream_domain::kDirect;
        case BenchmarkKind::kStbc: return stream_domain::kStbc;
        case BenchmarkKind::kCooperative: return stream_domain::kCooperative;
    }
    return stream_domain::kOutage;
}

std::uint64_t cell_events(const SchemeSpec& scheme, const SweepConfig& config, double snr_linear,
                          std::uint64_t trial_begin, std::uint64_t trial_end,
                          const TrialStreams& streams) {
    if (scheme.is_superposition()) {
        return superposition_outage_events(*scheme.superposition, config.model, config.qos,
                                           snr_linear, trial_begin, trial_end, streams);
    }
    return benchmark_outage_events(*scheme.benchmark, config.model, config.qos, snr_linear,
                                   trial_begin, trial_end, streams);
}

/// Splits [0, trials) into worker_count contiguous chunks and sums the event
/// counts. Addition is the only reduction, so the partition cannot change
/// the result.
std::uint64_t parallel_cell_events(const SchemeSpec& scheme, const SweepConfig& config,
                                   double snr_linear, const TrialStreams& streams,
                                   unsigned worker_count) {
    const std::uint64_t trials = config.trials_per_point;
    if (worker_count <= 1 || trials < 2 * worker_count) {
        return cell_events(scheme, config, snr_linear, 0, trials, streams);
    }
    std::vector<std::uint64_t> counts(worker_count, 0);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::uint64_t chunk = trials / worker_count;
    const std::uint64_t remainder = trials % worker_count;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < worker_count; ++w) {
        const std::uint64_t end = begin + chunk + (w < remainder ? 1 : 0);
        workers.emplace_back([&, w, begin, end] {
            counts[w] = cell_events(scheme, config, snr_linear, begin, end, streams);
        });
        begin = end;
    }
    for (auto& t : workers) t.join();
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, unsigned worker_count) {
    validate_config(config);
    if (worker_count < 1) {
        throw ConfigError("worker_count must be at least 1");
    }

    const auto start = std::chrono::steady_clock::now();

    SweepResult result;
    result.config = config;
    result.version = kVersion;

    for (const auto& scheme : config.schemes) {
        if (!scheme.is_superposition()) continue;
        if (auto warn = validate_operating_point(*scheme.superposition, config.qos)) {
            result.diagnostics.push_back(scheme.label + ": " + warn->message);
        }
    }

    const bool rayleigh = config.model.kind == FadingKind::kRayleigh;
    for (std::size_t si = 0; si < config.schemes.size(); ++si) {
        const auto& scheme = config.schemes[si];
        OutageCurve curve;
        curve.scheme_label = scheme.label;
        curve.points.reserve(config.snr_grid_db.size());
        for (std::size_t pi = 0; pi < config.snr_grid_db.size(); ++pi) {
            const double snr_db = config.snr_grid_db[pi];
            const double snr_linear = snr_db_to_linear(snr_db);
            TrialStreams streams{config.master_seed, stream_domain_for(scheme),
                                 static_cast<std::uint32_t>(si), static_cast<std::uint32_t>(pi)};
            const std::uint64_t events =
                parallel_cell_events(scheme, config, snr_linear, streams, worker_count);
            const OutageEstimate est = estimate_from_events(events, config.trials_per_point);

            OutagePoint point;
            point.snr_db = snr_db;
            point.outage = est.outage;
            point.trials = est.trials;
            point.ci_half_width = est.ci_half_width;
            if (scheme.is_superposition() && rayleigh) {
                point.bound = outage_bound_rayleigh(*scheme.superposition, config.qos, snr_linear);
            }
            curve.points.push_back(point);

            if (events < 100) {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "%s @ %g dB: %llu outage events (< 100); estimate unreliable",
                              scheme.label.c_str(), snr_db,
                              static_cast<unsigned long long>(events));
                result.diagnostics.emplace_back(buf);
            }
        }
        result.curves.push_back(std::move(curve));
    }

    result.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

OutageCurve reference_bound_curve(const PowerWeights& weights, const QosTarget& qos,
                                  const std::vector<double>& snr_grid_db) {
    if (snr_grid_db.empty()) {
        throw ConfigError("snr grid must contain at least one point");
    }
    for (std::size_t i = 1; i < snr_grid_db.size(); ++i) {
        if (!(snr_grid_db[i] > snr_grid_db[i - 1])) {
            throw ConfigError("snr grid must be strictly ascending");
        }
    }
    OutageCurve curve;
    curve.scheme_label = "bound-L" + std::to_string(weights.branch_count());
    curve.points.reserve(snr_grid_db.size());
    for (double snr_db : snr_grid_db) {
        OutagePoint point;
        point.snr_db = snr_db;
        point.outage = outage_bound_rayleigh(weights, qos, snr_db_to_linear(snr_db));
        point.trials = 0;
        point.ci_half_width = 0.0;
        point.bound = point.outage;
        curve.points.push_back(point);
    }
    return curve;
}

}  // namespace ptcd
