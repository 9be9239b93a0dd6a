#ifndef PTCD_ENGINE_HPP
#define PTCD_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptcd/fading.hpp"
#include "ptcd/outage.hpp"
#include "ptcd/qos.hpp"
#include "ptcd/schemes.hpp"
#include "ptcd/weights.hpp"

namespace ptcd {

/// One scheme slot in a sweep: either the superposition scheme (carries its
/// weight vector) or one of the benchmarks.
struct SchemeSpec {
    std::string label;
    std::optional<PowerWeights> superposition;
    std::optional<BenchmarkScheme> benchmark;

    static SchemeSpec superposed(PowerWeights weights);
    static SchemeSpec direct();
    static SchemeSpec stbc(std::size_t tx_antennas);
    static SchemeSpec cooperative(std::size_t relay_count);

    bool is_superposition() const { return superposition.has_value(); }
};

struct SweepConfig {
    std::vector<double> snr_grid_db;
    std::uint64_t trials_per_point = 10'000'000;
    std::uint64_t master_seed = 0;
    std::vector<SchemeSpec> schemes;
    QosTarget qos = QosTarget::from_rate(1.0);
    FadingModel model = FadingModel{};
};

/// Sweep output. Curves line up with config.schemes; every curve covers the
/// full SNR grid. Diagnostics are deterministic (they depend on counts, not
/// on timing or scheduling). wall_clock_seconds is informational only and is
/// never serialized into result files.
struct SweepResult {
    SweepConfig config;
    std::vector<OutageCurve> curves;
    std::vector<std::string> diagnostics;
    double wall_clock_seconds = 0.0;
    std::string version;
};

/// Throws ConfigError if the config violates any invariant (empty or
/// non-ascending grid, zero trials, no schemes).
void validate_config(const SweepConfig& config);

/// Runs every (scheme, SNR point) cell at trials_per_point trials.
/// Trial ranges are partitioned across worker_count threads; per-trial
/// counter-derived streams make the result bit-identical for any
/// worker_count. Superposition curves under Rayleigh carry the closed-form
/// bound per point.
SweepResult run_sweep(const SweepConfig& config, unsigned worker_count);

/// Pure evaluation of the closed-form Rayleigh bound across a grid
/// (trials = 0, ci = 0 on every point).
OutageCurve reference_bound_curve(const PowerWeights& weights, const QosTarget& qos,
                                  const std::vector<double>& snr_grid_db);

}  // namespace ptcd

#endif
