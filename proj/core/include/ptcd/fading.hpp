#ifndef PTCD_FADING_HPP
#define PTCD_FADING_HPP

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ptcd/rng.hpp"

namespace ptcd {

enum class FadingKind { kRayleigh, kNakagami };

/// Flat block-fading channel model. Gains are i.i.d. across branches and
/// trials; E[|h|^2] = mean_power for both families.
struct FadingModel {
    FadingKind kind = FadingKind::kRayleigh;
    double shape_m = 1.0;
    double mean_power = 1.0;

    /// Throws ConfigError on invalid parameters.
    static FadingModel rayleigh(double mean_power = 1.0);
    /// Nakagami-m envelope; requires shape_m >= 0.5. m = 1 coincides with Rayleigh.
    static FadingModel nakagami(double shape_m, double mean_power = 1.0);

    std::string describe() const;
};

/// Power gain |h|^2: exponential for Rayleigh, Gamma(m, mean_power/m) for
/// Nakagami. This is the scalar-simulation path; it draws no phase.
inline double sample_power_gain(const FadingModel& model, RngStream& rng) {
    if (model.kind == FadingKind::kRayleigh) return rng.next_exponential(model.mean_power);
    return rng.next_gamma(model.shape_m, model.mean_power / model.shape_m);
}

/// Complex gain h with uniform phase and the model's envelope distribution.
inline std::complex<double> sample_gain(const FadingModel& model, RngStream& rng) {
    if (model.kind == FadingKind::kRayleigh) return rng.next_cn(model.mean_power);
    const double power = rng.next_gamma(model.shape_m, model.mean_power / model.shape_m);
    const double phase = 2.0 * std::numbers::pi * rng.next_double();
    return std::polar(std::sqrt(power), phase);
}

inline void sample_gains(const FadingModel& model, RngStream& rng,
                         std::span<std::complex<double>> out) {
    for (auto& h : out) h = sample_gain(model, rng);
}

inline void sample_power_gains(const FadingModel& model, RngStream& rng, std::span<double> out) {
    for (auto& g : out) g = sample_power_gain(model, rng);
}

/// One block of per-sample flat-fading coefficients, i.i.d. across positions.
struct ChannelRealization {
    std::vector<std::complex<double>> coefficients;

    std::size_t block_len() const { return coefficients.size(); }
};

/// Draws a block of block_len i.i.d. coefficients from the model.
ChannelRealization sample_block(const FadingModel& model, std::size_t block_len, RngStream& rng);

}  // namespace ptcd

#endif
