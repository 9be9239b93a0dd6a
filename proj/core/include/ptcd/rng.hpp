#ifndef PTCD_RNG_HPP
#define PTCD_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace ptcd {

/// One keyed block of the Philox 4x32-10 counter generator.
/// Counter-based: output depends only on (counter, key), so any trial of any
/// sweep can be regenerated in isolation, in any order, on any worker.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * counter[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * counter[2];
        counter = {static_cast<std::uint32_t>(p1 >> 32) ^ counter[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ counter[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return counter;
}

/// Coordinates of one logical random stream. Streams with distinct ids are
/// statistically independent; the same id always replays the same draws.
struct StreamId {
    std::uint32_t domain = 0;  ///< sampler family, see stream_domain
    std::uint32_t scheme = 0;  ///< scheme index within a sweep (< 4096)
    std::uint32_t point = 0;   ///< SNR point index (< 4096)
    std::uint64_t trial = 0;   ///< Monte Carlo trial index
};

namespace stream_domain {
inline constexpr std::uint32_t kChannel = 1;
inline constexpr std::uint32_t kNoise = 2;
inline constexpr std::uint32_t kSymbols = 3;
inline constexpr std::uint32_t kOutage = 4;
inline constexpr std::uint32_t kDirect = 5;
inline constexpr std::uint32_t kStbc = 6;
inline constexpr std::uint32_t kCooperative = 7;
inline constexpr std::uint32_t kTest = 200;
}  // namespace stream_domain

/// Deterministic random stream: (master_seed, StreamId) fully determines the
/// sequence of draws. Cheap to construct, no warm-up, no shared state.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, StreamId id)
        : key_{static_cast<std::uint32_t>(master_seed),
               static_cast<std::uint32_t>(master_seed >> 32)},
          trial_lo_(static_cast<std::uint32_t>(id.trial)),
          trial_hi_(static_cast<std::uint32_t>(id.trial >> 32)),
          tag_(((id.domain & 0xFFu) << 24) | ((id.scheme & 0xFFFu) << 12) | (id.point & 0xFFFu)) {}

    std::uint32_t next_u32() {
        if (index_ == 4) {
            buffer_ = philox4x32({block_++, trial_lo_, trial_hi_, tag_}, key_);
            index_ = 0;
        }
        return buffer_[index_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1); safe to pass to log().
    double next_open_double() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via the polar method; pairs are cached per stream.
    double next_gaussian() {
        if (has_cached_gaussian_) {
            has_cached_gaussian_ = false;
            return cached_gaussian_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_gaussian_ = v * f;
        has_cached_gaussian_ = true;
        return u * f;
    }

    /// Circularly symmetric complex Gaussian with E[|z|^2] = variance.
    std::complex<double> next_cn(double variance) {
        const double sigma = std::sqrt(0.5 * variance);
        return {sigma * next_gaussian(), sigma * next_gaussian()};
    }

    double next_exponential(double mean) { return -mean * std::log(next_open_double()); }

    /// Gamma(shape, scale) via Marsaglia-Tsang squeeze; exact for all shape > 0.
    double next_gamma(double shape, double scale) {
        if (shape < 1.0) {
            const double boost = std::pow(next_open_double(), 1.0 / shape);
            return next_gamma(shape + 1.0, scale) * boost;
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_gaussian();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = next_open_double();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t trial_lo_;
    std::uint32_t trial_hi_;
    std::uint32_t tag_;
    std::uint32_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int index_ = 4;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

}  // namespace ptcd

#endif
