#ifndef PTCD_QOS_HPP
#define PTCD_QOS_HPP

#include <cmath>

#include "ptcd/errors.hpp"

namespace ptcd {

/// Rate target and the matching outage threshold: threshold = 2^rate - 1.
/// The pair is kept consistent by construction.
struct QosTarget {
    double rate_bpcu = 1.0;
    double threshold_linear = 1.0;

    static QosTarget from_rate(double rate_bpcu) {
        if (!(rate_bpcu >= 0.0)) {
            throw ConfigError("rate target must be non-negative");
        }
        return {rate_bpcu, std::exp2(rate_bpcu) - 1.0};
    }

    static QosTarget from_threshold(double threshold_linear) {
        if (!(threshold_linear >= 0.0)) {
            throw ConfigError("outage threshold must be non-negative");
        }
        return {std::log2(1.0 + threshold_linear), threshold_linear};
    }
};

inline double snr_db_to_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

inline double snr_linear_to_db(double snr_linear) { return 10.0 * std::log10(snr_linear); }

}  // namespace ptcd

#endif
