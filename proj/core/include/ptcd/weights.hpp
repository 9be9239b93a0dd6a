#ifndef PTCD_WEIGHTS_HPP
#define PTCD_WEIGHTS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace ptcd {

/// Ordered power-allocation vector for the superposed branches.
/// Invariants (enforced at construction): every weight positive, strictly
/// descending, and summing to 1 within 1e-12.
class PowerWeights {
public:
    /// Validates and adopts the given allocation; throws ConfigError.
    static PowerWeights from(std::vector<double> weights);

    /// Bundled reference allocations used by the shipped configs and tests:
    /// L=1 -> [1], L=2 -> [0.8, 0.2], L=3 -> [0.9, 0.09, 0.01],
    /// L=4 -> [0.8, 0.15, 0.04, 0.01].
    static PowerWeights reference(std::size_t branch_count);

    std::size_t branch_count() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double value(std::size_t i) const { return values_[i]; }

    /// Sum of weights strictly after branch i (0-based); 0 "for" the last branch.
    double tail_sum_after(std::size_t i) const { return tail_sums_[i]; }

    /// Interference ceiling w_i / tail_sum_after(i) for branch i < L-1.
    /// Branch i's SIINR can never exceed this, whatever the SNR.
    double ceiling(std::size_t i) const { return values_[i] / tail_sums_[i]; }

    std::string describe() const;

private:
    explicit PowerWeights(std::vector<double> values);

    std::vector<double> values_;
    std::vector<double> tail_sums_;
};

}  // namespace ptcd

#endif
