#ifndef PTCD_INTERLEAVER_HPP
#define PTCD_INTERLEAVER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ptcd {

/// Coordinated block interleavers for branches 2..L. Branch 1 is the identity
/// and is not stored. For every position k the set {k, p_1(k), .., p_{L-1}(k)}
/// has L distinct members, so the L copies of a symbol always ride on
/// distinct (hence independently faded) time positions.
class InterleaverSet {
public:
    /// Cyclic shifts p_i(k) = (k + i) mod N for i = 1..branch_count-1.
    /// Requires block_len >= branch_count; throws ConfigError otherwise.
    static InterleaverSet build(std::size_t block_len, std::size_t branch_count);

    std::size_t block_len() const { return block_len_; }
    std::size_t branch_count() const { return permutations_.size() + 1; }

    /// Permutation for branch index b in [1, branch_count); b = 0 is identity.
    const std::vector<std::uint32_t>& permutation(std::size_t b) const {
        return permutations_[b - 1];
    }

    /// Time position carrying symbol k's copy on branch b (b = 0 -> k itself).
    std::size_t position(std::size_t b, std::size_t k) const {
        return b == 0 ? k : permutations_[b - 1][k];
    }

private:
    InterleaverSet(std::size_t block_len, std::vector<std::vector<std::uint32_t>> permutations)
        : block_len_(block_len), permutations_(std::move(permutations)) {}

    std::size_t block_len_;
    std::vector<std::vector<std::uint32_t>> permutations_;
};

}  // namespace ptcd

#endif
