#include "ptcd/interleaver.hpp"

#include <string>

#include "ptcd/errors.hpp"

namespace ptcd {

InterleaverSet InterleaverSet::build(std::size_t block_len, std::size_t branch_count) {
    if (branch_count < 1) {
        throw ConfigError("branch count must be at least 1");
    }
    if (block_len < branch_count) {
        throw ConfigError("block length " + std::to_string(block_len) +
                          " cannot host " + std::to_string(branch_count) +
                          " pairwise-distinct copy positions; need block_len >= branch_count");
    }
    std::vector<std::vector<std::uint32_t>> perms(branch_count - 1);
    for (std::size_t i = 1; i < branch_count; ++i) {
        auto& p = perms[i - 1];
        p.resize(block_len);
        for (std::size_t k = 0; k < block_len; ++k) {
            p[k] = static_cast<std::uint32_t>((k + i) % block_len);
        }
    }
    return InterleaverSet(block_len, std::move(perms));
}

}  // namespace ptcd
