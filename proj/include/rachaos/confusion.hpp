#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rachaos/image.hpp"

namespace rachaos {

// rank[i] is the position of value i in a stable ascending sort of the
// driving chaotic values (ties broken by earlier position), so rank is a
// bijection on [0, n).
struct RankPermutation {
    std::vector<std::uint32_t> rank;

    std::size_t size() const { return rank.size(); }
};

RankPermutation rank_permutation(std::span<const double> values);

// Scatter: output flat pixel rank[i] = input flat pixel i.
GrayImage confuse(const GrayImage& image, const RankPermutation& perm);

// Gather: output flat pixel i = input flat pixel rank[i].
GrayImage unconfuse(const GrayImage& image, const RankPermutation& perm);

}  // namespace rachaos
