#include "rachaos/confusion.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rachaos {

RankPermutation rank_permutation(std::span<const double> values) {
    if (values.empty()) throw EmptySequence("cannot rank an empty sequence");
    if (values.size() > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("sequence too long for 32-bit ranks");

    std::vector<std::uint32_t> order(values.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&values](std::uint32_t a, std::uint32_t b) {
        if (values[a] != values[b]) return values[a] < values[b];
        return a < b;  // earlier position gets the lower rank
    });

    RankPermutation perm;
    perm.rank.resize(values.size());
    for (std::uint32_t k = 0; k < order.size(); ++k) perm.rank[order[k]] = k;
    return perm;
}

GrayImage confuse(const GrayImage& image, const RankPermutation& perm) {
    if (perm.size() != image.size())
        throw SizeMismatch("permutation length does not match pixel count");
    GrayImage out(image.height(), image.width());
    const auto in = image.pixels();
    const auto dst = out.pixels();
    for (std::size_t i = 0; i < in.size(); ++i) dst[perm.rank[i]] = in[i];
    return out;
}

GrayImage unconfuse(const GrayImage& image, const RankPermutation& perm) {
    if (perm.size() != image.size())
        throw SizeMismatch("permutation length does not match pixel count");
    GrayImage out(image.height(), image.width());
    const auto in = image.pixels();
    const auto dst = out.pixels();
    for (std::size_t i = 0; i < in.size(); ++i) dst[i] = in[perm.rank[i]];
    return out;
}

}  // namespace rachaos
