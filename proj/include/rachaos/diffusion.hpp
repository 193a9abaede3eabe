#pragma once

#include <array>
#include <cstdint>

#include "rachaos/image.hpp"

namespace rachaos {

// Running occurrence counts of output gray levels. Counts are real so a
// chaotic initialization (values in [0, 1)) only perturbs tie-breaking and
// never outweighs a whole pixel.
using FrequencyTable = std::array<double, 256>;

// Bijective gray-value remapping built from a frequency table and a
// predicted gray value.
struct GrayMapping {
    std::array<std::uint8_t, 256> forward{};

    std::uint8_t apply(std::uint8_t value) const { return forward[value]; }

    std::array<std::uint8_t, 256> inverted() const {
        std::array<std::uint8_t, 256> inv{};
        for (int v = 0; v < 256; ++v) inv[forward[v]] = std::uint8_t(v);
        return inv;
    }
};

// Input slots are ordered by distance from the prediction (at equal distance
// the lower value first; once one side runs off the gray range, only the
// other side continues). Output values are ordered by (count ascending,
// value ascending). Slot k maps to output k, so values near the prediction
// land on the least-used gray levels.
GrayMapping build_mapping(const FrequencyTable& freq, std::uint8_t prediction);

// Self-adaptive diffusion. The first pixel passes through unchanged; every
// other pixel is remapped through build_mapping keyed on the original value
// of its predecessor (left neighbor, or the pixel above for a row start).
GrayImage diffuse(const GrayImage& image, const FrequencyTable& init);

// Exact inverse of diffuse for the same init table.
GrayImage undiffuse(const GrayImage& image, const FrequencyTable& init);

}  // namespace rachaos
