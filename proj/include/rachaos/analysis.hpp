#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rachaos/image.hpp"

namespace rachaos {

enum class Direction { horizontal, vertical, diagonal };

// Shannon entropy of the gray-level distribution, in bits (0..8).
double information_entropy(const GrayImage& image);

// Correlation of all adjacent pixel pairs in one direction (diagonal pairs
// are (i,j)-(i+1,j+1)), with population (1/N) covariance and deviations.
// A constant image has no defined correlation and raises ZeroVariance.
double correlation_coefficient(const GrayImage& image, Direction direction);

// Deterministic subsample of adjacent pairs (every k-th pair, k chosen so at
// most max_pairs survive) for scatter-plot export.
std::vector<std::pair<std::uint8_t, std::uint8_t>> adjacent_scatter(
    const GrayImage& image, Direction direction, std::size_t max_pairs);

// Percentage of positions where the two images differ.
double npcr(const GrayImage& a, const GrayImage& b);

struct Histogram {
    std::array<std::uint64_t, 256> counts{};
    double stddev = 0.0;  // population std over the 256 bins
};

Histogram histogram(const GrayImage& image);

// Copy of the image with the given rectangle (column x, row y, width w,
// height h) set to fill. Zero-area rectangles are allowed.
GrayImage crop_cipher(const GrayImage& image, std::size_t x, std::size_t y,
                      std::size_t w, std::size_t h, std::uint8_t fill = 0);

// pixel(i, j) = low when i+j is even, high otherwise. The worst case for
// prediction-based diffusion: every neighbor pair is maximally dissimilar.
GrayImage gen_checkerboard(std::size_t height, std::size_t width, std::uint8_t low,
                           std::uint8_t high);

struct MetricsReport {
    double entropy = 0.0;
    std::optional<double> cc_horizontal;
    std::optional<double> cc_vertical;
    std::optional<double> cc_diagonal;
    double npcr_percent = 0.0;
    std::array<std::uint64_t, 256> histogram{};
    double histogram_std = 0.0;
};

// Statistics of the encrypted image plus its change rate against the
// original. Correlations stay unset for directions where they are undefined.
MetricsReport evaluate(const GrayImage& original, const GrayImage& encrypted);

}  // namespace rachaos
