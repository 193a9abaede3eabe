#include "rachaos/analysis.hpp"

#include <cmath>

namespace rachaos {

namespace {

struct PairRange {
    std::size_t rows, cols;       // loop extents over the first pair element
    std::ptrdiff_t row_off, col_off;  // offset to the second pair element
};

PairRange pair_range(const GrayImage& image, Direction direction) {
    switch (direction) {
        case Direction::horizontal:
            return {image.height(), image.width() - 1, 0, 1};
        case Direction::vertical:
            return {image.height() - 1, image.width(), 1, 0};
        case Direction::diagonal:
            return {image.height() - 1, image.width() - 1, 1, 1};
    }
    throw std::invalid_argument("unknown direction");
}

void check_pairs(const GrayImage& image, Direction direction) {
    if (image.empty()) throw EmptyImage();
    const bool needs_rows = direction != Direction::horizontal;
    const bool needs_cols = direction != Direction::vertical;
    if ((needs_rows && image.height() < 2) || (needs_cols && image.width() < 2))
        throw std::invalid_argument("image has no adjacent pairs in this direction");
}

}  // namespace

double information_entropy(const GrayImage& image) {
    if (image.empty()) throw EmptyImage();
    std::array<std::uint64_t, 256> counts{};
    for (const std::uint8_t v : image.pixels()) ++counts[v];
    const double n = static_cast<double>(image.size());
    double entropy = 0.0;
    for (const std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = double(c) / n;
        entropy -= p * std::log2(p);
    }
    return entropy;
}

double correlation_coefficient(const GrayImage& image, Direction direction) {
    check_pairs(image, direction);
    const PairRange range = pair_range(image, direction);

    double sum_x = 0.0, sum_y = 0.0;
    const double n = double(range.rows) * double(range.cols);
    for (std::size_t i = 0; i < range.rows; ++i) {
        for (std::size_t j = 0; j < range.cols; ++j) {
            sum_x += image(i, j);
            sum_y += image(i + range.row_off, j + range.col_off);
        }
    }
    const double mean_x = sum_x / n, mean_y = sum_y / n;

    double cov = 0.0, var_x = 0.0, var_y = 0.0;
    for (std::size_t i = 0; i < range.rows; ++i) {
        for (std::size_t j = 0; j < range.cols; ++j) {
            const double dx = image(i, j) - mean_x;
            const double dy = image(i + range.row_off, j + range.col_off) - mean_y;
            cov += dx * dy;
            var_x += dx * dx;
            var_y += dy * dy;
        }
    }
    if (var_x == 0.0 || var_y == 0.0)
        throw ZeroVariance("adjacent pixels have zero deviation; correlation undefined");
    return (cov / n) / (std::sqrt(var_x / n) * std::sqrt(var_y / n));
}

std::vector<std::pair<std::uint8_t, std::uint8_t>> adjacent_scatter(
    const GrayImage& image, Direction direction, std::size_t max_pairs) {
    check_pairs(image, direction);
    if (max_pairs == 0) return {};
    const PairRange range = pair_range(image, direction);

    const std::size_t total = range.rows * range.cols;
    const std::size_t stride = (total + max_pairs - 1) / max_pairs;

    std::vector<std::pair<std::uint8_t, std::uint8_t>> points;
    points.reserve(std::min(total, max_pairs));
    for (std::size_t flat = 0; flat < total; flat += stride) {
        const std::size_t i = flat / range.cols;
        const std::size_t j = flat % range.cols;
        points.emplace_back(image(i, j), image(i + range.row_off, j + range.col_off));
    }
    return points;
}

double npcr(const GrayImage& a, const GrayImage& b) {
    if (a.height() != b.height() || a.width() != b.width())
        throw DimensionMismatch("images must have equal dimensions");
    if (a.empty()) throw EmptyImage();
    std::size_t changed = 0;
    const auto pa = a.pixels(), pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) changed += pa[i] != pb[i];
    return 100.0 * double(changed) / double(pa.size());
}

Histogram histogram(const GrayImage& image) {
    if (image.empty()) throw EmptyImage();
    Histogram h;
    for (const std::uint8_t v : image.pixels()) ++h.counts[v];
    const double mean = double(image.size()) / 256.0;
    double ss = 0.0;
    for (const std::uint64_t c : h.counts) {
        const double d = double(c) - mean;
        ss += d * d;
    }
    h.stddev = std::sqrt(ss / 256.0);
    return h;
}

GrayImage crop_cipher(const GrayImage& image, std::size_t x, std::size_t y,
                      std::size_t w, std::size_t h, std::uint8_t fill) {
    if (image.empty()) throw EmptyImage();
    if (x + w > image.width() || y + h > image.height())
        throw OutOfBounds("crop rectangle exceeds image bounds");
    GrayImage out = image;
    for (std::size_t i = y; i < y + h; ++i)
        for (std::size_t j = x; j < x + w; ++j) out(i, j) = fill;
    return out;
}

GrayImage gen_checkerboard(std::size_t height, std::size_t width, std::uint8_t low,
                           std::uint8_t high) {
    GrayImage out(height, width);
    for (std::size_t i = 0; i < height; ++i)
        for (std::size_t j = 0; j < width; ++j) out(i, j) = (i + j) % 2 == 0 ? low : high;
    return out;
}

MetricsReport evaluate(const GrayImage& original, const GrayImage& encrypted) {
    MetricsReport report;
    report.entropy = information_entropy(encrypted);
    const auto cc = [&encrypted](Direction d) -> std::optional<double> {
        try {
            return correlation_coefficient(encrypted, d);
        } catch (const ZeroVariance&) {
            return std::nullopt;
        }
    };
    report.cc_horizontal = cc(Direction::horizontal);
    report.cc_vertical = cc(Direction::vertical);
    report.cc_diagonal = cc(Direction::diagonal);
    report.npcr_percent = npcr(original, encrypted);
    const Histogram h = histogram(encrypted);
    report.histogram = h.counts;
    report.histogram_std = h.stddev;
    return report;
}

}  // namespace rachaos
