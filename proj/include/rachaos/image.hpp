#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rachaos/error.hpp"

namespace rachaos {

// Row-major 8-bit grayscale raster. Used for both plaintexts and ciphertexts.
class GrayImage {
public:
    GrayImage() = default;

    GrayImage(std::size_t height, std::size_t width, std::uint8_t fill = 0)
        : height_(height), width_(width), pixels_(height * width, fill) {
        if (height == 0 || width == 0) throw EmptyImage();
    }

    GrayImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels)
        : height_(height), width_(width), pixels_(std::move(pixels)) {
        if (height == 0 || width == 0) throw EmptyImage();
        if (pixels_.size() != height * width)
            throw SizeMismatch("pixel buffer size does not match dimensions");
    }

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    std::size_t size() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }

    std::uint8_t operator()(std::size_t row, std::size_t col) const {
        return pixels_[row * width_ + col];
    }
    std::uint8_t& operator()(std::size_t row, std::size_t col) {
        return pixels_[row * width_ + col];
    }

    std::span<const std::uint8_t> pixels() const { return pixels_; }
    std::span<std::uint8_t> pixels() { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<std::uint8_t> pixels_;
};

}  // namespace rachaos
