#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "rachaos/image.hpp"

namespace rachaos {

// Binary PGM ("P5"), maxval 255, '#' comments allowed in the header.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// Emits exactly "P5\n<w> <h>\n255\n" followed by the raw pixel bytes.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

// PNG import convenience: any 8-bit PNG is accepted; color inputs are
// reduced with integer BT.601 luma, floor-rounded ((299r+587g+114b)/1000).
// Note the conversion changes the bytes that feed the key derivation, so
// round-tripping through an external converter must use the same weights.
GrayImage read_png(std::span<const std::uint8_t> bytes);

// Loads a PGM or PNG file, dispatching on the magic bytes.
GrayImage load_image(const std::filesystem::path& path);

void save_pgm(const std::filesystem::path& path, const GrayImage& image);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace rachaos
