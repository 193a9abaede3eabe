#include "rachaos/io.hpp"

#include <png.h>

#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

namespace rachaos {

namespace {

// Skips PGM whitespace and '#' comment lines; returns false at end of data.
bool skip_separators(std::span<const std::uint8_t> bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        const char c = char(bytes[pos]);
        if (c == '#') {
            while (pos < bytes.size() && char(bytes[pos]) != '\n') ++pos;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++pos;
        } else {
            return true;
        }
    }
    return false;
}

std::size_t parse_header_number(std::span<const std::uint8_t> bytes, std::size_t& pos) {
    if (!skip_separators(bytes, pos)) throw TruncatedData("PGM header ended early");
    if (!std::isdigit(bytes[pos])) throw UnsupportedFormat("malformed PGM header");
    std::size_t value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
        value = value * 10 + (bytes[pos] - '0');
        if (value > 1'000'000'000) throw UnsupportedFormat("PGM header number too large");
        ++pos;
    }
    return value;
}

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw UnsupportedFormat("not a PGM file");
    if (bytes[1] != '5')
        throw UnsupportedFormat("only binary PGM (P5) is supported");

    std::size_t pos = 2;
    const std::size_t width = parse_header_number(bytes, pos);
    const std::size_t height = parse_header_number(bytes, pos);
    const std::size_t maxval = parse_header_number(bytes, pos);
    if (maxval != 255) throw UnsupportedFormat("only maxval 255 is supported");
    if (width == 0 || height == 0) throw UnsupportedFormat("zero-sized PGM");

    // Exactly one whitespace byte separates the header from the raster.
    if (pos >= bytes.size()) throw TruncatedData("PGM raster missing");
    ++pos;

    const std::size_t n = width * height;
    if (bytes.size() - pos < n) throw TruncatedData("PGM raster shorter than header promises");
    return GrayImage(height, width,
                     std::vector<std::uint8_t>(bytes.begin() + std::ptrdiff_t(pos),
                                               bytes.begin() + std::ptrdiff_t(pos + n)));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
    if (image.empty()) throw EmptyImage();
    const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                               std::to_string(image.height()) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + image.size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), image.pixels().begin(), image.pixels().end());
    return out;
}

namespace {

struct PngReadState {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;
};

void png_read_callback(png_structp png, png_bytep dst, png_size_t count) {
    auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
    if (state->pos + count > state->bytes.size())
        png_error(png, "read past end of PNG data");
    std::memcpy(dst, state->bytes.data() + state->pos, count);
    state->pos += count;
}

}  // namespace

GrayImage read_png(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0)
        throw UnsupportedFormat("not a PNG file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error("libpng initialization failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error("libpng initialization failed");
    }

    std::vector<std::uint8_t> raster;
    std::vector<png_bytep> rows;
    std::size_t width = 0, height = 0, channels = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw UnsupportedFormat("PNG decode failed");
    }

    PngReadState state{bytes, 0};
    png_set_read_fn(png, &state, png_read_callback);
    png_read_info(png, info);

    // Normalize everything to 8-bit gray or RGB.
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_packing(png);
    png_set_expand(png);
    if (png_get_color_type(png, info) == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    width = png_get_image_width(png, info);
    height = png_get_image_height(png, info);
    channels = png_get_channels(png, info);
    if (width == 0 || height == 0 || (channels != 1 && channels != 3)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw UnsupportedFormat("unsupported PNG layout");
    }

    raster.resize(width * height * channels);
    rows.resize(height);
    for (std::size_t i = 0; i < height; ++i) rows[i] = raster.data() + i * width * channels;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    GrayImage out(height, width);
    auto dst = out.pixels();
    if (channels == 1) {
        std::memcpy(dst.data(), raster.data(), dst.size());
    } else {
        for (std::size_t i = 0; i < dst.size(); ++i) {
            const std::uint8_t* p = raster.data() + 3 * i;
            dst[i] = std::uint8_t((299u * p[0] + 587u * p[1] + 114u * p[2]) / 1000u);
        }
    }
    return out;
}

GrayImage load_image(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = read_file(path);
    if (bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0) return read_png(bytes);
    return read_pgm(bytes);
}

void save_pgm(const std::filesystem::path& path, const GrayImage& image) {
    write_file(path, write_pgm(image));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw Error("read failed on " + path.string());
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw Error("write failed on " + path.string());
}

}  // namespace rachaos
