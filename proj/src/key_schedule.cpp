#include "rachaos/key_schedule.hpp"

namespace rachaos {

namespace {

std::uint32_t word_at(const Digest& digest, std::size_t index) {
    const std::uint8_t* p = digest.data() + 4 * index;
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

}  // namespace

Digest hash_image(const GrayImage& image) {
    if (image.empty()) throw EmptyImage("cannot hash an empty image");
    return Sha256::hash(image.pixels());
}

MapParams derive_params(const Digest& digest) {
    MapParams params;
    params.alpha = word_at(digest, 0) ^ word_at(digest, 1);
    params.beta = word_at(digest, 2) ^ word_at(digest, 3);
    // (w4^w5)+1 can reach 2^32, so widen before dividing.
    const std::uint64_t xw = std::uint64_t(word_at(digest, 4) ^ word_at(digest, 5)) + 1;
    const std::uint64_t yw = std::uint64_t(word_at(digest, 6) ^ word_at(digest, 7)) + 1;
    params.x_init = 1.0 / static_cast<double>(xw);
    params.y_init = 1.0 / static_cast<double>(yw);
    params.bias = 1e8;
    return params;
}

KeyMaterial key_material(const Digest& digest) {
    return KeyMaterial{digest, derive_params(digest)};
}

std::string format_key(const KeyMaterial& key) {
    return to_hex(key.digest) + "\n";
}

KeyMaterial parse_key(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    const auto digest = digest_from_hex(text);
    if (!digest) throw MalformedKey("key must be exactly 64 hex characters");
    return key_material(*digest);
}

}  // namespace rachaos
