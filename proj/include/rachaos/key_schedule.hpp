#pragma once

#include <string>
#include <string_view>

#include "rachaos/image.hpp"
#include "rachaos/ra_map.hpp"
#include "rachaos/sha256.hpp"

namespace rachaos {

// The key is the SHA-256 digest of the plaintext; the map parameters are a
// pure function of it, so only the digest is ever serialized.
struct KeyMaterial {
    Digest digest{};
    MapParams params{};
};

// SHA-256 over the row-major pixel bytes, nothing else.
Digest hash_image(const GrayImage& image);

// Splits the digest into eight big-endian 32-bit words w0..w7 and folds them
// pairwise: alpha = w0^w1, beta = w2^w3, x_init = 1/((w4^w5)+1),
// y_init = 1/((w6^w7)+1). The +1 keeps both initial values in (0, 1].
MapParams derive_params(const Digest& digest);

KeyMaterial key_material(const Digest& digest);

// Key file format: 64 lowercase hex characters plus a trailing newline.
std::string format_key(const KeyMaterial& key);
KeyMaterial parse_key(std::string_view text);

}  // namespace rachaos
