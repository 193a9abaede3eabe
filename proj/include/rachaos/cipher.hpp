#pragma once

#include <cstddef>

#include "rachaos/image.hpp"
#include "rachaos/key_schedule.hpp"

namespace rachaos {

struct CipherOptions {
    // When false the diffusion counts start at zero instead of the first 256
    // chaotic stream values. Decryption must use the same setting.
    bool chaotic_init = true;
    std::size_t warmup = 1000;
};

struct CipherOutput {
    GrayImage ciphertext;
    KeyMaterial key;
};

struct DecryptResult {
    GrayImage image;
    // False when the recovered plaintext does not hash back to the key
    // digest (wrong key, or a deliberately damaged ciphertext).
    bool hash_ok = true;
};

// Pipeline: hash -> derive params -> one chaotic stream of 256 + H*W values
// (first 256 seed the diffusion counts, the rest drive the confusion
// ranking) -> diffuse -> confuse.
CipherOutput encrypt(const GrayImage& image, const CipherOptions& options = {});

// Reverse pipeline: unconfuse then undiffuse, regenerating the stream from
// the key. Always returns the recovered image; hash_ok reports whether it
// matches the key digest.
DecryptResult decrypt(const GrayImage& ciphertext, const KeyMaterial& key,
                      const CipherOptions& options = {});

// Encrypts and decrypts a small built-in image and checks the round trip is
// bit-exact. Run at CLI startup: a failure means this build's transcendental
// functions disagree with themselves, which should never happen.
bool self_test();

}  // namespace rachaos
