#include "rachaos/cipher.hpp"

#include <span>

#include "rachaos/confusion.hpp"
#include "rachaos/diffusion.hpp"

namespace rachaos {

namespace {

constexpr std::size_t kInitValues = 256;

FrequencyTable init_table(std::span<const double> stream_head, bool chaotic) {
    FrequencyTable table{};
    if (chaotic) {
        for (std::size_t i = 0; i < kInitValues; ++i) table[i] = stream_head[i];
    }
    return table;
}

}  // namespace

CipherOutput encrypt(const GrayImage& image, const CipherOptions& options) {
    if (image.empty()) throw EmptyImage("cannot encrypt an empty image");

    const KeyMaterial key = key_material(hash_image(image));
    const ChaoticStream stream =
        generate_stream(key.params, options.warmup, kInitValues + image.size());
    const std::span<const double> values(stream.values);

    const FrequencyTable init = init_table(values.first(kInitValues), options.chaotic_init);
    const GrayImage diffused = diffuse(image, init);

    const RankPermutation perm = rank_permutation(values.subspan(kInitValues));
    return CipherOutput{confuse(diffused, perm), key};
}

DecryptResult decrypt(const GrayImage& ciphertext, const KeyMaterial& key,
                      const CipherOptions& options) {
    if (ciphertext.empty()) throw EmptyImage("cannot decrypt an empty image");

    // Re-derive from the digest so a hand-constructed KeyMaterial with
    // inconsistent params cannot desynchronize the stream.
    const MapParams params = derive_params(key.digest);
    const ChaoticStream stream =
        generate_stream(params, options.warmup, kInitValues + ciphertext.size());
    const std::span<const double> values(stream.values);

    const RankPermutation perm = rank_permutation(values.subspan(kInitValues));
    const GrayImage diffused = unconfuse(ciphertext, perm);

    const FrequencyTable init = init_table(values.first(kInitValues), options.chaotic_init);
    DecryptResult result{undiffuse(diffused, init), true};
    result.hash_ok = hash_image(result.image) == key.digest;
    return result;
}

bool self_test() {
    GrayImage probe(8, 8);
    auto px = probe.pixels();
    for (std::size_t i = 0; i < px.size(); ++i)
        px[i] = std::uint8_t((i * 37 + (i * i) % 11) % 256);

    const CipherOutput sealed = encrypt(probe);
    const DecryptResult opened = decrypt(sealed.ciphertext, sealed.key);
    return opened.hash_ok && opened.image == probe;
}

}  // namespace rachaos
