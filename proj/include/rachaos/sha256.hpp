#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace rachaos {

using Digest = std::array<std::uint8_t, 32>;

// Streaming SHA-256 (FIPS 180-4). Self-contained so hashing is identical on
// every platform regardless of which crypto libraries are installed.
class Sha256 {
public:
    Sha256() { reset(); }

    void reset();
    void update(std::span<const std::uint8_t> data);
    Digest finish();

    static Digest hash(std::span<const std::uint8_t> data) {
        Sha256 h;
        h.update(data);
        return h.finish();
    }

private:
    void process_block(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_{};
    std::array<std::uint8_t, 64> buffer_{};
    std::uint64_t total_bytes_ = 0;
    std::size_t buffered_ = 0;
};

std::string to_hex(const Digest& digest);

// Parses exactly 64 hex characters (either case); nullopt on anything else.
std::optional<Digest> digest_from_hex(std::string_view hex);

}  // namespace rachaos
