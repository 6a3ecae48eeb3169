#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "ethsee/keccak.hpp"

namespace ethsee {

using Seed32 = std::array<uint8_t, 32>;

/// Deterministic byte stream: block i = keccak256(seed || i_le64). Portable
/// across platforms and independent of libc RNG state, which keeps seeded
/// miner runs byte-reproducible.
class RngStream {
public:
    explicit RngStream(const Seed32& seed);

    uint64_t next_u64();
    void fill(std::span<uint8_t> out);
    Seed32 next_seed32();

    /// Uniform in [0, bound) without modulo bias. bound must be > 0.
    uint64_t uniform(uint64_t bound);

private:
    void refill();

    std::array<uint8_t, 40> block_input_;  // seed || counter
    Hash256 block_;
    size_t pos_;
    uint64_t counter_;
};

/// Per-worker substream: keccak256(master || 0xff || index_le64).
Seed32 derive_worker_seed(const Seed32& master, uint64_t worker_index);

/// 64 hex chars parse as raw bytes; anything else is hashed, so "--seed demo"
/// works on the command line.
Seed32 seed_from_string(std::string_view text);

/// Default seed advertised in the README for reproducible runs.
Seed32 default_seed();

}  // namespace ethsee
