#include "ethsee/rng.hpp"

#include <cstring>

#include "ethsee/bytes.hpp"

namespace ethsee {

RngStream::RngStream(const Seed32& seed) : pos_(0), counter_(0) {
    std::memcpy(block_input_.data(), seed.data(), 32);
    refill();
}

void RngStream::refill() {
    for (int i = 0; i < 8; ++i)
        block_input_[32 + i] = static_cast<uint8_t>(counter_ >> (8 * i));
    block_ = keccak256(std::span<const uint8_t>(block_input_.data(), block_input_.size()));
    ++counter_;
    pos_ = 0;
}

uint64_t RngStream::next_u64() {
    if (pos_ + 8 > block_.size()) refill();
    uint64_t out;
    std::memcpy(&out, block_.data() + pos_, 8);
    pos_ += 8;
    return out;
}

void RngStream::fill(std::span<uint8_t> out) {
    for (uint8_t& b : out) {
        if (pos_ >= block_.size()) refill();
        b = block_[pos_++];
    }
}

Seed32 RngStream::next_seed32() {
    Seed32 out{};
    fill(out);
    return out;
}

uint64_t RngStream::uniform(uint64_t bound) {
    // rejection sampling on the top of the range
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
}

Seed32 derive_worker_seed(const Seed32& master, uint64_t worker_index) {
    std::array<uint8_t, 41> input{};
    std::memcpy(input.data(), master.data(), 32);
    input[32] = 0xff;
    for (int i = 0; i < 8; ++i)
        input[33 + i] = static_cast<uint8_t>(worker_index >> (8 * i));
    return keccak256(std::span<const uint8_t>(input.data(), input.size()));
}

Seed32 seed_from_string(std::string_view text) {
    if (text.size() == 64) {
        bool all_hex = true;
        for (char c : text)
            if (!is_hex_digit(c)) all_hex = false;
        if (all_hex) {
            Bytes raw = from_hex(text);
            Seed32 out{};
            std::memcpy(out.data(), raw.data(), 32);
            return out;
        }
    }
    return keccak256(text);
}

Seed32 default_seed() {
    return keccak256(std::string_view("ethsee default seed v1"));
}

}  // namespace ethsee
