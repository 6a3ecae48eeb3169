#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string_view>

#include "ethsee/address.hpp"

namespace ethsee {

/// secp256k1 scalar in [1, n). Validated on construction.
class PrivateKey {
public:
    static constexpr size_t kSize = 32;

    /// Throws std::invalid_argument when the scalar is zero or >= group order.
    static PrivateKey from_bytes(const std::array<uint8_t, kSize>& bytes);
    static PrivateKey from_hex(std::string_view hex);

    const std::array<uint8_t, kSize>& bytes() const { return bytes_; }
    std::string hex() const;

    bool operator==(const PrivateKey&) const = default;

private:
    explicit PrivateKey(const std::array<uint8_t, kSize>& bytes) : bytes_(bytes) {}
    std::array<uint8_t, kSize> bytes_;
};

/// 64-byte uncompressed public point, X||Y, no 0x04 tag.
std::array<uint8_t, 64> derive_public_key(const PrivateKey& key);

/// Last 20 bytes of keccak256(X||Y).
Address derive_address(const PrivateKey& key);

/// Sequential keypair walk for brute-force mining: starts at a seed-derived
/// scalar and advances by point addition, which is far cheaper than a fresh
/// scalar multiplication per candidate. Deterministic for a fixed start.
class KeypairStream {
public:
    /// Any 32 bytes; reduced into [1, n).
    explicit KeypairStream(const std::array<uint8_t, 32>& start_scalar);
    ~KeypairStream();
    KeypairStream(KeypairStream&&) noexcept;
    KeypairStream& operator=(KeypairStream&&) noexcept;
    KeypairStream(const KeypairStream&) = delete;
    KeypairStream& operator=(const KeypairStream&) = delete;

    struct Keypair {
        PrivateKey key;
        Address address;
    };

    /// Current keypair, then advances the walk by one.
    Keypair next();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace ethsee
