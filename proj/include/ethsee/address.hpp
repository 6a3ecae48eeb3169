#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ethsee/keccak.hpp"

namespace ethsee {

/// 160-bit Ethereum account identifier. Stored raw; rendered as 40 lowercase
/// hex digits without a 0x prefix, or checksum-encoded via eip55_encode.
class Address {
public:
    static constexpr size_t kSize = 20;

    Address() : bytes_{} {}
    explicit Address(const std::array<uint8_t, kSize>& bytes) : bytes_(bytes) {}

    /// Accepts 40 hex digits with or without 0x prefix, any letter case.
    /// Throws std::invalid_argument otherwise.
    static Address from_hex(std::string_view hex);

    const std::array<uint8_t, kSize>& bytes() const { return bytes_; }
    std::span<const uint8_t> span() const { return bytes_; }

    /// 40 lowercase hex digits, no prefix.
    std::string hex() const;
    /// "0x" + 40 lowercase hex digits.
    std::string hex_prefixed() const { return "0x" + hex(); }

    bool operator==(const Address&) const = default;
    auto operator<=>(const Address&) const = default;

private:
    std::array<uint8_t, kSize> bytes_;
};

/// Checksum-cased address string: "0x" + 40 mixed-case hex digits whose
/// capitalization is exactly the checksum rule applied to the lowercase form.
class Eip55Address {
public:
    /// Validates the capitalization on construction; throws std::invalid_argument
    /// when the string is not the canonical checksum rendering.
    static Eip55Address parse(std::string_view text);

    const std::string& text() const { return text_; }
    Address address() const;

private:
    friend Eip55Address eip55_encode(const Address&);
    explicit Eip55Address(std::string text) : text_(std::move(text)) {}
    std::string text_;
};

enum class Eip55Status {
    ValidMixedCase,
    AllLowercase,   // string is lowercase AND its canonical form is lowercase
    AllUppercase,
    InvalidChecksum,
    Malformed,
};

struct Eip55Validation {
    Eip55Status status;
    /// Set with InvalidChecksum when the string is a single-case rendering of a
    /// valid address (checksum stripped rather than corrupted).
    bool case_insensitive_match = false;
};

const char* to_string(Eip55Status status);

/// Checksum rule: hash the 40-char lowercase hex (no prefix) with Keccak-256
/// and uppercase hex letter i iff digest nibble i >= 8.
Eip55Address eip55_encode(const Address& addr);

Eip55Validation eip55_validate(std::string_view text);

/// True when the canonical checksum rendering of addr contains no uppercase
/// letter (the hazard class for checksum-collision test accounts).
bool has_lowercase_checksum(const Address& addr);

}  // namespace ethsee
