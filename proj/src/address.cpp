#include "ethsee/address.hpp"

#include <cctype>
#include <stdexcept>

#include "ethsee/bytes.hpp"

namespace ethsee {

Address Address::from_hex(std::string_view hex) {
    std::string_view body = strip_hex_prefix(hex);
    if (body.size() != kSize * 2) throw std::invalid_argument("address must be 40 hex digits");
    std::array<uint8_t, kSize> out{};
    for (size_t i = 0; i < kSize; ++i) {
        int hi = hex_value(body[2 * i]);
        int lo = hex_value(body[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("address contains non-hex characters");
        out[i] = static_cast<uint8_t>(hi << 4 | lo);
    }
    return Address(out);
}

std::string Address::hex() const {
    return to_hex(bytes_);
}

Eip55Address eip55_encode(const Address& addr) {
    std::string lower = addr.hex();
    Hash256 digest = keccak256(lower);
    std::string out = "0x";
    out.reserve(42);
    for (size_t i = 0; i < lower.size(); ++i) {
        char c = lower[i];
        int nibble = (i % 2 == 0) ? (digest[i / 2] >> 4) : (digest[i / 2] & 0x0f);
        if (c >= 'a' && c <= 'f' && nibble >= 8) c = static_cast<char>(c - 'a' + 'A');
        out.push_back(c);
    }
    return Eip55Address(std::move(out));
}

Eip55Address Eip55Address::parse(std::string_view text) {
    Eip55Validation v = eip55_validate(text);
    if (v.status == Eip55Status::Malformed || v.status == Eip55Status::InvalidChecksum)
        throw std::invalid_argument("not a canonical checksum address rendering");
    // AllUppercase strings equal their canonical form only when the checksum
    // uppercases every letter, so any accepted string is canonical as-is.
    return Eip55Address(std::string(text));
}

Address Eip55Address::address() const {
    return Address::from_hex(text_);
}

Eip55Validation eip55_validate(std::string_view text) {
    if (text.size() != 42 || text[0] != '0' || text[1] != 'x')
        return {Eip55Status::Malformed};
    std::string_view body = text.substr(2);
    bool has_upper = false, has_lower = false;
    for (char c : body) {
        if (!is_hex_digit(c)) return {Eip55Status::Malformed};
        if (c >= 'A' && c <= 'F') has_upper = true;
        if (c >= 'a' && c <= 'f') has_lower = true;
    }

    Address addr = Address::from_hex(body);
    std::string canonical = eip55_encode(addr).text();

    if (canonical == text) {
        bool canonical_has_upper = false;
        for (char c : canonical)
            if (c >= 'A' && c <= 'F') canonical_has_upper = true;
        if (!canonical_has_upper) return {Eip55Status::AllLowercase};
        if (!has_lower) return {Eip55Status::AllUppercase};
        return {Eip55Status::ValidMixedCase};
    }

    // Uppercasing every letter of an all-uppercase-checksum address would have
    // matched canonical above, so reaching here means the checksum fails.
    if (!has_upper || !has_lower) {
        // Single-case rendering: checksum stripped, not corrupted.
        return {Eip55Status::InvalidChecksum, /*case_insensitive_match=*/true};
    }
    return {Eip55Status::InvalidChecksum, false};
}

bool has_lowercase_checksum(const Address& addr) {
    const std::string& text = eip55_encode(addr).text();
    for (char c : text)
        if (c >= 'A' && c <= 'F') return false;
    return true;
}

const char* to_string(Eip55Status status) {
    switch (status) {
        case Eip55Status::ValidMixedCase: return "valid_mixed_case";
        case Eip55Status::AllLowercase: return "all_lowercase";
        case Eip55Status::AllUppercase: return "all_uppercase";
        case Eip55Status::InvalidChecksum: return "invalid_checksum";
        case Eip55Status::Malformed: return "malformed";
    }
    return "unknown";
}

}  // namespace ethsee
