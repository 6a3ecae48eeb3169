#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ethsee {

/// Canonical ABI function signature: name plus ordered canonical type names.
/// The name is kept byte-for-byte, so non-ASCII codepoints survive untouched.
struct FunctionSignature {
    std::string name;
    std::vector<std::string> arg_types;

    /// "name(type1,type2,...)" with no spaces.
    std::string canonical() const;

    bool operator==(const FunctionSignature&) const = default;
};

/// First 4 bytes of the Keccak-256 of the UTF-8 canonical signature.
class Selector {
public:
    Selector() : bytes_{} {}
    explicit Selector(const std::array<uint8_t, 4>& bytes) : bytes_(bytes) {}
    static Selector from_hex(std::string_view hex);

    const std::array<uint8_t, 4>& bytes() const { return bytes_; }
    uint32_t value() const;  // big-endian interpretation
    /// "0x" + 8 lowercase hex digits.
    std::string hex() const;

    bool operator==(const Selector&) const = default;

private:
    std::array<uint8_t, 4> bytes_;
};

Selector compute_selector(const FunctionSignature& sig);
Selector compute_selector(std::string_view canonical_header);

constexpr size_t kMaxSignatureArity = 16;

/// Parses "name(args)" the way a header string is read off source code:
/// whitespace and parameter names dropped, uint/int expanded to uint256/int256,
/// every codepoint of the name preserved. Throws ParseError on unbalanced
/// parentheses, arity > 16, or unexpandable alias types.
FunctionSignature normalize_signature(std::string_view raw);

}  // namespace ethsee
