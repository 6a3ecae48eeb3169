#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ethsee {

using Bytes = std::vector<uint8_t>;

/// Lowercase hex, no 0x prefix.
std::string to_hex(std::span<const uint8_t> data);

/// Parses hex with or without a 0x/0X prefix. Throws std::invalid_argument
/// on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

bool is_hex_digit(char c);
int hex_value(char c);

/// Drops a leading "0x"/"0X" if present.
std::string_view strip_hex_prefix(std::string_view s);

}  // namespace ethsee
