#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace ethsee {

using Hash256 = std::array<uint8_t, 32>;

/// Keccak-256 with the original 0x01 domain padding (the Ethereum variant,
/// not FIPS-202 SHA3-256).
Hash256 keccak256(std::span<const uint8_t> data);
Hash256 keccak256(std::string_view text);

}  // namespace ethsee
