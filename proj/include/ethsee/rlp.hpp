#pragma once

#include <cstdint>
#include <span>

#include "ethsee/address.hpp"
#include "ethsee/bytes.hpp"

namespace ethsee::rlp {

/// RLP string item. Single bytes < 0x80 encode as themselves.
Bytes encode_bytes(std::span<const uint8_t> data);

/// Minimal big-endian integer: zero encodes as the empty string.
Bytes encode_uint(uint64_t value);

/// List item over already-encoded payloads.
Bytes encode_list(std::span<const Bytes> items);

}  // namespace ethsee::rlp

namespace ethsee {

/// Deterministic address of the contract created by `deployer` at `nonce`:
/// last 20 bytes of keccak256(rlp([deployer, nonce])).
Address predict_contract_address(const Address& deployer, uint64_t nonce);

}  // namespace ethsee
