#include "ethsee/rlp.hpp"

#include <cstring>

#include "ethsee/keccak.hpp"

namespace ethsee::rlp {

namespace {

// Big-endian length bytes without leading zeros.
Bytes be_bytes(uint64_t value) {
    Bytes out;
    for (int shift = 56; shift >= 0; shift -= 8) {
        uint8_t b = static_cast<uint8_t>(value >> shift);
        if (!out.empty() || b != 0) out.push_back(b);
    }
    return out;
}

void append_length(Bytes& out, size_t len, uint8_t short_tag, uint8_t long_tag) {
    if (len <= 55) {
        out.push_back(static_cast<uint8_t>(short_tag + len));
    } else {
        Bytes len_bytes = be_bytes(len);
        out.push_back(static_cast<uint8_t>(long_tag + len_bytes.size()));
        out.insert(out.end(), len_bytes.begin(), len_bytes.end());
    }
}

}  // namespace

Bytes encode_bytes(std::span<const uint8_t> data) {
    if (data.size() == 1 && data[0] < 0x80) return Bytes{data[0]};
    Bytes out;
    append_length(out, data.size(), 0x80, 0xb7);
    out.insert(out.end(), data.begin(), data.end());
    return out;
}

Bytes encode_uint(uint64_t value) {
    Bytes digits = be_bytes(value);
    return encode_bytes(digits);
}

Bytes encode_list(std::span<const Bytes> items) {
    size_t payload_len = 0;
    for (const Bytes& item : items) payload_len += item.size();
    Bytes out;
    append_length(out, payload_len, 0xc0, 0xf7);
    for (const Bytes& item : items) out.insert(out.end(), item.begin(), item.end());
    return out;
}

}  // namespace ethsee::rlp

namespace ethsee {

Address predict_contract_address(const Address& deployer, uint64_t nonce) {
    Bytes items[2] = {rlp::encode_bytes(deployer.span()), rlp::encode_uint(nonce)};
    Bytes list = rlp::encode_list(items);
    Hash256 digest = keccak256(std::span<const uint8_t>(list.data(), list.size()));
    std::array<uint8_t, 20> addr{};
    std::memcpy(addr.data(), digest.data() + 12, 20);
    return Address(addr);
}

}  // namespace ethsee
