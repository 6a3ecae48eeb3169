#include "ethsee/secp256k1.hpp"

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include <cstring>
#include <stdexcept>

#include "ethsee/bytes.hpp"
#include "ethsee/keccak.hpp"

namespace ethsee {

namespace {

struct BnDeleter {
    void operator()(BIGNUM* p) const { BN_free(p); }
};
struct BnCtxDeleter {
    void operator()(BN_CTX* p) const { BN_CTX_free(p); }
};
struct GroupDeleter {
    void operator()(EC_GROUP* p) const { EC_GROUP_free(p); }
};
struct PointDeleter {
    void operator()(EC_POINT* p) const { EC_POINT_free(p); }
};

using BnPtr = std::unique_ptr<BIGNUM, BnDeleter>;
using BnCtxPtr = std::unique_ptr<BN_CTX, BnCtxDeleter>;
using GroupPtr = std::unique_ptr<EC_GROUP, GroupDeleter>;
using PointPtr = std::unique_ptr<EC_POINT, PointDeleter>;

GroupPtr make_group() {
    GroupPtr group(EC_GROUP_new_by_curve_name(NID_secp256k1));
    if (!group) throw std::runtime_error("secp256k1 group unavailable");
    return group;
}

// Group order, cached as raw big-endian bytes for the validity check.
const std::array<uint8_t, 32>& group_order_bytes() {
    static const std::array<uint8_t, 32> order = [] {
        GroupPtr group = make_group();
        BnCtxPtr ctx(BN_CTX_new());
        BnPtr n(BN_new());
        EC_GROUP_get_order(group.get(), n.get(), ctx.get());
        std::array<uint8_t, 32> out{};
        BN_bn2binpad(n.get(), out.data(), 32);
        return out;
    }();
    return order;
}

std::array<uint8_t, 64> point_to_xy(const EC_GROUP* group, const EC_POINT* point, BN_CTX* ctx) {
    BnPtr x(BN_new()), y(BN_new());
    if (EC_POINT_get_affine_coordinates(group, point, x.get(), y.get(), ctx) != 1)
        throw std::runtime_error("failed to read affine coordinates");
    std::array<uint8_t, 64> out{};
    BN_bn2binpad(x.get(), out.data(), 32);
    BN_bn2binpad(y.get(), out.data() + 32, 32);
    return out;
}

Address address_from_xy(const std::array<uint8_t, 64>& xy) {
    Hash256 digest = keccak256(std::span<const uint8_t>(xy.data(), xy.size()));
    std::array<uint8_t, 20> addr{};
    std::memcpy(addr.data(), digest.data() + 12, 20);
    return Address(addr);
}

}  // namespace

PrivateKey PrivateKey::from_bytes(const std::array<uint8_t, kSize>& bytes) {
    bool all_zero = true;
    for (uint8_t b : bytes)
        if (b != 0) all_zero = false;
    if (all_zero) throw std::invalid_argument("private key scalar is zero");

    const auto& order = group_order_bytes();
    // big-endian compare: require bytes < order
    if (std::memcmp(bytes.data(), order.data(), kSize) >= 0)
        throw std::invalid_argument("private key scalar >= group order");
    return PrivateKey(bytes);
}

PrivateKey PrivateKey::from_hex(std::string_view hex) {
    Bytes raw = ::ethsee::from_hex(hex);
    if (raw.size() > kSize) throw std::invalid_argument("private key longer than 32 bytes");
    std::array<uint8_t, kSize> bytes{};
    std::memcpy(bytes.data() + (kSize - raw.size()), raw.data(), raw.size());
    return from_bytes(bytes);
}

std::string PrivateKey::hex() const {
    return to_hex(bytes_);
}

std::array<uint8_t, 64> derive_public_key(const PrivateKey& key) {
    GroupPtr group = make_group();
    BnCtxPtr ctx(BN_CTX_new());
    BnPtr k(BN_bin2bn(key.bytes().data(), PrivateKey::kSize, nullptr));
    PointPtr point(EC_POINT_new(group.get()));
    if (EC_POINT_mul(group.get(), point.get(), k.get(), nullptr, nullptr, ctx.get()) != 1)
        throw std::runtime_error("scalar multiplication failed");
    return point_to_xy(group.get(), point.get(), ctx.get());
}

Address derive_address(const PrivateKey& key) {
    return address_from_xy(derive_public_key(key));
}

// ---------------------------------------------------------------------------
// KeypairStream
// ---------------------------------------------------------------------------

struct KeypairStream::Impl {
    GroupPtr group;
    BnCtxPtr ctx;
    BnPtr scalar;
    BnPtr order;
    PointPtr point;

    explicit Impl(const std::array<uint8_t, 32>& start) {
        group = make_group();
        ctx.reset(BN_CTX_new());
        order.reset(BN_new());
        EC_GROUP_get_order(group.get(), order.get(), ctx.get());

        // Reduce into [1, n): k = (start mod (n-1)) + 1.
        BnPtr raw(BN_bin2bn(start.data(), start.size(), nullptr));
        BnPtr n_minus_1(BN_dup(order.get()));
        BN_sub_word(n_minus_1.get(), 1);
        scalar.reset(BN_new());
        BN_mod(scalar.get(), raw.get(), n_minus_1.get(), ctx.get());
        BN_add_word(scalar.get(), 1);

        point.reset(EC_POINT_new(group.get()));
        if (EC_POINT_mul(group.get(), point.get(), scalar.get(), nullptr, nullptr, ctx.get()) != 1)
            throw std::runtime_error("scalar multiplication failed");
    }

    void advance() {
        BN_add_word(scalar.get(), 1);
        if (BN_cmp(scalar.get(), order.get()) >= 0) {
            // wrapped past n-1: restart at 1 (point = G)
            BN_one(scalar.get());
            EC_POINT_mul(group.get(), point.get(), scalar.get(), nullptr, nullptr, ctx.get());
            return;
        }
        const EC_POINT* generator = EC_GROUP_get0_generator(group.get());
        EC_POINT_add(group.get(), point.get(), point.get(), generator, ctx.get());
    }
};

KeypairStream::KeypairStream(const std::array<uint8_t, 32>& start_scalar)
    : impl_(std::make_unique<Impl>(start_scalar)) {}

KeypairStream::~KeypairStream() = default;
KeypairStream::KeypairStream(KeypairStream&&) noexcept = default;
KeypairStream& KeypairStream::operator=(KeypairStream&&) noexcept = default;

KeypairStream::Keypair KeypairStream::next() {
    std::array<uint8_t, 32> key_bytes{};
    BN_bn2binpad(impl_->scalar.get(), key_bytes.data(), 32);
    auto xy = point_to_xy(impl_->group.get(), impl_->point.get(), impl_->ctx.get());
    Keypair out{PrivateKey::from_bytes(key_bytes), address_from_xy(xy)};
    impl_->advance();
    return out;
}

}  // namespace ethsee
