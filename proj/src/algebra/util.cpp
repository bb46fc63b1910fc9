#include <sodium.h>

#include <mutex>

#include "sdvc/bytes.hpp"
#include "sdvc/errors.hpp"
#include "sdvc/hash.hpp"
#include "sdvc/rng.hpp"

namespace sdvc {

namespace {
void ensure_sodium() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) fail(ErrorCode::InvalidArgument, "libsodium init failed");
    });
}
}  // namespace

std::string to_hex(BytesView data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2) fail(ErrorCode::Malformed, "odd hex length");
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = nib(hex[2 * i]), lo = nib(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) fail(ErrorCode::Malformed, "bad hex digit");
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::string base64url_encode(BytesView data) {
    ensure_sodium();
    std::string out(sodium_base64_encoded_len(data.size(), sodium_base64_VARIANT_URLSAFE_NO_PADDING), '\0');
    sodium_bin2base64(out.data(), out.size(), data.data(), data.size(),
                      sodium_base64_VARIANT_URLSAFE_NO_PADDING);
    out.resize(std::strlen(out.c_str()));
    return out;
}

Bytes base64url_decode(std::string_view text) {
    ensure_sodium();
    Bytes out(text.size() == 0 ? 0 : (text.size() / 4 + 1) * 3);
    size_t out_len = 0;
    if (text.empty()) return {};
    if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(), nullptr, &out_len,
                          nullptr, sodium_base64_VARIANT_URLSAFE_NO_PADDING) != 0) {
        fail(ErrorCode::Malformed, "invalid base64url");
    }
    out.resize(out_len);
    return out;
}

Digest sha256(BytesView data) {
    ensure_sodium();
    Digest d;
    crypto_hash_sha256(d.data(), data.data(), data.size());
    return d;
}

Digest sha256_iterate(const Digest& start, uint64_t rounds) {
    ensure_sodium();
    Digest d = start;
    for (uint64_t i = 0; i < rounds; ++i) crypto_hash_sha256(d.data(), d.data(), d.size());
    return d;
}

Sha256::Sha256() {
    ensure_sodium();
    static_assert(sizeof(crypto_hash_sha256_state) <= sizeof(state_));
    crypto_hash_sha256_init(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()));
}

Sha256& Sha256::update(BytesView data) {
    crypto_hash_sha256_update(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()),
                              data.data(), data.size());
    return *this;
}

Digest Sha256::finish() {
    Digest d;
    crypto_hash_sha256_final(reinterpret_cast<crypto_hash_sha256_state*>(state_.data()), d.data());
    return d;
}

void SystemRandom::fill(std::span<uint8_t> out) {
    ensure_sodium();
    randombytes_buf(out.data(), out.size());
}

SeededRandom::SeededRandom(BytesView seed) {
    ensure_sodium();
    Bytes s(seed.begin(), seed.end());
    Digest d = sha256(s);
    std::memcpy(key_, d.data(), 32);
}

SeededRandom::SeededRandom(uint64_t seed) {
    ensure_sodium();
    Bytes s(8);
    for (int i = 0; i < 8; ++i) s[i] = static_cast<uint8_t>(seed >> (8 * i));
    Digest d = sha256(s);
    std::memcpy(key_, d.data(), 32);
}

void SeededRandom::fill(std::span<uint8_t> out) {
    // ChaCha20 keystream with an incrementing 8-byte nonce per request.
    uint8_t nonce[crypto_stream_chacha20_NONCEBYTES] = {0};
    uint64_t c = counter_++;
    std::memcpy(nonce, &c, sizeof(c));
    std::memset(out.data(), 0, out.size());
    crypto_stream_chacha20_xor(out.data(), out.data(), out.size(), nonce, key_);
}

}  // namespace sdvc
