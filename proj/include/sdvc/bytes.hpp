#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

namespace sdvc {

using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline void append(Bytes& out, BytesView data) {
    out.insert(out.end(), data.begin(), data.end());
}

inline void append_u32be(Bytes& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

inline uint32_t read_u32be(BytesView in, size_t off) {
    return (uint32_t(in[off]) << 24) | (uint32_t(in[off + 1]) << 16) |
           (uint32_t(in[off + 2]) << 8) | uint32_t(in[off + 3]);
}

// Length-prefixed append: 4-byte big-endian length, then the bytes.
inline void append_lp(Bytes& out, BytesView data) {
    append_u32be(out, static_cast<uint32_t>(data.size()));
    append(out, data);
}

std::string to_hex(BytesView data);
Bytes from_hex(std::string_view hex);

// base64url without padding (RFC 4648 §5).
std::string base64url_encode(BytesView data);
Bytes base64url_decode(std::string_view text);

}  // namespace sdvc
