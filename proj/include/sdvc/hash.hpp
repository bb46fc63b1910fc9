#pragma once

#include <array>

#include "sdvc/bytes.hpp"

namespace sdvc {

using Digest = std::array<uint8_t, 32>;

Digest sha256(BytesView data);

/// k-fold iteration of SHA-256: H^0(x) = x truncated/padded is not defined,
/// so k must be >= 1 for a digest of arbitrary input; iterate(d, k) applies
/// the hash k times to a 32-byte state.
Digest sha256_iterate(const Digest& start, uint64_t rounds);

class Sha256 {
public:
    Sha256();
    Sha256& update(BytesView data);
    Digest finish();

private:
    std::array<uint8_t, 104> state_;  // crypto_hash_sha256_state
};

inline Bytes digest_bytes(const Digest& d) {
    return Bytes(d.begin(), d.end());
}

}  // namespace sdvc
