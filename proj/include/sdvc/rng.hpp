#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "sdvc/bytes.hpp"

namespace sdvc {

/// Source of random bytes. Key generation, signing and proving take one of
/// these so callers control determinism (tests, the CLI --seed flag).
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(std::span<uint8_t> out) = 0;

    Bytes bytes(size_t n) {
        Bytes b(n);
        fill(b);
        return b;
    }
};

/// OS randomness (libsodium).
class SystemRandom : public RandomSource {
public:
    void fill(std::span<uint8_t> out) override;
};

/// Deterministic stream derived from a seed (ChaCha20 keystream). Two
/// instances with the same seed produce the same byte stream.
class SeededRandom : public RandomSource {
public:
    explicit SeededRandom(BytesView seed);
    explicit SeededRandom(uint64_t seed);
    void fill(std::span<uint8_t> out) override;

private:
    uint8_t key_[32];
    uint64_t counter_ = 0;
};

}  // namespace sdvc
