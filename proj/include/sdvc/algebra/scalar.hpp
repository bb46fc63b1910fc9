#pragma once

#include <gmpxx.h>

#include <optional>

#include "sdvc/bytes.hpp"
#include "sdvc/rng.hpp"

namespace sdvc::algebra {

/// Element of the scalar field Z_p for the prime subgroup order p of
/// BLS12-381 (255 bits). Canonical encoding is 32-byte big-endian.
struct Scalar {
    static constexpr size_t BYTES = 32;

    mp_limb_t v[4] = {0, 0, 0, 0};  // plain value, < r

    static Scalar zero() { return {}; }
    static Scalar one() { return from_u64(1); }
    static Scalar from_u64(uint64_t a);
    static Scalar from_mpz(const mpz_class& a);  // reduces mod r
    static std::optional<Scalar> from_bytes(BytesView b);
    // Interprets arbitrarily long big-endian bytes as an integer mod r.
    static Scalar reduce_bytes(BytesView b);
    static Scalar random(RandomSource& rng);
    static Scalar random_nonzero(RandomSource& rng);

    mpz_class to_mpz() const;
    void to_bytes(uint8_t out[BYTES]) const;
    Bytes bytes() const;

    Scalar add(const Scalar& o) const;
    Scalar sub(const Scalar& o) const;
    Scalar neg() const;
    Scalar mul(const Scalar& o) const;
    Scalar inverse() const;  // error on zero

    bool is_zero() const { return !(v[0] | v[1] | v[2] | v[3]); }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
};

const mpz_class& scalar_order();

}  // namespace sdvc::algebra
