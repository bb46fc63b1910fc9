#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "sdvc/bytes.hpp"
#include "sdvc/rng.hpp"

namespace sdvc::algebra {

/// Arbitrary-precision non-negative integer (unknown-order group exponents,
/// RSA residues).
using BigNat = mpz_class;

/// Unknown-order group for CL: a special RSA modulus n = p*q where
/// p = 2p'+1 and q = 2q'+1 are safe primes, plus quadratic-residue
/// generators.
struct RsaGroupParams {
    BigNat n;
    std::vector<BigNat> generators;
    size_t modulus_bits = 0;

    size_t modulus_bytes() const { return (modulus_bits + 7) / 8; }
};

struct RsaGroupSecret {
    BigNat p;  // one safe-prime factor; q = n / p
};

/// Generates the group. `bits` >= 2048, `generator_count` >= 3. Each
/// generator is a^2 mod n for fresh random a.
std::pair<RsaGroupSecret, RsaGroupParams> gen_rsa_group(size_t bits, size_t generator_count,
                                                        RandomSource& rng);

/// Deterministic construction from known safe-prime factors (test support
/// and key import).
RsaGroupParams rsa_group_from_factors(const BigNat& p, const BigNat& q, size_t generator_count,
                                      RandomSource& rng);

/// Safe prime of exactly `bits` bits (top two bits set) with both p and
/// (p-1)/2 passing Miller-Rabin at error bound <= 2^-128.
BigNat gen_safe_prime(size_t bits, RandomSource& rng);

bool is_probable_prime(const BigNat& n);

BigNat random_bits(RandomSource& rng, size_t bits);          // uniform in [0, 2^bits)
BigNat random_bits_msb_set(RandomSource& rng, size_t bits);  // uniform in [2^(bits-1), 2^bits)
BigNat random_below(RandomSource& rng, const BigNat& bound);

/// Fixed-width big-endian encoding; errors if the value does not fit.
Bytes mpz_to_fixed_be(const BigNat& x, size_t width);
BigNat mpz_from_be(BytesView bytes);

}  // namespace sdvc::algebra
