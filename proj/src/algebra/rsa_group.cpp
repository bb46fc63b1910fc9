#include "sdvc/rsa.hpp"

#include <cassert>

#include "sdvc/errors.hpp"

namespace sdvc::algebra {

namespace {

constexpr int MR_REPS = 64;  // 4^-64 <= 2^-128 error bound

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t LIMIT = 1 << 16;
        std::vector<bool> composite(LIMIT, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 3; i < LIMIT; i += 2) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < LIMIT; j += 2 * i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

bool is_probable_prime(const BigNat& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), MR_REPS) != 0;
}

BigNat random_bits(RandomSource& rng, size_t bits) {
    size_t bytes = (bits + 7) / 8;
    Bytes buf = rng.bytes(bytes);
    size_t extra = bytes * 8 - bits;
    buf[0] &= static_cast<uint8_t>(0xff >> extra);
    BigNat out;
    mpz_import(out.get_mpz_t(), buf.size(), 1, 1, 0, 0, buf.data());
    return out;
}

BigNat random_bits_msb_set(RandomSource& rng, size_t bits) {
    BigNat out = random_bits(rng, bits);
    mpz_setbit(out.get_mpz_t(), bits - 1);
    return out;
}

BigNat random_below(RandomSource& rng, const BigNat& bound) {
    if (bound <= 0) fail(ErrorCode::InvalidArgument, "bound must be positive");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    for (;;) {
        BigNat cand = random_bits(rng, bits);
        if (cand < bound) return cand;
    }
}

BigNat gen_safe_prime(size_t bits, RandomSource& rng) {
    if (bits < 16) fail(ErrorCode::InvalidArgument, "safe prime too small");
    const auto& primes = small_primes();
    constexpr size_t WINDOW = 1 << 15;

    for (;;) {
        // Search q' = base + k with p = 2q' + 1; both must be prime. Sieve
        // the window jointly against small primes before Miller-Rabin.
        BigNat base = random_bits_msb_set(rng, bits - 1);
        mpz_setbit(base.get_mpz_t(), bits - 2);  // keep n at full size after p*q
        mpz_setbit(base.get_mpz_t(), 0);

        std::vector<uint8_t> bad(WINDOW, 0);
        for (uint32_t s : primes) {
            uint32_t r = static_cast<uint32_t>(mpz_fdiv_ui(base.get_mpz_t(), s));
            // base + 2k = 0 (mod s)  ->  k = -r * inv2 (mod s)
            uint64_t inv2 = (s + 1) / 2;
            uint64_t k1 = ((s - r) % s * inv2) % s;
            for (uint64_t k = k1; k < WINDOW; k += s) bad[k] = 1;
            // 2(base + 2k) + 1 = 0 (mod s)  ->  k = -(2r+1) * inv4 (mod s)
            uint64_t inv4 = (inv2 * inv2) % s;
            uint64_t r2 = (2ULL * r + 1) % s;
            uint64_t k2 = ((s - r2) % s * inv4) % s;
            for (uint64_t k = k2; k < WINDOW; k += s) bad[k] = 1;
        }

        for (size_t k = 0; k < WINDOW; ++k) {
            if (bad[k]) continue;
            BigNat q = base + 2 * BigNat(static_cast<unsigned long>(k));
            if (mpz_sizeinbase(q.get_mpz_t(), 2) != bits - 1) break;
            if (mpz_probab_prime_p(q.get_mpz_t(), 1) == 0) continue;
            BigNat p = 2 * q + 1;
            if (mpz_probab_prime_p(p.get_mpz_t(), 1) == 0) continue;
            if (is_probable_prime(q) && is_probable_prime(p)) return p;
        }
    }
}

RsaGroupParams rsa_group_from_factors(const BigNat& p, const BigNat& q, size_t generator_count,
                                      RandomSource& rng) {
    RsaGroupParams params;
    params.n = p * q;
    params.modulus_bits = mpz_sizeinbase(params.n.get_mpz_t(), 2);
    params.generators.reserve(generator_count);
    for (size_t i = 0; i < generator_count; ++i) {
        for (;;) {
            BigNat a = random_below(rng, params.n);
            BigNat g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), params.n.get_mpz_t());
            if (a < 2 || g != 1) continue;
            BigNat qr = (a * a) % params.n;
            params.generators.push_back(qr);
            break;
        }
    }
    return params;
}

std::pair<RsaGroupSecret, RsaGroupParams> gen_rsa_group(size_t bits, size_t generator_count,
                                                        RandomSource& rng) {
    if (bits < 2048) fail(ErrorCode::InvalidArgument, "modulus must be >= 2048 bits");
    if (generator_count < 3) fail(ErrorCode::InvalidArgument, "need at least 3 generators");
    BigNat p = gen_safe_prime(bits / 2, rng);
    BigNat q;
    do {
        q = gen_safe_prime(bits - bits / 2, rng);
    } while (q == p);
    RsaGroupParams params = rsa_group_from_factors(p, q, generator_count, rng);
    assert(params.modulus_bits == bits);
    return {RsaGroupSecret{p}, params};
}

Bytes mpz_to_fixed_be(const BigNat& x, size_t width) {
    if (x < 0) fail(ErrorCode::InvalidArgument, "negative value");
    size_t need = x == 0 ? 0 : (mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8;
    if (need > width) fail(ErrorCode::InvalidArgument, "value exceeds field width");
    Bytes out(width, 0);
    size_t count = 0;
    if (need) mpz_export(out.data() + (width - need), &count, 1, 1, 0, 0, x.get_mpz_t());
    return out;
}

BigNat mpz_from_be(BytesView bytes) {
    BigNat out;
    if (!bytes.empty()) mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
    return out;
}

}  // namespace sdvc::algebra
