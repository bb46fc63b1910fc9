#pragma once

#include <gmp.h>
#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>

#include "sdvc/bytes.hpp"

// BLS12-381 field tower: Fp, Fp2 = Fp[u]/(u^2+1), Fp6 = Fp2[v]/(v^3 - xi),
// Fp12 = Fp6[w]/(w^2 - v), with xi = 1 + u. Fp elements are kept in
// Montgomery form (R = 2^384) on six 64-bit limbs.

namespace sdvc::algebra {

inline constexpr int FP_LIMBS = 6;
inline constexpr size_t FP_BYTES = 48;

struct Fp {
    mp_limb_t v[FP_LIMBS];

    static Fp zero();
    static Fp one();
    static Fp from_mpz(const mpz_class& a);
    static std::optional<Fp> from_bytes(BytesView b);  // 48-byte BE, rejects >= p
    static Fp from_u64(uint64_t a);

    mpz_class to_mpz() const;
    void to_bytes(uint8_t out[FP_BYTES]) const;

    Fp add(const Fp& o) const;
    Fp sub(const Fp& o) const;
    Fp dbl() const { return add(*this); }
    Fp neg() const;
    Fp mul(const Fp& o) const;
    Fp sqr() const;
    Fp inverse() const;  // undefined on zero
    Fp pow(const mpz_class& e) const;
    std::optional<Fp> sqrt() const;

    bool is_zero() const;
    bool operator==(const Fp& o) const;
    bool operator!=(const Fp& o) const { return !(*this == o); }

    // True when the plain (non-Montgomery) value exceeds (p-1)/2. Used for
    // the compressed-point sign bit.
    bool lex_larger() const;
};

struct Fp2 {
    Fp c0, c1;  // c0 + c1*u

    static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
    static Fp2 one() { return {Fp::one(), Fp::zero()}; }

    Fp2 add(const Fp2& o) const { return {c0.add(o.c0), c1.add(o.c1)}; }
    Fp2 sub(const Fp2& o) const { return {c0.sub(o.c0), c1.sub(o.c1)}; }
    Fp2 dbl() const { return add(*this); }
    Fp2 neg() const { return {c0.neg(), c1.neg()}; }
    Fp2 mul(const Fp2& o) const;
    Fp2 sqr() const;
    Fp2 mul_fp(const Fp& s) const { return {c0.mul(s), c1.mul(s)}; }
    Fp2 inverse() const;
    Fp2 conjugate() const { return {c0, c1.neg()}; }
    // Multiplication by xi = 1 + u.
    Fp2 mul_by_nonresidue() const { return {c0.sub(c1), c0.add(c1)}; }
    Fp2 pow(const mpz_class& e) const;
    std::optional<Fp2> sqrt() const;

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }
    bool lex_larger() const { return c1.is_zero() ? c0.lex_larger() : c1.lex_larger(); }
};

struct Fp6 {
    Fp2 c0, c1, c2;  // c0 + c1*v + c2*v^2

    static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    Fp6 add(const Fp6& o) const { return {c0.add(o.c0), c1.add(o.c1), c2.add(o.c2)}; }
    Fp6 sub(const Fp6& o) const { return {c0.sub(o.c0), c1.sub(o.c1), c2.sub(o.c2)}; }
    Fp6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }
    Fp6 mul(const Fp6& o) const;
    Fp6 sqr() const;
    Fp6 inverse() const;
    // Multiplication by v.
    Fp6 mul_by_v() const { return {c2.mul_by_nonresidue(), c0, c1}; }
    Fp6 mul_fp2(const Fp2& s) const { return {c0.mul(s), c1.mul(s), c2.mul(s)}; }
    // Sparse multiply by (b0 + b1*v).
    Fp6 mul_by_01(const Fp2& b0, const Fp2& b1) const;
    // Sparse multiply by (b1*v).
    Fp6 mul_by_1(const Fp2& b1) const;

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
};

struct Fp12 {
    Fp6 c0, c1;  // c0 + c1*w

    static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    Fp12 mul(const Fp12& o) const;
    Fp12 sqr() const;
    Fp12 inverse() const;
    Fp12 conjugate() const { return {c0, c1.neg()}; }
    // Frobenius endomorphism x -> x^p, applied `power` times.
    Fp12 frobenius(int power = 1) const;
    // Sparse multiply by an element with coefficients (a, b, c) at positions
    // (0, 1, 4) of the Fp2^6 view, i.e. (a + b*v) + (c*v)*w.
    Fp12 mul_by_014(const Fp2& a, const Fp2& b, const Fp2& c) const;
    Fp12 pow(const mpz_class& e) const;
    // Squaring in the cyclotomic subgroup (where conjugate == inverse).
    Fp12 cyclotomic_sqr() const;

    bool is_one() const { return c0 == Fp6::one() && c1.is_zero(); }
    bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp12& o) const { return !(*this == o); }
};

// Shared curve constants, derived once from the prime modulus and group
// order strings.
struct FieldContext {
    mp_limb_t p[FP_LIMBS];
    mp_limb_t n0inv;        // -p^{-1} mod 2^64
    Fp mont_one;            // R mod p
    Fp mont_r2;             // R^2 mod p
    mp_limb_t half_p[FP_LIMBS];  // (p-1)/2, plain form
    mpz_class p_mpz;
    mpz_class p_plus1_div4;
    mpz_class r_mpz;        // subgroup order
    mpz_class cofactor_g1;
    Fp curve_b;             // 4
    Fp2 twist_b;            // 4*(1+u)
    Fp2 frob_gamma1;        // xi^((p-1)/3)
    Fp2 frob_gamma2;        // xi^(2(p-1)/3)
    Fp2 frob_gamma_w;       // xi^((p-1)/6)
    mpz_class final_exp_hard;  // 3*(p^4 - p^2 + 1)/r
};

const FieldContext& fctx();

}  // namespace sdvc::algebra
