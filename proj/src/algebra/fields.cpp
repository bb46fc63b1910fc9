#include "sdvc/algebra/fields.hpp"

#include <cassert>
#include <cstring>
#include <mutex>

#include "sdvc/errors.hpp"

namespace sdvc::algebra {

static_assert(GMP_LIMB_BITS == 64, "64-bit limbs expected");

namespace {

const char* P_HEX =
    "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf6730d2a0f6b0f624"
    "1eabfffeb153ffffb9feffffffffaaab";
const char* R_HEX = "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001";
const char* G1_COFACTOR_HEX = "396c8c005555e1568c00aaab0000aaab";

void mpz_to_limbs(mp_limb_t out[FP_LIMBS], const mpz_class& a) {
    std::memset(out, 0, FP_LIMBS * sizeof(mp_limb_t));
    size_t count = 0;
    mpz_export(out, &count, -1, sizeof(mp_limb_t), 0, 0, a.get_mpz_t());
    assert(count <= FP_LIMBS);
}

mpz_class limbs_to_mpz(const mp_limb_t* v, int n) {
    mpz_class a;
    mpz_import(a.get_mpz_t(), n, -1, sizeof(mp_limb_t), 0, 0, v);
    return a;
}

FieldContext g_ctx_storage;
FieldContext* g_ctx = nullptr;

void init_context() {
    FieldContext* c = &g_ctx_storage;
    c->p_mpz = mpz_class(P_HEX, 16);
    c->r_mpz = mpz_class(R_HEX, 16);
    c->cofactor_g1 = mpz_class(G1_COFACTOR_HEX, 16);
    mpz_to_limbs(c->p, c->p_mpz);

    // n0inv = -p^{-1} mod 2^64
    mpz_class b64 = mpz_class(1) << 64;
    mpz_class pinv;
    mpz_invert(pinv.get_mpz_t(), c->p_mpz.get_mpz_t(), b64.get_mpz_t());
    mpz_class n0 = (b64 - pinv) % b64;
    mp_limb_t tmp[FP_LIMBS];
    mpz_to_limbs(tmp, n0);
    c->n0inv = tmp[0];

    mpz_class r_mont = (mpz_class(1) << (64 * FP_LIMBS)) % c->p_mpz;
    mpz_to_limbs(c->mont_one.v, r_mont);
    mpz_class r2 = (r_mont * r_mont) % c->p_mpz;
    mpz_to_limbs(c->mont_r2.v, r2);
    mpz_to_limbs(c->half_p, mpz_class((c->p_mpz - 1) / 2));
    c->p_plus1_div4 = (c->p_mpz + 1) / 4;

    // Publish before touching Fp arithmetic: everything below re-enters ctx().
    g_ctx = c;

    c->curve_b = Fp::from_u64(4);
    c->twist_b = Fp2{Fp::from_u64(4), Fp::from_u64(4)};

    Fp2 xi{Fp::one(), Fp::one()};
    c->frob_gamma1 = xi.pow((c->p_mpz - 1) / 3);
    c->frob_gamma2 = c->frob_gamma1.sqr();
    c->frob_gamma_w = xi.pow((c->p_mpz - 1) / 6);

    mpz_class p2 = c->p_mpz * c->p_mpz;
    mpz_class p4 = p2 * p2;
    mpz_class hard = p4 - p2 + 1;
    assert(mpz_divisible_p(hard.get_mpz_t(), c->r_mpz.get_mpz_t()));
    c->final_exp_hard = 3 * (hard / c->r_mpz);
}

inline const FieldContext& ctx() {
    if (!g_ctx) init_context();
    return *g_ctx;
}

// Eager init at load time keeps the lazy path single-threaded in practice.
const struct CtxInit {
    CtxInit() { ctx(); }
} g_ctx_init;

// Montgomery product: out = a * b / R mod p.
void mont_mul(mp_limb_t* out, const mp_limb_t* a, const mp_limb_t* b) {
    const FieldContext& c = ctx();
    mp_limb_t t[2 * FP_LIMBS + 1];
    mpn_mul_n(t, a, b, FP_LIMBS);
    t[2 * FP_LIMBS] = 0;
    for (int i = 0; i < FP_LIMBS; ++i) {
        mp_limb_t m = t[i] * c.n0inv;
        mp_limb_t carry = mpn_addmul_1(t + i, c.p, FP_LIMBS, m);
        mpn_add_1(t + i + FP_LIMBS, t + i + FP_LIMBS, FP_LIMBS + 1 - i, carry);
    }
    if (t[2 * FP_LIMBS] != 0 || mpn_cmp(t + FP_LIMBS, c.p, FP_LIMBS) >= 0) {
        mpn_sub_n(out, t + FP_LIMBS, c.p, FP_LIMBS);
    } else {
        std::memcpy(out, t + FP_LIMBS, FP_LIMBS * sizeof(mp_limb_t));
    }
}

void mont_sqr(mp_limb_t* out, const mp_limb_t* a) {
    const FieldContext& c = ctx();
    mp_limb_t t[2 * FP_LIMBS + 1];
    mpn_sqr(t, a, FP_LIMBS);
    t[2 * FP_LIMBS] = 0;
    for (int i = 0; i < FP_LIMBS; ++i) {
        mp_limb_t m = t[i] * c.n0inv;
        mp_limb_t carry = mpn_addmul_1(t + i, c.p, FP_LIMBS, m);
        mpn_add_1(t + i + FP_LIMBS, t + i + FP_LIMBS, FP_LIMBS + 1 - i, carry);
    }
    if (t[2 * FP_LIMBS] != 0 || mpn_cmp(t + FP_LIMBS, c.p, FP_LIMBS) >= 0) {
        mpn_sub_n(out, t + FP_LIMBS, c.p, FP_LIMBS);
    } else {
        std::memcpy(out, t + FP_LIMBS, FP_LIMBS * sizeof(mp_limb_t));
    }
}

}  // namespace

const FieldContext& fctx() { return ctx(); }

Fp Fp::zero() {
    Fp r;
    std::memset(r.v, 0, sizeof(r.v));
    return r;
}

Fp Fp::one() { return ctx().mont_one; }

Fp Fp::from_mpz(const mpz_class& a) {
    mpz_class m = a % ctx().p_mpz;
    if (m < 0) m += ctx().p_mpz;
    Fp r;
    mpz_to_limbs(r.v, m);
    mont_mul(r.v, r.v, ctx().mont_r2.v);
    return r;
}

Fp Fp::from_u64(uint64_t a) { return from_mpz(mpz_class(limbs_to_mpz(&a, 1))); }

std::optional<Fp> Fp::from_bytes(BytesView b) {
    if (b.size() != FP_BYTES) return std::nullopt;
    mpz_class a;
    mpz_import(a.get_mpz_t(), FP_BYTES, 1, 1, 0, 0, b.data());
    if (a >= ctx().p_mpz) return std::nullopt;
    return from_mpz(a);
}

mpz_class Fp::to_mpz() const {
    // Convert out of Montgomery form: multiply by 1 (plain).
    mp_limb_t one[FP_LIMBS] = {1, 0, 0, 0, 0, 0};
    mp_limb_t raw[FP_LIMBS];
    mont_mul(raw, v, one);
    return limbs_to_mpz(raw, FP_LIMBS);
}

void Fp::to_bytes(uint8_t out[FP_BYTES]) const {
    mpz_class a = to_mpz();
    std::memset(out, 0, FP_BYTES);
    size_t count = 0;
    // Export big-endian into the tail of the buffer.
    size_t bytes = (mpz_sizeinbase(a.get_mpz_t(), 2) + 7) / 8;
    if (a == 0) bytes = 0;
    mpz_export(out + (FP_BYTES - bytes), &count, 1, 1, 0, 0, a.get_mpz_t());
}

Fp Fp::add(const Fp& o) const {
    Fp r;
    mp_limb_t carry = mpn_add_n(r.v, v, o.v, FP_LIMBS);
    if (carry || mpn_cmp(r.v, ctx().p, FP_LIMBS) >= 0) mpn_sub_n(r.v, r.v, ctx().p, FP_LIMBS);
    return r;
}

Fp Fp::sub(const Fp& o) const {
    Fp r;
    mp_limb_t borrow = mpn_sub_n(r.v, v, o.v, FP_LIMBS);
    if (borrow) mpn_add_n(r.v, r.v, ctx().p, FP_LIMBS);
    return r;
}

Fp Fp::neg() const {
    if (is_zero()) return *this;
    Fp r;
    mpn_sub_n(r.v, ctx().p, v, FP_LIMBS);
    return r;
}

Fp Fp::mul(const Fp& o) const {
    Fp r;
    mont_mul(r.v, v, o.v);
    return r;
}

Fp Fp::sqr() const {
    Fp r;
    mont_sqr(r.v, v);
    return r;
}

Fp Fp::inverse() const {
    mpz_class raw = to_mpz();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), raw.get_mpz_t(), ctx().p_mpz.get_mpz_t()) == 0) {
        fail(ErrorCode::InvalidArgument, "inverse of zero in Fp");
    }
    return from_mpz(inv);
}

Fp Fp::pow(const mpz_class& e) const {
    if (e == 0) return one();
    Fp acc = one();
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = acc.sqr();
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.mul(*this);
    }
    return acc;
}

std::optional<Fp> Fp::sqrt() const {
    Fp cand = pow(ctx().p_plus1_div4);
    if (cand.sqr() == *this) return cand;
    return std::nullopt;
}

bool Fp::is_zero() const {
    for (auto limb : v)
        if (limb) return false;
    return true;
}

bool Fp::operator==(const Fp& o) const { return std::memcmp(v, o.v, sizeof(v)) == 0; }

bool Fp::lex_larger() const {
    mp_limb_t one_[FP_LIMBS] = {1, 0, 0, 0, 0, 0};
    mp_limb_t raw[FP_LIMBS];
    mont_mul(raw, v, one_);
    return mpn_cmp(raw, ctx().half_p, FP_LIMBS) > 0;
}

Fp2 Fp2::mul(const Fp2& o) const {
    // Karatsuba over the quadratic extension u^2 = -1.
    Fp aa = c0.mul(o.c0);
    Fp bb = c1.mul(o.c1);
    Fp t = c0.add(c1).mul(o.c0.add(o.c1));
    return {aa.sub(bb), t.sub(aa).sub(bb)};
}

Fp2 Fp2::sqr() const {
    Fp a = c0.add(c1);
    Fp b = c0.sub(c1);
    Fp c = c0.add(c0);
    return {a.mul(b), c.mul(c1)};
}

Fp2 Fp2::inverse() const {
    Fp norm = c0.sqr().add(c1.sqr());
    Fp inv = norm.inverse();
    return {c0.mul(inv), c1.neg().mul(inv)};
}

Fp2 Fp2::pow(const mpz_class& e) const {
    Fp2 acc = one();
    if (e == 0) return acc;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = acc.sqr();
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.mul(*this);
    }
    return acc;
}

std::optional<Fp2> Fp2::sqrt() const {
    if (is_zero()) return zero();
    if (c1.is_zero()) {
        // sqrt lies either in Fp or in Fp*u (u^2 = -1).
        if (auto s = c0.sqrt()) return Fp2{*s, Fp::zero()};
        if (auto s = c0.neg().sqrt()) return Fp2{Fp::zero(), *s};
        return std::nullopt;
    }
    // Norm trick: for a = x + y*u, find alpha = sqrt(x^2 + y^2), then
    // delta = (x + alpha)/2 (or (x - alpha)/2) is the square of the real part.
    Fp norm = c0.sqr().add(c1.sqr());
    auto alpha = norm.sqrt();
    if (!alpha) return std::nullopt;
    Fp half = Fp::from_u64(2).inverse();
    Fp delta = c0.add(*alpha).mul(half);
    auto x0 = delta.sqrt();
    if (!x0) {
        delta = c0.sub(*alpha).mul(half);
        x0 = delta.sqrt();
        if (!x0) return std::nullopt;
    }
    Fp x1 = c1.mul(half).mul(x0->inverse());
    Fp2 cand{*x0, x1};
    if (cand.sqr() == *this) return cand;
    return std::nullopt;
}

Fp6 Fp6::mul(const Fp6& o) const {
    Fp2 aa = c0.mul(o.c0);
    Fp2 bb = c1.mul(o.c1);
    Fp2 cc = c2.mul(o.c2);
    Fp2 t1 = c1.add(c2).mul(o.c1.add(o.c2)).sub(bb).sub(cc).mul_by_nonresidue().add(aa);
    Fp2 t2 = c0.add(c1).mul(o.c0.add(o.c1)).sub(aa).sub(bb).add(cc.mul_by_nonresidue());
    Fp2 t3 = c0.add(c2).mul(o.c0.add(o.c2)).sub(aa).sub(cc).add(bb);
    return {t1, t2, t3};
}

Fp6 Fp6::sqr() const {
    Fp2 s0 = c0.sqr();
    Fp2 ab = c0.mul(c1);
    Fp2 s1 = ab.dbl();
    Fp2 s2 = c0.sub(c1).add(c2).sqr();
    Fp2 bc = c1.mul(c2);
    Fp2 s3 = bc.dbl();
    Fp2 s4 = c2.sqr();
    return {s0.add(s3.mul_by_nonresidue()), s1.add(s4.mul_by_nonresidue()),
            s1.add(s2).add(s3).sub(s0).sub(s4)};
}

Fp6 Fp6::inverse() const {
    Fp2 t0 = c0.sqr().sub(c1.mul(c2).mul_by_nonresidue());
    Fp2 t1 = c2.sqr().mul_by_nonresidue().sub(c0.mul(c1));
    Fp2 t2 = c1.sqr().sub(c0.mul(c2));
    Fp2 d = c0.mul(t0).add(c2.mul(t1).mul_by_nonresidue()).add(c1.mul(t2).mul_by_nonresidue());
    Fp2 inv = d.inverse();
    return {t0.mul(inv), t1.mul(inv), t2.mul(inv)};
}

Fp6 Fp6::mul_by_01(const Fp2& b0, const Fp2& b1) const {
    Fp2 aa = c0.mul(b0);
    Fp2 bb = c1.mul(b1);
    Fp2 r0 = aa.add(c2.mul(b1).mul_by_nonresidue());
    Fp2 r1 = c0.add(c1).mul(b0.add(b1)).sub(aa).sub(bb);
    Fp2 r2 = c2.mul(b0).add(bb);
    return {r0, r1, r2};
}

Fp6 Fp6::mul_by_1(const Fp2& b1) const {
    return {c2.mul(b1).mul_by_nonresidue(), c0.mul(b1), c1.mul(b1)};
}

Fp12 Fp12::mul(const Fp12& o) const {
    Fp6 aa = c0.mul(o.c0);
    Fp6 bb = c1.mul(o.c1);
    Fp6 t = c0.add(c1).mul(o.c0.add(o.c1)).sub(aa).sub(bb);
    return {aa.add(bb.mul_by_v()), t};
}

Fp12 Fp12::sqr() const {
    Fp6 t0 = c0.add(c1);
    Fp6 t1 = c0.add(c1.mul_by_v());
    Fp6 t2 = c0.mul(c1);
    Fp6 r0 = t0.mul(t1).sub(t2).sub(t2.mul_by_v());
    return {r0, t2.add(t2)};
}

Fp12 Fp12::inverse() const {
    Fp6 t = c0.sqr().sub(c1.sqr().mul_by_v()).inverse();
    return {c0.mul(t), c1.mul(t).neg()};
}

Fp12 Fp12::frobenius(int power) const {
    const FieldContext& c = ctx();
    Fp12 r = *this;
    for (int k = 0; k < power; ++k) {
        Fp2 a0 = r.c0.c0.conjugate();
        Fp2 a1 = r.c0.c1.conjugate().mul(c.frob_gamma1);
        Fp2 a2 = r.c0.c2.conjugate().mul(c.frob_gamma2);
        Fp2 b0 = r.c1.c0.conjugate().mul(c.frob_gamma_w);
        Fp2 b1 = r.c1.c1.conjugate().mul(c.frob_gamma1).mul(c.frob_gamma_w);
        Fp2 b2 = r.c1.c2.conjugate().mul(c.frob_gamma2).mul(c.frob_gamma_w);
        r = {{a0, a1, a2}, {b0, b1, b2}};
    }
    return r;
}

Fp12 Fp12::mul_by_014(const Fp2& a, const Fp2& b, const Fp2& cc) const {
    Fp6 aa = c0.mul_by_01(a, b);
    Fp6 bb = c1.mul_by_1(cc);
    Fp6 t = c1.add(c0).mul_by_01(a, b.add(cc)).sub(aa).sub(bb);
    return {aa.add(bb.mul_by_v()), t};
}

Fp12 Fp12::pow(const mpz_class& e) const {
    Fp12 acc = one();
    if (e == 0) return acc;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = acc.sqr();
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.mul(*this);
    }
    return acc;
}

namespace {
// Squaring in Fp4 = Fp2[t]/(t^2 - xi), used by the cyclotomic squaring.
void fp4_square(const Fp2& a, const Fp2& b, Fp2& out0, Fp2& out1) {
    Fp2 t0 = a.sqr();
    Fp2 t1 = b.sqr();
    out0 = t1.mul_by_nonresidue().add(t0);
    out1 = a.add(b).sqr().sub(t0).sub(t1);
}
}  // namespace

Fp12 Fp12::cyclotomic_sqr() const {
    // Granger-Scott squaring; valid only in the cyclotomic subgroup.
    Fp2 z0 = c0.c0, z4 = c0.c1, z3 = c0.c2;
    Fp2 z2 = c1.c0, z1 = c1.c1, z5 = c1.c2;
    Fp2 t0, t1, t2, t3;

    fp4_square(z0, z1, t0, t1);
    z0 = t0.sub(z0);
    z0 = z0.add(z0).add(t0);
    z1 = t1.add(z1);
    z1 = z1.add(z1).add(t1);

    fp4_square(z2, z3, t0, t1);
    fp4_square(z4, z5, t2, t3);

    z4 = t0.sub(z4);
    z4 = z4.add(z4).add(t0);
    z5 = t1.add(z5);
    z5 = z5.add(z5).add(t1);

    Fp2 t = t3.mul_by_nonresidue();
    z2 = t.add(z2);
    z2 = z2.add(z2).add(t);
    z3 = t2.sub(z3);
    z3 = z3.add(z3).add(t2);

    return {{z0, z4, z3}, {z2, z1, z5}};
}

}  // namespace sdvc::algebra
