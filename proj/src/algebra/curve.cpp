#include "sdvc/algebra/curve.hpp"

#include <cassert>
#include <cstring>

#include "sdvc/errors.hpp"

namespace sdvc::algebra {

template <class F>
Jac<F> Jac<F>::dbl() const {
    if (is_identity()) return *this;
    // dbl-2007-bl, a = 0. Valid points never have Y = 0 (the group order is odd).
    F A = X.sqr();
    F B = Y.sqr();
    F C = B.sqr();
    F D = X.add(B).sqr().sub(A).sub(C).dbl();
    F E = A.add(A).add(A);
    F Fq = E.sqr();
    F X3 = Fq.sub(D.dbl());
    F eightC = C.dbl().dbl().dbl();
    F Y3 = E.mul(D.sub(X3)).sub(eightC);
    F Z3 = Y.mul(Z).dbl();
    return {X3, Y3, Z3};
}

template <class F>
Jac<F> Jac<F>::add(const Jac& o) const {
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    F Z1Z1 = Z.sqr();
    F Z2Z2 = o.Z.sqr();
    F U1 = X.mul(Z2Z2);
    F U2 = o.X.mul(Z1Z1);
    F S1 = Y.mul(o.Z).mul(Z2Z2);
    F S2 = o.Y.mul(Z).mul(Z1Z1);
    if (U1 == U2) {
        if (S1 == S2) return dbl();
        return identity();
    }
    F H = U2.sub(U1);
    F I = H.dbl().sqr();
    F J = H.mul(I);
    F r = S2.sub(S1).dbl();
    F V = U1.mul(I);
    F X3 = r.sqr().sub(J).sub(V.dbl());
    F Y3 = r.mul(V.sub(X3)).sub(S1.mul(J).dbl());
    F Z3 = Z.add(o.Z).sqr().sub(Z1Z1).sub(Z2Z2).mul(H);
    return {X3, Y3, Z3};
}

template <class F>
Jac<F> Jac<F>::add_mixed(const Affine<F>& o) const {
    if (o.inf) return *this;
    if (is_identity()) return from_affine(o);
    F Z1Z1 = Z.sqr();
    F U2 = o.x.mul(Z1Z1);
    F S2 = o.y.mul(Z).mul(Z1Z1);
    if (X == U2) {
        if (Y == S2) return dbl();
        return identity();
    }
    F H = U2.sub(X);
    F HH = H.sqr();
    F I = HH.dbl().dbl();
    F J = H.mul(I);
    F r = S2.sub(Y).dbl();
    F V = X.mul(I);
    F X3 = r.sqr().sub(J).sub(V.dbl());
    F Y3 = r.mul(V.sub(X3)).sub(Y.mul(J).dbl());
    F Z3 = Z.add(H).sqr().sub(Z1Z1).sub(HH);
    return {X3, Y3, Z3};
}

template <class F>
bool Jac<F>::equals(const Jac& o) const {
    if (is_identity() || o.is_identity()) return is_identity() == o.is_identity();
    F Z1Z1 = Z.sqr();
    F Z2Z2 = o.Z.sqr();
    if (X.mul(Z2Z2) != o.X.mul(Z1Z1)) return false;
    return Y.mul(o.Z).mul(Z2Z2) == o.Y.mul(Z).mul(Z1Z1);
}

template <class F>
Affine<F> Jac<F>::to_affine() const {
    if (is_identity()) return Affine<F>::identity();
    F zi = Z.inverse();
    F zi2 = zi.sqr();
    return {X.mul(zi2), Y.mul(zi2).mul(zi), false};
}

template <class F>
std::vector<Affine<F>> batch_to_affine(const std::vector<Jac<F>>& pts) {
    // Montgomery's trick: one inversion for the whole batch.
    std::vector<Affine<F>> out(pts.size());
    std::vector<F> prefix(pts.size(), F::one());
    F run = F::one();
    for (size_t i = 0; i < pts.size(); ++i) {
        prefix[i] = run;
        if (!pts[i].is_identity()) run = run.mul(pts[i].Z);
    }
    F inv = run.is_zero() ? F::zero() : run.inverse();
    for (size_t i = pts.size(); i-- > 0;) {
        if (pts[i].is_identity()) {
            out[i] = Affine<F>::identity();
            continue;
        }
        F zi = inv.mul(prefix[i]);
        inv = inv.mul(pts[i].Z);
        F zi2 = zi.sqr();
        out[i] = {pts[i].X.mul(zi2), pts[i].Y.mul(zi2).mul(zi), false};
    }
    return out;
}

template <class F>
Jac<F> mul_mpz(const Jac<F>& p, const mpz_class& k) {
    if (k == 0 || p.is_identity()) return Jac<F>::identity();
    mpz_class e = k;
    Jac<F> base = p;
    if (e < 0) {
        e = -e;
        base = base.neg();
    }
    Jac<F> acc = Jac<F>::identity();
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = acc.dbl();
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.add(base);
    }
    return acc;
}

namespace {

constexpr int WNAF_W = 4;

// Width-w non-adjacent form, least-significant digit first.
std::vector<int8_t> wnaf_digits(const Scalar& s, int w) {
    std::vector<int8_t> digits;
    mpz_class k = s.to_mpz();
    const long wide = 1L << (w + 1);
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) {
            long u = mpz_class(k % wide).get_si();
            if (u > wide / 2) u -= wide;
            digits.push_back(static_cast<int8_t>(u));
            k -= u;
        } else {
            digits.push_back(0);
        }
        k >>= 1;
    }
    return digits;
}

// Odd multiples P, 3P, ..., 15P normalised to affine.
template <class F>
std::vector<Affine<F>> odd_multiples(const Jac<F>& p) {
    std::vector<Jac<F>> tab(1 << (WNAF_W - 1));
    tab[0] = p;
    Jac<F> twice = p.dbl();
    for (size_t i = 1; i < tab.size(); ++i) tab[i] = tab[i - 1].add(twice);
    return batch_to_affine(tab);
}

}  // namespace

template <class F>
Jac<F> mul_scalar(const Jac<F>& p, const Scalar& s) {
    if (s.is_zero() || p.is_identity()) return Jac<F>::identity();
    auto digits = wnaf_digits(s, WNAF_W);
    auto table = odd_multiples(p);
    Jac<F> acc = Jac<F>::identity();
    for (size_t i = digits.size(); i-- > 0;) {
        acc = acc.dbl();
        int8_t d = digits[i];
        if (d > 0) acc = acc.add_mixed(table[d >> 1]);
        if (d < 0) {
            Affine<F> m = table[(-d) >> 1];
            m.y = m.y.neg();
            acc = acc.add_mixed(m);
        }
    }
    return acc;
}

template <class F>
Jac<F> msm(const std::vector<Jac<F>>& bases, const std::vector<Scalar>& scalars) {
    assert(bases.size() == scalars.size());
    if (bases.empty()) return Jac<F>::identity();
    size_t n = bases.size();

    std::vector<std::vector<int8_t>> digits(n);
    size_t maxlen = 0;
    std::vector<Jac<F>> flat;
    flat.reserve(n << (WNAF_W - 1));
    for (size_t i = 0; i < n; ++i) {
        digits[i] = wnaf_digits(scalars[i], WNAF_W);
        maxlen = std::max(maxlen, digits[i].size());
        Jac<F> p = bases[i];
        Jac<F> twice = p.dbl();
        flat.push_back(p);
        for (int j = 1; j < (1 << (WNAF_W - 1)); ++j) flat.push_back(flat.back().add(twice));
    }
    auto tables = batch_to_affine(flat);

    Jac<F> acc = Jac<F>::identity();
    for (size_t pos = maxlen; pos-- > 0;) {
        acc = acc.dbl();
        for (size_t i = 0; i < n; ++i) {
            if (pos >= digits[i].size()) continue;
            int8_t d = digits[i][pos];
            if (d == 0) continue;
            size_t base_off = i << (WNAF_W - 1);
            if (d > 0) {
                acc = acc.add_mixed(tables[base_off + (d >> 1)]);
            } else {
                Affine<F> m = tables[base_off + ((-d) >> 1)];
                m.y = m.y.neg();
                acc = acc.add_mixed(m);
            }
        }
    }
    return acc;
}

template <class F>
bool in_subgroup(const Jac<F>& p) {
    if (p.is_identity()) return true;
    return mul_mpz(p, fctx().r_mpz).is_identity();
}

namespace {

const char* G1X_HEX =
    "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb";
const char* G1Y_HEX =
    "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae40caa232946c5e7e1";
const char* G2X0_HEX =
    "024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8";
const char* G2X1_HEX =
    "13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e";
const char* G2Y0_HEX =
    "0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c923ac9cc3baca289e193548608b82801";
const char* G2Y1_HEX =
    "0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab3f370d275cec1da1aaa9075ff05f79be";

Fp fp_from_hex(const char* h) { return Fp::from_mpz(mpz_class(h, 16)); }

}  // namespace

const G1Affine& g1_generator() {
    static const G1Affine g = [] {
        G1Affine p{fp_from_hex(G1X_HEX), fp_from_hex(G1Y_HEX), false};
        assert(p.is_on_curve());
        assert(in_subgroup(G1::from_affine(p)));
        return p;
    }();
    return g;
}

const G2Affine& g2_generator() {
    static const G2Affine g = [] {
        G2Affine p{{fp_from_hex(G2X0_HEX), fp_from_hex(G2X1_HEX)},
                   {fp_from_hex(G2Y0_HEX), fp_from_hex(G2Y1_HEX)},
                   false};
        assert(p.is_on_curve());
        assert(in_subgroup(G2::from_affine(p)));
        return p;
    }();
    return g;
}

Bytes g1_to_bytes(const G1Affine& p) {
    Bytes out(FP_BYTES, 0);
    if (p.inf) {
        out[0] = 0xc0;
        return out;
    }
    p.x.to_bytes(out.data());
    out[0] |= 0x80;
    if (p.y.lex_larger()) out[0] |= 0x20;
    return out;
}

Bytes g2_to_bytes(const G2Affine& p) {
    Bytes out(2 * FP_BYTES, 0);
    if (p.inf) {
        out[0] = 0xc0;
        return out;
    }
    p.x.c1.to_bytes(out.data());
    p.x.c0.to_bytes(out.data() + FP_BYTES);
    out[0] |= 0x80;
    if (p.y.lex_larger()) out[0] |= 0x20;
    return out;
}

std::optional<G1Affine> g1_from_bytes(BytesView b) {
    if (b.size() != FP_BYTES) return std::nullopt;
    uint8_t flags = b[0];
    if (!(flags & 0x80)) return std::nullopt;
    Bytes body(b.begin(), b.end());
    body[0] &= 0x1f;
    if (flags & 0x40) {
        if (flags & 0x20) return std::nullopt;
        for (uint8_t v : body)
            if (v) return std::nullopt;
        return G1Affine::identity();
    }
    auto x = Fp::from_bytes(body);
    if (!x) return std::nullopt;
    auto y = x->sqr().mul(*x).add(fctx().curve_b).sqrt();
    if (!y) return std::nullopt;
    if (y->lex_larger() != bool(flags & 0x20)) *y = y->neg();
    G1Affine p{*x, *y, false};
    if (!in_subgroup(G1::from_affine(p))) return std::nullopt;
    return p;
}

std::optional<G2Affine> g2_from_bytes(BytesView b) {
    if (b.size() != 2 * FP_BYTES) return std::nullopt;
    uint8_t flags = b[0];
    if (!(flags & 0x80)) return std::nullopt;
    Bytes body(b.begin(), b.end());
    body[0] &= 0x1f;
    if (flags & 0x40) {
        if (flags & 0x20) return std::nullopt;
        for (uint8_t v : body)
            if (v) return std::nullopt;
        return G2Affine::identity();
    }
    auto xc1 = Fp::from_bytes(BytesView(body).subspan(0, FP_BYTES));
    auto xc0 = Fp::from_bytes(BytesView(body).subspan(FP_BYTES, FP_BYTES));
    if (!xc0 || !xc1) return std::nullopt;
    Fp2 x{*xc0, *xc1};
    auto y = x.sqr().mul(x).add(fctx().twist_b).sqrt();
    if (!y) return std::nullopt;
    if (y->lex_larger() != bool(flags & 0x20)) *y = y->neg();
    G2Affine p{x, *y, false};
    if (!in_subgroup(G2::from_affine(p))) return std::nullopt;
    return p;
}

// Explicit instantiations.
template struct Jac<Fp>;
template struct Jac<Fp2>;
template Jac<Fp> mul_mpz<Fp>(const Jac<Fp>&, const mpz_class&);
template Jac<Fp2> mul_mpz<Fp2>(const Jac<Fp2>&, const mpz_class&);
template Jac<Fp> mul_scalar<Fp>(const Jac<Fp>&, const Scalar&);
template Jac<Fp2> mul_scalar<Fp2>(const Jac<Fp2>&, const Scalar&);
template Jac<Fp> msm<Fp>(const std::vector<Jac<Fp>>&, const std::vector<Scalar>&);
template Jac<Fp2> msm<Fp2>(const std::vector<Jac<Fp2>>&, const std::vector<Scalar>&);
template std::vector<Affine<Fp>> batch_to_affine<Fp>(const std::vector<Jac<Fp>>&);
template std::vector<Affine<Fp2>> batch_to_affine<Fp2>(const std::vector<Jac<Fp2>>&);
template bool in_subgroup<Fp>(const Jac<Fp>&);
template bool in_subgroup<Fp2>(const Jac<Fp2>&);

}  // namespace sdvc::algebra
