#pragma once

#include <optional>
#include <vector>

#include "sdvc/algebra/fields.hpp"
#include "sdvc/algebra/scalar.hpp"
#include "sdvc/bytes.hpp"

// Short-Weierstrass points for BLS12-381: G1 over Fp (y^2 = x^3 + 4) and
// the G2 twist over Fp2 (y^2 = x^3 + 4(1+u)), in Jacobian coordinates.

namespace sdvc::algebra {

template <class F>
const F& curve_b();
template <>
inline const Fp& curve_b<Fp>() {
    return fctx().curve_b;
}
template <>
inline const Fp2& curve_b<Fp2>() {
    return fctx().twist_b;
}

template <class F>
struct Affine {
    F x = F::zero();
    F y = F::zero();
    bool inf = true;

    static Affine identity() { return {}; }
    bool is_on_curve() const {
        if (inf) return true;
        return y.sqr() == x.sqr().mul(x).add(curve_b<F>());
    }
    bool operator==(const Affine& o) const {
        if (inf || o.inf) return inf == o.inf;
        return x == o.x && y == o.y;
    }
};

template <class F>
struct Jac {
    F X = F::one();
    F Y = F::one();
    F Z = F::zero();

    static Jac identity() { return {}; }
    static Jac from_affine(const Affine<F>& a) {
        if (a.inf) return identity();
        return {a.x, a.y, F::one()};
    }
    bool is_identity() const { return Z.is_zero(); }

    Jac dbl() const;
    Jac add(const Jac& o) const;
    Jac add_mixed(const Affine<F>& o) const;
    Jac neg() const { return {X, Y.neg(), Z}; }
    bool equals(const Jac& o) const;

    Affine<F> to_affine() const;
};

using G1Affine = Affine<Fp>;
using G1 = Jac<Fp>;
using G2Affine = Affine<Fp2>;
using G2 = Jac<Fp2>;

template <class F>
Jac<F> mul_mpz(const Jac<F>& p, const mpz_class& k);
template <class F>
Jac<F> mul_scalar(const Jac<F>& p, const Scalar& s);  // wNAF

// Straus interleaved-wNAF multi-scalar multiplication.
template <class F>
Jac<F> msm(const std::vector<Jac<F>>& bases, const std::vector<Scalar>& scalars);

template <class F>
std::vector<Affine<F>> batch_to_affine(const std::vector<Jac<F>>& pts);

template <class F>
bool in_subgroup(const Jac<F>& p);

const G1Affine& g1_generator();
const G2Affine& g2_generator();

// ZCash-style compressed encodings: 48 bytes for G1, 96 for G2.
Bytes g1_to_bytes(const G1Affine& p);
Bytes g2_to_bytes(const G2Affine& p);
// Decoders enforce canonical flags, field-element range, curve membership
// and prime-order subgroup membership.
std::optional<G1Affine> g1_from_bytes(BytesView b);
std::optional<G2Affine> g2_from_bytes(BytesView b);

}  // namespace sdvc::algebra
