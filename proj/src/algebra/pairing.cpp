#include "sdvc/algebra/pairing.hpp"

namespace sdvc::algebra {

namespace {

constexpr uint64_t BLS_X_ABS = 0xd201000000010000ULL;  // |x|, x is negative

struct LineCoeffs {
    Fp2 a, b, c;
};

// Doubling and addition steps with line-coefficient output, following
// Algorithms 26/27 of eprint 2010/354 (Jacobian coordinates on the twist).
LineCoeffs doubling_step(Jac<Fp2>& r) {
    Fp2 tmp0 = r.X.sqr();
    Fp2 tmp1 = r.Y.sqr();
    Fp2 tmp2 = tmp1.sqr();
    Fp2 tmp3 = tmp1.add(r.X).sqr().sub(tmp0).sub(tmp2);
    tmp3 = tmp3.dbl();
    Fp2 tmp4 = tmp0.dbl().add(tmp0);
    Fp2 tmp6 = r.X.add(tmp4);
    Fp2 tmp5 = tmp4.sqr();
    Fp2 zsq = r.Z.sqr();
    r.X = tmp5.sub(tmp3).sub(tmp3);
    r.Z = r.Z.add(r.Y).sqr().sub(tmp1).sub(zsq);
    Fp2 eight_t2 = tmp2.dbl().dbl().dbl();
    r.Y = tmp3.sub(r.X).mul(tmp4).sub(eight_t2);
    tmp3 = tmp4.mul(zsq).dbl().neg();
    tmp6 = tmp6.sqr().sub(tmp0).sub(tmp5).sub(tmp1.dbl().dbl());
    Fp2 tmp1b = r.Z.mul(zsq).dbl();
    return {tmp1b, tmp3, tmp6};
}

LineCoeffs addition_step(Jac<Fp2>& r, const G2Affine& q) {
    Fp2 zsq = r.Z.sqr();
    Fp2 ysq = q.y.sqr();
    Fp2 t0 = zsq.mul(q.x);
    Fp2 t1 = q.y.add(r.Z).sqr().sub(ysq).sub(zsq).mul(zsq);
    Fp2 t2 = t0.sub(r.X);
    Fp2 t3 = t2.sqr();
    Fp2 t4 = t3.dbl().dbl();
    Fp2 t5 = t4.mul(t2);
    Fp2 t6 = t1.sub(r.Y).sub(r.Y);
    Fp2 t9 = t6.mul(q.x);
    Fp2 t7 = t4.mul(r.X);
    r.X = t6.sqr().sub(t5).sub(t7).sub(t7);
    r.Z = r.Z.add(t2).sqr().sub(zsq).sub(t3);
    Fp2 t10 = q.y.add(r.Z);
    Fp2 t8 = t7.sub(r.X).mul(t6);
    t0 = r.Y.mul(t5).dbl();
    r.Y = t8.sub(t0);
    t10 = t10.sqr().sub(ysq);
    Fp2 ztsq = r.Z.sqr();
    t10 = t10.sub(ztsq);
    t9 = t9.dbl().sub(t10);
    t10 = r.Z.dbl();
    Fp2 t1b = t6.neg().dbl();
    return {t10, t1b, t9};
}

Fp12 eval_line(const Fp12& f, const LineCoeffs& l, const G1Affine& p) {
    Fp2 c0{l.a.c0.mul(p.y), l.a.c1.mul(p.y)};
    Fp2 c1{l.b.c0.mul(p.x), l.b.c1.mul(p.x)};
    return f.mul_by_014(l.c, c1, c0);
}

Fp12 pow_by_x(const Fp12& a) {
    // a^x in the cyclotomic subgroup, x = -|BLS_X| (conjugate = inverse there).
    Fp12 acc = a;
    for (int i = 62; i >= 0; --i) {
        acc = acc.cyclotomic_sqr();
        if ((BLS_X_ABS >> i) & 1) acc = acc.mul(a);
    }
    return acc.conjugate();
}

}  // namespace

Fp12 miller_loop(const G1Affine& p, const G2Affine& q) {
    if (p.inf || q.inf) return Fp12::one();
    Jac<Fp2> t = Jac<Fp2>::from_affine(q);
    Fp12 f = Fp12::one();
    for (int i = 62; i >= 0; --i) {
        f = f.sqr();
        f = eval_line(f, doubling_step(t), p);
        if ((BLS_X_ABS >> i) & 1) f = eval_line(f, addition_step(t, q), p);
    }
    return f.conjugate();  // x < 0
}

Fp12 final_exponentiation(const Fp12& f) {
    // Easy part: f^((p^6 - 1)(p^2 + 1)).
    Fp12 t = f.conjugate().mul(f.inverse());
    t = t.frobenius(2).mul(t);
    // Hard part, exponent 3(p^4 - p^2 + 1)/r = (x-1)^2 (x+p) (x^2+p^2-1) + 3.
    Fp12 a = pow_by_x(t).mul(t.conjugate());
    a = pow_by_x(a).mul(a.conjugate());
    Fp12 b = pow_by_x(a).mul(a.frobenius(1));
    Fp12 c = pow_by_x(pow_by_x(b)).mul(b.frobenius(2)).mul(b.conjugate());
    return c.mul(t.cyclotomic_sqr().mul(t));
}

Fp12 pairing(const G1Affine& p, const G2Affine& q) {
    return final_exponentiation(miller_loop(p, q));
}

Fp12 pairing_product(const std::vector<std::pair<G1Affine, G2Affine>>& pairs) {
    Fp12 f = Fp12::one();
    for (const auto& [p, q] : pairs) f = f.mul(miller_loop(p, q));
    return final_exponentiation(f);
}

Fp12 gt_exp(const Fp12& a, const Scalar& s) {
    mpz_class e = s.to_mpz();
    Fp12 acc = Fp12::one();
    if (e == 0) return acc;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = acc.cyclotomic_sqr();
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.mul(a);
    }
    return acc;
}

}  // namespace sdvc::algebra
