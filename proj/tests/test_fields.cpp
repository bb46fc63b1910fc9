#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdvc/algebra/curve.hpp"
#include "sdvc/algebra/fields.hpp"
#include "sdvc/algebra/pairing.hpp"
#include "sdvc/algebra/scalar.hpp"
#include "sdvc/rng.hpp"

using namespace sdvc;
using namespace sdvc::algebra;

namespace {
mpz_class rand_mpz(RandomSource& rng, size_t bytes) {
    Bytes b = rng.bytes(bytes);
    mpz_class a;
    mpz_import(a.get_mpz_t(), b.size(), 1, 1, 0, 0, b.data());
    return a;
}
}  // namespace

TEST_CASE("Fp arithmetic matches GMP") {
    SeededRandom rng(42);
    const mpz_class& p = fctx().p_mpz;
    for (int i = 0; i < 200; ++i) {
        mpz_class a = rand_mpz(rng, 64) % p;
        mpz_class b = rand_mpz(rng, 64) % p;
        Fp fa = Fp::from_mpz(a), fb = Fp::from_mpz(b);
        CHECK(fa.add(fb).to_mpz() == (a + b) % p);
        CHECK(fa.sub(fb).to_mpz() == ((a - b) % p + p) % p);
        CHECK(fa.mul(fb).to_mpz() == (a * b) % p);
        CHECK(fa.sqr().to_mpz() == (a * a) % p);
        CHECK(fa.neg().to_mpz() == (p - a % p) % p);
        if (a != 0) {
            CHECK(fa.mul(fa.inverse()) == Fp::one());
        }
    }
}

TEST_CASE("Fp roundtrips through bytes") {
    SeededRandom rng(7);
    for (int i = 0; i < 50; ++i) {
        Fp a = Fp::from_mpz(rand_mpz(rng, 64));
        uint8_t buf[FP_BYTES];
        a.to_bytes(buf);
        auto back = Fp::from_bytes(BytesView(buf, FP_BYTES));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    // Encodings >= p are rejected.
    uint8_t big[FP_BYTES];
    std::fill(std::begin(big), std::end(big), 0xff);
    CHECK(!Fp::from_bytes(BytesView(big, FP_BYTES)).has_value());
}

TEST_CASE("Fp sqrt") {
    SeededRandom rng(9);
    for (int i = 0; i < 20; ++i) {
        Fp a = Fp::from_mpz(rand_mpz(rng, 64));
        Fp sq = a.sqr();
        auto r = sq.sqrt();
        REQUIRE(r.has_value());
        CHECK((*r == a || *r == a.neg()));
    }
}

TEST_CASE("Fp2/Fp6/Fp12 field axioms") {
    SeededRandom rng(11);
    auto rand_fp2 = [&] { return Fp2{Fp::from_mpz(rand_mpz(rng, 64)), Fp::from_mpz(rand_mpz(rng, 64))}; };
    for (int i = 0; i < 25; ++i) {
        Fp2 a = rand_fp2(), b = rand_fp2(), c = rand_fp2();
        CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
        CHECK(a.mul(b) == b.mul(a));
        CHECK(a.sqr() == a.mul(a));
        if (!a.is_zero()) CHECK(a.mul(a.inverse()) == Fp2::one());
        auto s = a.sqr().sqrt();
        REQUIRE(s.has_value());
        CHECK((*s == a || *s == a.neg()));

        Fp6 x{rand_fp2(), rand_fp2(), rand_fp2()};
        Fp6 y{rand_fp2(), rand_fp2(), rand_fp2()};
        CHECK(x.sqr() == x.mul(x));
        if (!x.is_zero()) CHECK(x.mul(x.inverse()) == Fp6::one());
        CHECK(x.mul_by_01(y.c0, y.c1) == x.mul(Fp6{y.c0, y.c1, Fp2::zero()}));
        CHECK(x.mul_by_1(y.c1) == x.mul(Fp6{Fp2::zero(), y.c1, Fp2::zero()}));

        Fp12 u{x, y};
        Fp12 v{y, x};
        CHECK(u.sqr() == u.mul(u));
        CHECK(u.mul(u.inverse()).is_one());
        CHECK(u.mul_by_014(y.c0, y.c1, x.c1) ==
              u.mul(Fp12{Fp6{y.c0, y.c1, Fp2::zero()}, Fp6{Fp2::zero(), x.c1, Fp2::zero()}}));
        CHECK(u.mul(v) == v.mul(u));
    }
}

TEST_CASE("Frobenius is the p-power map") {
    SeededRandom rng(13);
    auto rand_fp2 = [&] { return Fp2{Fp::from_mpz(rand_mpz(rng, 64)), Fp::from_mpz(rand_mpz(rng, 64))}; };
    Fp12 a{{rand_fp2(), rand_fp2(), rand_fp2()}, {rand_fp2(), rand_fp2(), rand_fp2()}};
    CHECK(a.frobenius(1) == a.pow(fctx().p_mpz));
    CHECK(a.frobenius(2) == a.frobenius(1).pow(fctx().p_mpz));
}

TEST_CASE("G1/G2 group laws and generator order") {
    const G1Affine& g1 = g1_generator();
    const G2Affine& g2 = g2_generator();
    CHECK(g1.is_on_curve());
    CHECK(g2.is_on_curve());
    CHECK(mul_mpz(G1::from_affine(g1), fctx().r_mpz).is_identity());
    CHECK(mul_mpz(G2::from_affine(g2), fctx().r_mpz).is_identity());

    SeededRandom rng(17);
    G1 p = G1::from_affine(g1);
    for (int i = 0; i < 10; ++i) {
        Scalar a = Scalar::random(rng), b = Scalar::random(rng);
        G1 pa = mul_scalar(p, a);
        G1 pb = mul_scalar(p, b);
        CHECK(pa.add(pb).equals(mul_scalar(p, a.add(b))));
        CHECK(pa.dbl().equals(mul_scalar(p, a.add(a))));
        CHECK(mul_scalar(pa, b).equals(mul_scalar(pb, a)));
        CHECK(pa.add(pa.neg()).is_identity());
        // mpz and wNAF paths agree
        CHECK(mul_mpz(p, a.to_mpz()).equals(pa));
    }
    G2 q = G2::from_affine(g2);
    Scalar a = Scalar::random(rng), b = Scalar::random(rng);
    CHECK(mul_scalar(q, a).add(mul_scalar(q, b)).equals(mul_scalar(q, a.add(b))));
}

TEST_CASE("point serialization roundtrip and rejection") {
    SeededRandom rng(19);
    for (int i = 0; i < 20; ++i) {
        G1Affine p = mul_scalar(G1::from_affine(g1_generator()), Scalar::random(rng)).to_affine();
        auto enc = g1_to_bytes(p);
        REQUIRE(enc.size() == 48);
        auto back = g1_from_bytes(enc);
        REQUIRE(back.has_value());
        CHECK(*back == p);

        G2Affine q = mul_scalar(G2::from_affine(g2_generator()), Scalar::random(rng)).to_affine();
        auto enc2 = g2_to_bytes(q);
        REQUIRE(enc2.size() == 96);
        auto back2 = g2_from_bytes(enc2);
        REQUIRE(back2.has_value());
        CHECK(*back2 == q);
    }
    CHECK(g1_from_bytes(g1_to_bytes(G1Affine::identity()))->inf);
    CHECK(g2_from_bytes(g2_to_bytes(G2Affine::identity()))->inf);
    // Uncompressed flag is rejected.
    Bytes bad = g1_to_bytes(g1_generator());
    bad[0] &= 0x7f;
    CHECK(!g1_from_bytes(bad).has_value());
}

TEST_CASE("MSM equals per-term fold oracle") {
    SeededRandom rng(23);
    G1 g = G1::from_affine(g1_generator());
    for (size_t n : {1, 2, 3, 8, 33}) {
        std::vector<G1> bases;
        std::vector<Scalar> scalars;
        for (size_t i = 0; i < n; ++i) {
            bases.push_back(mul_scalar(g, Scalar::random(rng)));
            scalars.push_back(Scalar::random(rng));
        }
        G1 expect = G1::identity();
        for (size_t i = 0; i < n; ++i) expect = expect.add(mul_scalar(bases[i], scalars[i]));
        CHECK(msm(bases, scalars).equals(expect));
    }
    // all-zero scalars -> identity
    std::vector<G1> bases{g, g.dbl()};
    std::vector<Scalar> zeros{Scalar::zero(), Scalar::zero()};
    CHECK(msm(bases, zeros).is_identity());
}

TEST_CASE("pairing bilinearity and non-degeneracy") {
    SeededRandom rng(29);
    const G1Affine& g1 = g1_generator();
    const G2Affine& g2 = g2_generator();
    Fp12 base = pairing(g1, g2);
    CHECK(!base.is_one());  // non-degeneracy
    CHECK(gt_exp(base, Scalar::from_mpz(fctx().r_mpz - 1)).mul(base).is_one());  // order r

    CHECK(pairing(G1Affine::identity(), g2).is_one());
    CHECK(pairing(g1, G2Affine::identity()).is_one());

    for (int i = 0; i < 8; ++i) {
        Scalar x = Scalar::random(rng), y = Scalar::random(rng);
        G1Affine px = mul_scalar(G1::from_affine(g1), x).to_affine();
        G2Affine qy = mul_scalar(G2::from_affine(g2), y).to_affine();
        Fp12 lhs = pairing(px, qy);
        CHECK(lhs == gt_exp(base, x.mul(y)));
        // e(g1^x, g2^y) = e(g1^{xy}, g2)
        G1Affine pxy = mul_scalar(G1::from_affine(g1), x.mul(y)).to_affine();
        CHECK(lhs == pairing(pxy, g2));
    }
    // e(g1^2, g2) = e(g1, g2)^2
    G1Affine g1sq = G1::from_affine(g1).dbl().to_affine();
    CHECK(pairing(g1sq, g2) == base.mul(base));
}

TEST_CASE("cyclotomic squaring and final-exp chain against integer oracle") {
    SeededRandom rng(31);
    Scalar x = Scalar::random(rng), y = Scalar::random(rng);
    G1Affine p = mul_scalar(G1::from_affine(g1_generator()), x).to_affine();
    G2Affine q = mul_scalar(G2::from_affine(g2_generator()), y).to_affine();
    Fp12 m = miller_loop(p, q);
    // Easy part by definition.
    Fp12 easy = m.conjugate().mul(m.inverse());
    easy = easy.frobenius(2).mul(easy);
    CHECK(easy.cyclotomic_sqr() == easy.sqr());
    // Hard part: addition chain vs plain exponentiation.
    Fp12 expect = easy.pow(fctx().final_exp_hard);
    CHECK(final_exponentiation(m) == expect);
}
