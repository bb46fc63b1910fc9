#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sdvc/group.hpp"
#include "sdvc/hash.hpp"
#include "sdvc/rsa.hpp"

using namespace sdvc;
using namespace sdvc::algebra;

TEST_CASE("hash_to_group is deterministic and seed-sensitive") {
    Bytes seed = to_bytes("BBS_TEST_SEED");
    auto a = hash_to_group_vector("BBS", seed, 5);
    auto b = hash_to_group_vector("BBS", seed, 5);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < 5; ++i) CHECK(a[i] == b[i]);

    // Distinct seeds give distinct first elements (100 random pairs).
    SeededRandom rng(1234);
    for (int i = 0; i < 100; ++i) {
        Bytes s1 = rng.bytes(16), s2 = rng.bytes(16);
        auto e1 = hash_to_group_vector("BBS", s1, 1);
        auto e2 = hash_to_group_vector("BBS", s2, 1);
        CHECK(e1[0].encode() != e2[0].encode());
    }

    // Different domain tags separate the outputs.
    auto c = hash_to_group_vector("PS", seed, 5);
    CHECK(a[0] != c[0]);

    CHECK_THROWS_AS(hash_to_group_vector("BBS", seed, 0), Error);
}

TEST_CASE("hash_to_group outputs are subgroup members") {
    auto v = hash_to_group_vector("BBS", to_bytes("membership"), 33);
    REQUIRE(v.size() == 33);
    std::set<Bytes> unique;
    for (const auto& e : v) {
        CHECK(in_subgroup(e.g1()));
        CHECK(!e.is_identity());
        unique.insert(e.encode());
        // Every encoding decodes back (round-trip through the strict decoder).
        auto back = GroupElement::decode(GroupTag::G1, e.encode());
        REQUIRE(back.has_value());
        CHECK(*back == e);
    }
    CHECK(unique.size() == 33);
}

TEST_CASE("multi_scalar_mul contract") {
    SeededRandom rng(5);
    GroupElement g = GroupElement::generator(GroupTag::G1);

    // All-zero scalars give the identity.
    std::vector<GroupElement> bases{g, g.mul(Scalar::from_u64(7))};
    std::vector<Scalar> zeros{Scalar::zero(), Scalar::zero()};
    CHECK(multi_scalar_mul(bases, zeros).is_identity());

    // A single pair is plain exponentiation.
    Scalar s = Scalar::random(rng);
    std::vector<GroupElement> one_base{g};
    std::vector<Scalar> one_scalar{s};
    CHECK(multi_scalar_mul(one_base, one_scalar) == g.mul(s));

    // Random 8-term instance against the per-term fold oracle.
    std::vector<GroupElement> b8;
    std::vector<Scalar> s8;
    for (int i = 0; i < 8; ++i) {
        b8.push_back(g.mul(Scalar::random(rng)));
        s8.push_back(Scalar::random(rng));
    }
    GroupElement expect = GroupElement::identity(GroupTag::G1);
    for (int i = 0; i < 8; ++i) expect = expect.add(b8[i].mul(s8[i]));
    CHECK(multi_scalar_mul(b8, s8) == expect);

    // Errors: length mismatch and mixed tags.
    std::vector<Scalar> s7(s8.begin(), s8.end() - 1);
    CHECK_THROWS_AS(multi_scalar_mul(b8, s7), Error);
    std::vector<GroupElement> mixed{g, GroupElement::generator(GroupTag::G2)};
    std::vector<Scalar> two{s, s};
    CHECK_THROWS_AS(multi_scalar_mul(mixed, two), Error);
}

TEST_CASE("MSM-fold equivalence on sizes 1..64") {
    SeededRandom rng(6);
    GroupElement g = GroupElement::generator(GroupTag::G1);
    for (size_t n = 1; n <= 64; ++n) {
        std::vector<GroupElement> bases;
        std::vector<Scalar> scalars;
        for (size_t i = 0; i < n; ++i) {
            bases.push_back(g.mul(Scalar::random(rng)));
            scalars.push_back(Scalar::random(rng));
        }
        GroupElement expect = GroupElement::identity(GroupTag::G1);
        for (size_t i = 0; i < n; ++i) expect = expect.add(bases[i].mul(scalars[i]));
        CHECK(multi_scalar_mul(bases, scalars) == expect);
    }
}

TEST_CASE("pairing wrapper bilinearity and tag checks") {
    SeededRandom rng(8);
    GroupElement g1 = GroupElement::generator(GroupTag::G1);
    GroupElement g2 = GroupElement::generator(GroupTag::G2);
    GroupElement base = pairing_map(g1, g2);
    CHECK(!base.is_identity());

    CHECK(pairing_map(g1.mul(Scalar::from_u64(2)), g2) == base.add(base));
    CHECK(pairing_map(GroupElement::identity(GroupTag::G1), g2).is_identity());

    for (int i = 0; i < 50; ++i) {
        Scalar x = Scalar::random(rng), y = Scalar::random(rng);
        CHECK(pairing_map(g1.mul(x), g2.mul(y)) == pairing_map(g1.mul(x.mul(y)), g2));
    }

    CHECK_THROWS_AS(pairing_map(g2, g2), Error);
    CHECK_THROWS_AS(pairing_map(g1, g1), Error);
}

TEST_CASE("encoding roundtrip fuzz and GT refusal") {
    SeededRandom rng(10);
    GroupElement g1 = GroupElement::generator(GroupTag::G1);
    GroupElement g2 = GroupElement::generator(GroupTag::G2);
    for (int i = 0; i < 500; ++i) {
        GroupElement p = g1.mul(Scalar::random(rng));
        auto enc = p.encode();
        REQUIRE(enc.size() == 48);
        auto back = GroupElement::decode(GroupTag::G1, enc);
        REQUIRE(back.has_value());
        CHECK(*back == p);

        Scalar s = Scalar::random(rng);
        auto sb = s.bytes();
        auto sback = Scalar::from_bytes(sb);
        REQUIRE(sback.has_value());
        CHECK(*sback == s);
    }
    for (int i = 0; i < 100; ++i) {
        GroupElement q = g2.mul(Scalar::random(rng));
        auto enc = q.encode();
        REQUIRE(enc.size() == 96);
        auto back = GroupElement::decode(GroupTag::G2, enc);
        REQUIRE(back.has_value());
        CHECK(*back == q);
    }
    CHECK_THROWS_AS(pairing_map(g1, g2).encode(), Error);
}

namespace {
// Curve point deliberately outside the prime-order subgroup: run the
// try-and-increment walk without clearing the cofactor.
Bytes non_subgroup_g1_encoding() {
    for (uint64_t ctr = 0;; ++ctr) {
        Bytes msg = to_bytes("outside-subgroup");
        msg.push_back(static_cast<uint8_t>(ctr));
        Digest d = sha256(msg);
        Bytes wide(d.begin(), d.end());
        mpz_class xi;
        mpz_import(xi.get_mpz_t(), wide.size(), 1, 1, 0, 0, wide.data());
        Fp x = Fp::from_mpz(xi);
        auto y = x.sqr().mul(x).add(fctx().curve_b).sqrt();
        if (!y) continue;
        G1Affine p{x, *y, false};
        if (in_subgroup(G1::from_affine(p))) continue;
        Bytes enc(48, 0);
        p.x.to_bytes(enc.data());
        enc[0] |= 0x80;
        if (p.y.lex_larger()) enc[0] |= 0x20;
        return enc;
    }
}
}  // namespace

TEST_CASE("subgroup safety: non-subgroup encodings are rejected") {
    Bytes enc = non_subgroup_g1_encoding();
    CHECK(!GroupElement::decode(GroupTag::G1, enc).has_value());
}

TEST_CASE("safe prime structure") {
    SeededRandom rng(20);
    BigNat p = gen_safe_prime(256, rng);
    CHECK(mpz_sizeinbase(p.get_mpz_t(), 2) == 256);
    CHECK(is_probable_prime(p));
    CHECK(is_probable_prime((p - 1) / 2));
}

TEST_CASE("rsa group from factors: quadratic residues and serialization") {
    SeededRandom rng(21);
    BigNat p = gen_safe_prime(256, rng);
    BigNat q = gen_safe_prime(256, rng);
    RsaGroupParams params = rsa_group_from_factors(p, q, 5, rng);
    CHECK(params.generators.size() == 5);
    CHECK(params.n == p * q);
    // Generators are quadratic residues: g^((p-1)(q-1)/4) == 1 given safe
    // primes (the QR group has odd order p'q').
    BigNat order = (p - 1) / 2 * ((q - 1) / 2);
    for (const auto& g : params.generators) {
        BigNat e;
        mpz_powm(e.get_mpz_t(), g.get_mpz_t(), order.get_mpz_t(), params.n.get_mpz_t());
        CHECK(e == 1);
    }
    // Two key generations differ.
    RsaGroupParams params2 = rsa_group_from_factors(p, q, 5, rng);
    CHECK(params.generators[0] != params2.generators[0]);

    Bytes enc = mpz_to_fixed_be(params.n, params.modulus_bytes());
    CHECK(enc.size() == params.modulus_bytes());
    CHECK(mpz_from_be(enc) == params.n);
    CHECK_THROWS_AS(mpz_to_fixed_be(params.n, 8), Error);
}

TEST_CASE("op counters record the counted entry points") {
    auto& c = op_counters();
    c.reset();
    SeededRandom rng(22);
    GroupElement g = GroupElement::generator(GroupTag::G1);
    GroupElement h = GroupElement::generator(GroupTag::G2);
    g.mul(Scalar::random(rng));
    h.mul(Scalar::random(rng));
    g.add(g);
    std::vector<GroupElement> bases{g, g};
    std::vector<Scalar> scalars{Scalar::one(), Scalar::one()};
    multi_scalar_mul(bases, scalars);
    pairing_map(g, h);
    pairing_product_is_identity({{g, h}, {g.neg(), h}});
    sample_g2(rng);
    CHECK(c.mul_g1 == 1);
    CHECK(c.mul_g2 == 1);
    CHECK(c.add_g1 == 1);
    CHECK(c.msm_g1 == std::vector<uint32_t>{2});
    CHECK(c.pairings == 3);
    CHECK(c.rand_g2 == 1);
}
