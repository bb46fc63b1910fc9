#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdvc/nizkp.hpp"

using namespace sdvc;
using namespace sdvc::algebra;
using namespace sdvc::nizkp;

namespace {

struct Instance {
    std::vector<LinearRelation> relations;
    std::vector<std::vector<Scalar>> witnesses;
};

Instance random_instance(RandomSource& rng, size_t relation_count, size_t arity, GroupTag tag) {
    Instance inst;
    for (size_t j = 0; j < relation_count; ++j) {
        LinearRelation rel;
        std::vector<Scalar> w;
        for (size_t i = 0; i < arity; ++i) {
            rel.bases.push_back(GroupElement::generator(tag).mul(Scalar::random(rng)));
            w.push_back(Scalar::random(rng));
        }
        rel.statement = multi_scalar_mul(rel.bases, w);
        inst.relations.push_back(std::move(rel));
        inst.witnesses.push_back(std::move(w));
    }
    return inst;
}

ChallengeContext test_context() {
    return ChallengeContext("test", to_bytes("aux"), sha256(to_bytes("payload")));
}

}  // namespace

TEST_CASE("completeness across arities and groups") {
    SeededRandom rng(101);
    auto ctx = test_context();
    int cases = 0;
    for (GroupTag tag : {GroupTag::G1, GroupTag::G2}) {
        for (size_t arity = 1; arity <= 16 && cases < 100; arity += 1) {
            for (int rep = 0; rep < 4 && cases < 100; ++rep, ++cases) {
                auto inst = random_instance(rng, 1, arity, tag);
                auto form = (cases % 2) ? TranscriptForm::Commitment : TranscriptForm::Challenge;
                auto t = prove_linear(inst.relations, inst.witnesses, ctx, form, rng);
                CHECK(verify_linear(inst.relations, t, ctx).accepted);
            }
        }
    }
    CHECK(cases >= 64);
}

TEST_CASE("Schnorr case and prover freshness") {
    SeededRandom rng(103);
    auto ctx = test_context();
    auto inst = random_instance(rng, 1, 1, GroupTag::G1);
    auto t1 = prove_linear(inst.relations, inst.witnesses, ctx, TranscriptForm::Commitment, rng);
    auto t2 = prove_linear(inst.relations, inst.witnesses, ctx, TranscriptForm::Commitment, rng);
    CHECK(verify_linear(inst.relations, t1, ctx).accepted);
    CHECK(verify_linear(inst.relations, t2, ctx).accepted);
    // Fresh blinding scalars: transcripts differ.
    CHECK(t1.encode() != t2.encode());
}

TEST_CASE("multi-relation proof shares one challenge") {
    SeededRandom rng(104);
    auto ctx = test_context();
    auto inst = random_instance(rng, 2, 3, GroupTag::G1);
    auto t = prove_linear(inst.relations, inst.witnesses, ctx, TranscriptForm::Commitment, rng);
    REQUIRE(t.commitments.size() == 2);
    REQUIRE(t.responses.size() == 2);
    CHECK(verify_linear(inst.relations, t, ctx).accepted);

    // Direct Fiat-Shamir check: T_j * y_j^c == prod g_i^{r_i} for both j.
    Scalar c = compute_challenge(ctx, inst.relations, t.commitments);
    for (size_t j = 0; j < 2; ++j) {
        GroupElement lhs = t.commitments[j].add(inst.relations[j].statement.mul(c));
        GroupElement rhs = multi_scalar_mul(inst.relations[j].bases, t.responses[j]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("form conversion round-trips and both paths agree") {
    SeededRandom rng(105);
    auto ctx = test_context();
    auto inst = random_instance(rng, 2, 4, GroupTag::G1);
    auto t_form = prove_linear(inst.relations, inst.witnesses, ctx, TranscriptForm::Commitment, rng);

    auto c_form = convert_form(t_form, inst.relations, ctx, TranscriptForm::Challenge);
    CHECK(c_form.form == TranscriptForm::Challenge);
    CHECK(verify_linear(inst.relations, c_form, ctx).accepted);

    auto back = convert_form(c_form, inst.relations, ctx, TranscriptForm::Commitment);
    CHECK(verify_linear(inst.relations, back, ctx).accepted);
    // Reconstruction is deterministic: original commitments reappear.
    REQUIRE(back.commitments.size() == t_form.commitments.size());
    for (size_t j = 0; j < back.commitments.size(); ++j) {
        CHECK(back.commitments[j] == t_form.commitments[j]);
    }

    // A shared challenge replaces all k commitments: saves 48k - 32 bytes.
    CHECK(t_form.encode().size() - c_form.encode().size() ==
          48 * inst.relations.size() - 32);

    // Single-relation case: c-form is 48 - 32 = 16 bytes smaller.
    auto single = random_instance(rng, 1, 4, GroupTag::G1);
    auto st = prove_linear(single.relations, single.witnesses, ctx, TranscriptForm::Commitment, rng);
    auto sc = convert_form(st, single.relations, ctx, TranscriptForm::Challenge);
    CHECK(st.encode().size() - sc.encode().size() == 16);

    // Converting garbage is refused.
    auto bad = t_form;
    bad.responses[0][0] = bad.responses[0][0].add(Scalar::one());
    CHECK_THROWS_AS(convert_form(bad, inst.relations, ctx, TranscriptForm::Challenge), Error);
}

TEST_CASE("single-byte tampering of transcript or context rejects") {
    SeededRandom rng(106);
    auto ctx = test_context();
    auto inst = random_instance(rng, 1, 2, GroupTag::G1);
    for (auto form : {TranscriptForm::Commitment, TranscriptForm::Challenge}) {
        auto t = prove_linear(inst.relations, inst.witnesses, ctx, form, rng);
        Bytes enc = t.encode();
        REQUIRE(verify_linear(inst.relations, LinearRelationTranscript::decode(enc), ctx).accepted);
        // Skip the header bytes whose mutation only changes framing; every
        // payload byte (commitments/challenge/responses) must break the proof.
        size_t header = 2 + 4 + 4;
        for (size_t i = header; i < enc.size(); ++i) {
            Bytes mut = enc;
            mut[i] ^= 0x5a;
            bool rejected = false;
            try {
                auto parsed = LinearRelationTranscript::decode(mut);
                rejected = !verify_linear(inst.relations, parsed, ctx).accepted;
            } catch (const Error&) {
                rejected = true;  // malformed counts as reject
            }
            CHECK(rejected);
        }
        // Context binding: any context byte change rejects.
        Bytes cb = ctx.bytes();
        for (size_t i = 0; i < cb.size(); ++i) {
            Bytes mut = cb;
            mut[i] ^= 0x01;
            CHECK(!verify_linear(inst.relations, t, ChallengeContext::raw(mut)).accepted);
        }
    }
}

TEST_CASE("multi-relation c-form failure does not localize") {
    SeededRandom rng(107);
    auto ctx = test_context();
    auto inst = random_instance(rng, 3, 2, GroupTag::G1);
    auto t = prove_linear(inst.relations, inst.witnesses, ctx, TranscriptForm::Challenge, rng);
    // Corrupt one relation's response: the whole proof rejects with a single
    // non-localizing reason.
    t.responses[1][0] = t.responses[1][0].add(Scalar::one());
    auto res = verify_linear(inst.relations, t, ctx);
    CHECK(!res.accepted);
    CHECK(res.reason == "proof-equation");
}

TEST_CASE("invalid witness raises when precheck is on") {
    SeededRandom rng(108);
    set_witness_precheck(true);
    auto ctx = test_context();
    auto inst = random_instance(rng, 1, 2, GroupTag::G1);
    inst.witnesses[0][0] = inst.witnesses[0][0].add(Scalar::one());
    CHECK_THROWS_AS(
        prove_linear(inst.relations, inst.witnesses, ctx, TranscriptForm::Commitment, rng),
        Error);
    set_witness_precheck(false);
    // Without the precheck the proof comes out unverifiable, never unsound.
    auto t = prove_linear(inst.relations, inst.witnesses, ctx, TranscriptForm::Commitment, rng);
    CHECK(!verify_linear(inst.relations, t, ctx).accepted);
}

TEST_CASE("simulator oracle: HVZK transcripts pass the interactive check") {
    // Simulator: pick random responses and challenge, set
    // T = y^{-c} prod g_i^{s_i}; the transcript verifies interactively
    // without any witness.
    SeededRandom rng(109);
    for (int rep = 0; rep < 20; ++rep) {
        auto inst = random_instance(rng, 1, 3, GroupTag::G1);
        const auto& rel = inst.relations[0];
        std::vector<Scalar> s;
        for (size_t i = 0; i < rel.bases.size(); ++i) s.push_back(Scalar::random(rng));
        Scalar c = Scalar::random(rng);
        GroupElement t = multi_scalar_mul(rel.bases, s).add(rel.statement.mul(c.neg()));
        // Interactive check: T y^c == prod g_i^{s_i}.
        CHECK(t.add(rel.statement.mul(c)) == multi_scalar_mul(rel.bases, s));
    }
}

TEST_CASE("transcript wire encoding round-trips") {
    SeededRandom rng(110);
    auto ctx = test_context();
    for (GroupTag tag : {GroupTag::G1, GroupTag::G2}) {
        auto inst = random_instance(rng, 2, 3, tag);
        for (auto form : {TranscriptForm::Commitment, TranscriptForm::Challenge}) {
            auto t = prove_linear(inst.relations, inst.witnesses, ctx, form, rng);
            auto parsed = LinearRelationTranscript::decode(t.encode());
            CHECK(parsed.encode() == t.encode());
            CHECK(verify_linear(inst.relations, parsed, ctx).accepted);
        }
    }
    CHECK_THROWS_AS(LinearRelationTranscript::decode(Bytes{1, 1, 0}), Error);
}
