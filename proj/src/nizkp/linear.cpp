#include "sdvc/nizkp.hpp"

#include <atomic>

namespace sdvc::nizkp {

namespace {

#ifdef NDEBUG
std::atomic<bool> g_precheck{false};
#else
std::atomic<bool> g_precheck{true};
#endif

void validate_relations(const std::vector<LinearRelation>& relations) {
    if (relations.empty()) fail(ErrorCode::InvalidArgument, "no relations");
    for (const auto& rel : relations) {
        if (rel.bases.empty()) fail(ErrorCode::InvalidArgument, "relation without bases");
        for (const auto& b : rel.bases) {
            if (b.tag() != rel.statement.tag()) {
                fail(ErrorCode::InvalidArgument, "relation mixes group tags");
            }
        }
        if (rel.statement.tag() == GroupTag::GT) {
            fail(ErrorCode::InvalidArgument, "GT relations unsupported");
        }
    }
}

// Uncounted satisfaction check (diagnostic only, kept out of the op tally).
bool witness_satisfies(const LinearRelation& rel, const std::vector<Scalar>& w) {
    if (w.size() != rel.bases.size()) return false;
    if (rel.statement.tag() == GroupTag::G1) {
        std::vector<algebra::G1> pts;
        for (const auto& b : rel.bases) pts.push_back(b.g1());
        return algebra::msm(pts, w).equals(rel.statement.g1());
    }
    std::vector<algebra::G2> pts;
    for (const auto& b : rel.bases) pts.push_back(b.g2());
    return algebra::msm(pts, w).equals(rel.statement.g2());
}

// T_j reconstructed from responses: prod g_i^{r_i} * y^{-c}.
GroupElement reconstruct_commitment(const LinearRelation& rel, const std::vector<Scalar>& resp,
                                    const Scalar& c) {
    std::vector<GroupElement> bases = rel.bases;
    bases.push_back(rel.statement);
    std::vector<Scalar> scalars = resp;
    scalars.push_back(c.neg());
    return algebra::multi_scalar_mul(bases, scalars);
}

}  // namespace

void set_witness_precheck(bool enabled) { g_precheck = enabled; }

ChallengeContext::ChallengeContext(std::string_view mechanism_tag, BytesView aux,
                                   const Digest& disclosed) {
    append_lp(bytes_, to_bytes(mechanism_tag));
    append_lp(bytes_, aux);
    append_lp(bytes_, disclosed);
}

ChallengeContext ChallengeContext::raw(Bytes bytes) {
    ChallengeContext c;
    c.bytes_ = std::move(bytes);
    return c;
}

Scalar compute_challenge(const ChallengeContext& context,
                         const std::vector<LinearRelation>& relations,
                         const std::vector<GroupElement>& commitments) {
    Bytes msg;
    append_lp(msg, context.bytes());
    append_u32be(msg, static_cast<uint32_t>(relations.size()));
    for (const auto& rel : relations) {
        append_u32be(msg, static_cast<uint32_t>(rel.bases.size()));
        for (const auto& b : rel.bases) append_lp(msg, b.encode());
        append_lp(msg, rel.statement.encode());
    }
    for (const auto& t : commitments) append_lp(msg, t.encode());
    return Scalar::reduce_bytes(sha256(msg));
}

LinearRelationTranscript prove_linear(const std::vector<LinearRelation>& relations,
                                      const std::vector<std::vector<Scalar>>& witnesses,
                                      const ChallengeContext& context, TranscriptForm form,
                                      RandomSource& rng) {
    validate_relations(relations);
    if (witnesses.size() != relations.size()) {
        fail(ErrorCode::InvalidArgument, "witness count mismatch");
    }
    for (size_t j = 0; j < relations.size(); ++j) {
        if (witnesses[j].size() != relations[j].bases.size()) {
            fail(ErrorCode::InvalidArgument, "witness arity mismatch");
        }
        if (g_precheck && !witness_satisfies(relations[j], witnesses[j])) {
            fail(ErrorCode::InvalidWitness, "invalid-witness");
        }
    }

    // Fresh blinding scalars per call; one shared challenge over all T_j.
    std::vector<std::vector<Scalar>> blind(relations.size());
    std::vector<GroupElement> commitments;
    commitments.reserve(relations.size());
    for (size_t j = 0; j < relations.size(); ++j) {
        blind[j].reserve(relations[j].bases.size());
        for (size_t i = 0; i < relations[j].bases.size(); ++i) {
            blind[j].push_back(Scalar::random(rng));
        }
        commitments.push_back(algebra::multi_scalar_mul(relations[j].bases, blind[j]));
    }
    Scalar c = compute_challenge(context, relations, commitments);

    LinearRelationTranscript out;
    out.responses.resize(relations.size());
    for (size_t j = 0; j < relations.size(); ++j) {
        out.responses[j].reserve(blind[j].size());
        for (size_t i = 0; i < blind[j].size(); ++i) {
            out.responses[j].push_back(blind[j][i].add(c.mul(witnesses[j][i])));
        }
    }
    out.form = form;
    if (form == TranscriptForm::Commitment) {
        out.commitments = std::move(commitments);
    } else {
        out.challenge = c;
    }
    return out;
}

VerifyResult verify_linear(const std::vector<LinearRelation>& relations,
                           const LinearRelationTranscript& transcript,
                           const ChallengeContext& context) {
    validate_relations(relations);
    if (transcript.responses.size() != relations.size()) {
        return VerifyResult::reject("malformed");
    }
    for (size_t j = 0; j < relations.size(); ++j) {
        if (transcript.responses[j].size() != relations[j].bases.size()) {
            return VerifyResult::reject("malformed");
        }
    }

    if (transcript.form == TranscriptForm::Commitment) {
        if (transcript.commitments.size() != relations.size()) {
            return VerifyResult::reject("malformed");
        }
        for (size_t j = 0; j < relations.size(); ++j) {
            if (transcript.commitments[j].tag() != relations[j].statement.tag()) {
                return VerifyResult::reject("malformed");
            }
        }
        Scalar c = compute_challenge(context, relations, transcript.commitments);
        for (size_t j = 0; j < relations.size(); ++j) {
            GroupElement expect = reconstruct_commitment(relations[j], transcript.responses[j], c);
            if (expect != transcript.commitments[j]) {
                return VerifyResult::reject("proof-equation");
            }
        }
        return VerifyResult::ok();
    }

    if (!transcript.commitments.empty()) return VerifyResult::reject("malformed");
    std::vector<GroupElement> reconstructed;
    reconstructed.reserve(relations.size());
    for (size_t j = 0; j < relations.size(); ++j) {
        reconstructed.push_back(
            reconstruct_commitment(relations[j], transcript.responses[j], transcript.challenge));
    }
    Scalar expect = compute_challenge(context, relations, reconstructed);
    if (expect != transcript.challenge) return VerifyResult::reject("proof-equation");
    return VerifyResult::ok();
}

LinearRelationTranscript convert_form(const LinearRelationTranscript& transcript,
                                      const std::vector<LinearRelation>& relations,
                                      const ChallengeContext& context, TranscriptForm target) {
    if (!verify_linear(relations, transcript, context)) {
        fail(ErrorCode::UnverifiableInput, "unverifiable-input");
    }
    if (transcript.form == target) return transcript;

    LinearRelationTranscript out;
    out.form = target;
    out.responses = transcript.responses;
    if (target == TranscriptForm::Challenge) {
        out.challenge = compute_challenge(context, relations, transcript.commitments);
    } else {
        for (size_t j = 0; j < relations.size(); ++j) {
            out.commitments.push_back(
                reconstruct_commitment(relations[j], transcript.responses[j],
                                       transcript.challenge));
        }
    }
    return out;
}

Bytes LinearRelationTranscript::encode() const {
    Bytes out;
    out.push_back(static_cast<uint8_t>(form));
    GroupTag tag = form == TranscriptForm::Commitment && !commitments.empty()
                       ? commitments[0].tag()
                       : GroupTag::G1;
    if (form == TranscriptForm::Commitment) {
        for (const auto& t : commitments) tag = t.tag();
    }
    out.push_back(static_cast<uint8_t>(tag));
    append_u32be(out, static_cast<uint32_t>(responses.size()));
    for (const auto& r : responses) append_u32be(out, static_cast<uint32_t>(r.size()));
    if (form == TranscriptForm::Commitment) {
        for (const auto& t : commitments) append(out, t.encode());
    } else {
        append(out, challenge.bytes());
    }
    for (const auto& rel : responses) {
        for (const auto& r : rel) append(out, r.bytes());
    }
    return out;
}

LinearRelationTranscript LinearRelationTranscript::decode(BytesView b) {
    auto need = [&](size_t off, size_t n) {
        if (off + n > b.size()) fail(ErrorCode::Malformed, "transcript truncated");
    };
    need(0, 6);
    LinearRelationTranscript out;
    if (b[0] != 1 && b[0] != 2) fail(ErrorCode::Malformed, "bad form tag");
    out.form = static_cast<TranscriptForm>(b[0]);
    if (b[1] != 1 && b[1] != 2) fail(ErrorCode::Malformed, "bad group tag");
    GroupTag tag = static_cast<GroupTag>(b[1]);
    size_t off = 2;
    uint32_t k = read_u32be(b, off);
    off += 4;
    if (k == 0 || k > 4096) fail(ErrorCode::Malformed, "bad relation count");
    std::vector<uint32_t> arity(k);
    for (uint32_t j = 0; j < k; ++j) {
        need(off, 4);
        arity[j] = read_u32be(b, off);
        off += 4;
        if (arity[j] == 0 || arity[j] > 65536) fail(ErrorCode::Malformed, "bad arity");
    }
    size_t esize = GroupElement::encoded_size(tag);
    if (out.form == TranscriptForm::Commitment) {
        for (uint32_t j = 0; j < k; ++j) {
            need(off, esize);
            auto el = GroupElement::decode(tag, b.subspan(off, esize));
            if (!el) fail(ErrorCode::Malformed, "bad commitment encoding");
            out.commitments.push_back(*el);
            off += esize;
        }
    } else {
        need(off, Scalar::BYTES);
        auto c = Scalar::from_bytes(b.subspan(off, Scalar::BYTES));
        if (!c) fail(ErrorCode::Malformed, "bad challenge encoding");
        out.challenge = *c;
        off += Scalar::BYTES;
    }
    out.responses.resize(k);
    for (uint32_t j = 0; j < k; ++j) {
        for (uint32_t i = 0; i < arity[j]; ++i) {
            need(off, Scalar::BYTES);
            auto s = Scalar::from_bytes(b.subspan(off, Scalar::BYTES));
            if (!s) fail(ErrorCode::Malformed, "bad response encoding");
            out.responses[j].push_back(*s);
            off += Scalar::BYTES;
        }
    }
    if (off != b.size()) fail(ErrorCode::Malformed, "trailing bytes");
    return out;
}

}  // namespace sdvc::nizkp
