#pragma once

#include <string_view>
#include <vector>

#include "sdvc/group.hpp"
#include "sdvc/hash.hpp"

// Sigma protocol for linear relations y = prod g_i^{w_i} over a prime-order
// group, made non-interactive with the Fiat-Shamir transform. Supports both
// transcript encodings (commitment form and challenge form) and
// multi-relation proofs sharing one challenge. The unknown-order variant
// used by CL lives in the CL module; this one is prime-order only.

namespace sdvc::nizkp {

using algebra::GroupElement;
using algebra::GroupTag;
using algebra::Scalar;

struct LinearRelation {
    std::vector<GroupElement> bases;
    GroupElement statement;
};

enum class TranscriptForm : uint8_t {
    Commitment = 1,  // carries T_1..T_k; error-localising, larger
    Challenge = 2,   // carries c; smaller whenever |element| > |scalar|
};

struct LinearRelationTranscript {
    TranscriptForm form = TranscriptForm::Commitment;
    std::vector<GroupElement> commitments;       // Commitment form only
    Scalar challenge;                            // Challenge form only
    std::vector<std::vector<Scalar>> responses;  // one vector per relation

    /// Wire encoding: form byte, group-tag byte, relation count, per-relation
    /// response counts (u32 big-endian each), then the canonical element
    /// encodings (commitments or challenge, then all responses).
    Bytes encode() const;
    static LinearRelationTranscript decode(BytesView bytes);  // throws Malformed
};

/// Public byte-context bound into the Fiat-Shamir challenge. Serialisation
/// is canonical: length-prefixed mechanism tag, auxiliary public data
/// (issuer key, parameter seed, disclosed indices) and the SHA-256 digest of
/// the disclosed-attribute payload. Bases and statements are appended by the
/// prover/verifier themselves.
class ChallengeContext {
public:
    ChallengeContext(std::string_view mechanism_tag, BytesView aux, const Digest& disclosed);
    static ChallengeContext raw(Bytes bytes);
    const Bytes& bytes() const { return bytes_; }

private:
    ChallengeContext() = default;
    Bytes bytes_;
};

/// Enables the witness-satisfaction precheck in prove_linear (always on in
/// debug builds; tests can switch it on explicitly).
void set_witness_precheck(bool enabled);

LinearRelationTranscript prove_linear(const std::vector<LinearRelation>& relations,
                                      const std::vector<std::vector<Scalar>>& witnesses,
                                      const ChallengeContext& context, TranscriptForm form,
                                      RandomSource& rng);

VerifyResult verify_linear(const std::vector<LinearRelation>& relations,
                           const LinearRelationTranscript& transcript,
                           const ChallengeContext& context);

/// Re-encodes a verifying transcript in the other form. Throws
/// "unverifiable-input" if the transcript does not verify.
LinearRelationTranscript convert_form(const LinearRelationTranscript& transcript,
                                      const std::vector<LinearRelation>& relations,
                                      const ChallengeContext& context, TranscriptForm target);

/// Fiat-Shamir challenge: SHA-256 over context, bases, statements and
/// commitments, reduced mod the group order.
Scalar compute_challenge(const ChallengeContext& context,
                         const std::vector<LinearRelation>& relations,
                         const std::vector<GroupElement>& commitments);

}  // namespace sdvc::nizkp
