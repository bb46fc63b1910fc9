#pragma once

#include <array>
#include <vector>

#include "sdvc/bytes.hpp"
#include "sdvc/errors.hpp"
#include "sdvc/hash.hpp"
#include "sdvc/rng.hpp"

// Hash-and-salt hiding commitments, the commitment-list and Merkle-tree
// mechanisms, and HashWire threshold commitments. SHA-256 throughout; salts
// are 16 bytes, digests 32.

namespace sdvc::commit {

inline constexpr size_t SALT_BYTES = 16;
inline constexpr size_t DIGEST_BYTES = 32;

struct SaltedCommitment {
    Digest digest;
    Bytes salt;  // 16 bytes
};

/// digest = SHA-256(attribute || salt) with a fresh 16-byte salt.
SaltedCommitment commit_salted(BytesView attribute, RandomSource& rng);
Digest salted_digest(BytesView attribute, BytesView salt);

struct CommitmentList {
    std::vector<Digest> entries;

    Bytes serialize() const;  // 32 * |entries| bytes
    static CommitmentList deserialize(BytesView bytes);
};

CommitmentList build_commitment_list(const std::vector<Bytes>& attributes,
                                     const std::vector<Bytes>& salts);
/// Accepts iff the recomputed digest matches entry `index` (1-based).
VerifyResult verify_list_opening(const CommitmentList& list, size_t index, BytesView attribute,
                                 BytesView salt);

struct MerkleCommitment {
    Digest root;
    size_t leaf_count = 0;
};

struct InclusionPath {
    uint32_t leaf_index = 0;         // 1-based
    std::vector<Digest> siblings;    // bottom-up
};

/// Binary tree of SHA-256 digests; an odd node at any level is promoted
/// unchanged to the next level. A single leaf hashes to its digest.
MerkleCommitment merkle_root(const std::vector<Bytes>& leaves);
InclusionPath merkle_path(const std::vector<Bytes>& leaves, size_t index);
VerifyResult merkle_verify(const MerkleCommitment& commitment, BytesView leaf,
                           const InclusionPath& path);

size_t merkle_max_path_len(size_t leaf_count);  // ceil(log2(leaf_count))

// HashWire threshold commitments: c = H^k(r), proof for threshold t is
// pi = H^(k-t)(r), valid iff H^t(pi) = c. k is capped to bound verify cost.
inline constexpr uint32_t HASHWIRE_MAX_K = 1u << 16;

struct HashWireCommitment {
    Digest commitment;
    uint32_t max_iterations = HASHWIRE_MAX_K;
};

HashWireCommitment hashwire_commit(uint32_t k, const Digest& seed);
Digest hashwire_prove(uint32_t k, uint32_t threshold, const Digest& seed);
VerifyResult hashwire_verify(const HashWireCommitment& commitment, uint32_t threshold,
                             const Digest& proof);

}  // namespace sdvc::commit
