#include "sdvc/commitments.hpp"

namespace sdvc::commit {

namespace {

std::vector<Digest> leaf_digests(const std::vector<Bytes>& leaves) {
    std::vector<Digest> out;
    out.reserve(leaves.size());
    for (const auto& leaf : leaves) out.push_back(sha256(leaf));
    return out;
}

Digest hash_pair(const Digest& left, const Digest& right) {
    Bytes buf;
    append(buf, left);
    append(buf, right);
    return sha256(buf);
}

std::vector<Digest> next_level(const std::vector<Digest>& level) {
    std::vector<Digest> up;
    up.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i + 1 < level.size(); i += 2) up.push_back(hash_pair(level[i], level[i + 1]));
    if (level.size() % 2) up.push_back(level.back());  // odd node promoted unchanged
    return up;
}

}  // namespace

SaltedCommitment commit_salted(BytesView attribute, RandomSource& rng) {
    SaltedCommitment c;
    c.salt = rng.bytes(SALT_BYTES);
    c.digest = salted_digest(attribute, c.salt);
    return c;
}

Digest salted_digest(BytesView attribute, BytesView salt) {
    if (salt.size() != SALT_BYTES) fail(ErrorCode::InvalidArgument, "salt must be 16 bytes");
    Bytes buf(attribute.begin(), attribute.end());
    append(buf, salt);
    return sha256(buf);
}

Bytes CommitmentList::serialize() const {
    Bytes out;
    out.reserve(entries.size() * DIGEST_BYTES);
    for (const auto& d : entries) append(out, d);
    return out;
}

CommitmentList CommitmentList::deserialize(BytesView bytes) {
    if (bytes.empty() || bytes.size() % DIGEST_BYTES) {
        fail(ErrorCode::Malformed, "commitment list length");
    }
    CommitmentList list;
    for (size_t off = 0; off < bytes.size(); off += DIGEST_BYTES) {
        Digest d;
        std::copy_n(bytes.begin() + off, DIGEST_BYTES, d.begin());
        list.entries.push_back(d);
    }
    return list;
}

CommitmentList build_commitment_list(const std::vector<Bytes>& attributes,
                                     const std::vector<Bytes>& salts) {
    if (attributes.empty() || attributes.size() != salts.size()) {
        fail(ErrorCode::InvalidArgument, "attribute/salt lists must match and be non-empty");
    }
    CommitmentList list;
    list.entries.reserve(attributes.size());
    for (size_t i = 0; i < attributes.size(); ++i) {
        list.entries.push_back(salted_digest(attributes[i], salts[i]));
    }
    return list;
}

VerifyResult verify_list_opening(const CommitmentList& list, size_t index, BytesView attribute,
                                 BytesView salt) {
    if (index < 1 || index > list.entries.size()) {
        fail(ErrorCode::InvalidArgument, "index out of range");
    }
    if (salted_digest(attribute, salt) != list.entries[index - 1]) {
        return VerifyResult::reject("commitment-mismatch");
    }
    return VerifyResult::ok();
}

MerkleCommitment merkle_root(const std::vector<Bytes>& leaves) {
    if (leaves.empty()) fail(ErrorCode::InvalidArgument, "empty leaf list");
    std::vector<Digest> level = leaf_digests(leaves);
    while (level.size() > 1) level = next_level(level);
    return {level[0], leaves.size()};
}

size_t merkle_max_path_len(size_t leaf_count) {
    size_t len = 0;
    while ((size_t{1} << len) < leaf_count) ++len;
    return len;
}

InclusionPath merkle_path(const std::vector<Bytes>& leaves, size_t index) {
    if (leaves.empty()) fail(ErrorCode::InvalidArgument, "empty leaf list");
    if (index < 1 || index > leaves.size()) fail(ErrorCode::InvalidArgument, "index out of range");
    InclusionPath path;
    path.leaf_index = static_cast<uint32_t>(index);
    std::vector<Digest> level = leaf_digests(leaves);
    size_t i = index - 1;
    while (level.size() > 1) {
        size_t sib = i ^ 1;
        if (sib < level.size()) path.siblings.push_back(level[sib]);
        i >>= 1;
        level = next_level(level);
    }
    return path;
}

VerifyResult merkle_verify(const MerkleCommitment& commitment, BytesView leaf,
                           const InclusionPath& path) {
    if (path.leaf_index < 1 || path.leaf_index > commitment.leaf_count) {
        fail(ErrorCode::InvalidArgument, "index out of range");
    }
    if (path.siblings.size() > merkle_max_path_len(commitment.leaf_count)) {
        return VerifyResult::reject("path-too-long");
    }
    Digest node = sha256(leaf);
    size_t i = path.leaf_index - 1;
    size_t size = commitment.leaf_count;
    size_t used = 0;
    while (size > 1) {
        size_t sib = i ^ 1;
        if (sib < size) {
            if (used >= path.siblings.size()) return VerifyResult::reject("path-too-short");
            const Digest& s = path.siblings[used++];
            node = (i & 1) ? hash_pair(s, node) : hash_pair(node, s);
        }
        i >>= 1;
        size = (size + 1) / 2;
    }
    if (used != path.siblings.size()) return VerifyResult::reject("path-too-long");
    if (node != commitment.root) return VerifyResult::reject("root-mismatch");
    return VerifyResult::ok();
}

HashWireCommitment hashwire_commit(uint32_t k, const Digest& seed) {
    if (k > HASHWIRE_MAX_K) fail(ErrorCode::InvalidArgument, "k exceeds iteration cap");
    return {sha256_iterate(seed, k), HASHWIRE_MAX_K};
}

Digest hashwire_prove(uint32_t k, uint32_t threshold, const Digest& seed) {
    if (k > HASHWIRE_MAX_K) fail(ErrorCode::InvalidArgument, "k exceeds iteration cap");
    if (threshold > k) fail(ErrorCode::ThresholdExceedsValue, "threshold-exceeds-value");
    return sha256_iterate(seed, k - threshold);
}

VerifyResult hashwire_verify(const HashWireCommitment& commitment, uint32_t threshold,
                             const Digest& proof) {
    if (threshold > commitment.max_iterations) {
        fail(ErrorCode::InvalidArgument, "threshold exceeds iteration cap");
    }
    if (sha256_iterate(proof, threshold) != commitment.commitment) {
        return VerifyResult::reject("chain-mismatch");
    }
    return VerifyResult::ok();
}

}  // namespace sdvc::commit
