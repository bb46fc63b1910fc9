#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sdvc/algebra/curve.hpp"
#include "sdvc/algebra/fields.hpp"
#include "sdvc/algebra/pairing.hpp"
#include "sdvc/algebra/scalar.hpp"
#include "sdvc/bytes.hpp"
#include "sdvc/errors.hpp"
#include "sdvc/rng.hpp"

namespace sdvc::algebra {

enum class GroupTag : uint8_t { G1 = 1, G2 = 2, GT = 3 };

/// Per-thread tally of group operations, used by the benchmark harness and
/// the operation-count tests. Only the counted entry points below update it;
/// point arithmetic inside a multiplication or pairing is not re-counted.
struct OpCounters {
    uint64_t mul_g1 = 0, mul_g2 = 0;
    uint64_t add_g1 = 0, add_g2 = 0;
    uint64_t pairings = 0;
    uint64_t rand_g2 = 0;
    uint64_t exp_gt = 0, mul_gt = 0;
    std::vector<uint32_t> msm_g1;  // one entry per MSM call, holding its size
    std::vector<uint32_t> msm_g2;

    void reset() { *this = OpCounters{}; }
};

OpCounters& op_counters();

/// Tagged element of G1, G2 or GT. The mechanisms pass these through the
/// NIZKP layer so a single proof implementation covers both source groups.
class GroupElement {
public:
    GroupElement() = default;

    static GroupElement from_g1(const G1& p) { return GroupElement(GroupTag::G1, p, {}, {}); }
    static GroupElement from_g2(const G2& p) { return GroupElement(GroupTag::G2, {}, p, {}); }
    static GroupElement from_gt(const Fp12& f) {
        return GroupElement(GroupTag::GT, {}, {}, f);
    }
    static GroupElement generator(GroupTag tag);
    static GroupElement identity(GroupTag tag);

    GroupTag tag() const { return tag_; }
    bool is_identity() const;

    // Counted operations.
    GroupElement add(const GroupElement& o) const;
    GroupElement mul(const Scalar& s) const;
    GroupElement neg() const;

    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    /// Canonical compressed encoding: 48 bytes (G1) or 96 bytes (G2).
    /// GT elements never leave the process and cannot be encoded.
    Bytes encode() const;
    static std::optional<GroupElement> decode(GroupTag tag, BytesView bytes);
    static size_t encoded_size(GroupTag tag);

    const G1& g1() const { return g1_; }
    const G2& g2() const { return g2_; }
    const Fp12& gt() const { return gt_; }

private:
    GroupElement(GroupTag tag, G1 a, G2 b, Fp12 c) : tag_(tag), g1_(a), g2_(b), gt_(c) {}
    GroupTag tag_ = GroupTag::G1;
    G1 g1_ = G1::identity();
    G2 g2_ = G2::identity();
    Fp12 gt_ = Fp12::one();
};

/// Counted MSM: product of bases[i]^scalars[i]. All bases must share one
/// group tag; length mismatch or mixed tags raise invalid-argument.
GroupElement multi_scalar_mul(std::span<const GroupElement> bases,
                              std::span<const Scalar> scalars);

/// Counted pairing of a G1 element and a G2 element.
GroupElement pairing_map(const GroupElement& a, const GroupElement& b);

/// Counted product-of-pairings check: prod e(g1_i, g2_i) == 1. Counts one
/// pairing per term.
bool pairing_product_is_identity(
    const std::vector<std::pair<GroupElement, GroupElement>>& terms);

/// Counted uniform sample from G2* (used by PS signing).
GroupElement sample_g2(RandomSource& rng);
GroupElement sample_g1(RandomSource& rng);

/// Deterministic hash-to-group: `count` independent G1 elements derived from
/// (dst, seed) with unknown discrete logs. The suite identifier names the
/// try-and-increment construction used here.
inline constexpr const char* HASH_TO_GROUP_SUITE = "TAI-SHA256-BLS12381G1";
std::vector<GroupElement> hash_to_group_vector(std::string_view dst, BytesView seed,
                                               size_t count);
std::vector<G1> hash_to_g1_vector(std::string_view dst, BytesView seed, size_t count);

}  // namespace sdvc::algebra
