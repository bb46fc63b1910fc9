#include "sdvc/group.hpp"

namespace sdvc::algebra {

OpCounters& op_counters() {
    thread_local OpCounters counters;
    return counters;
}

GroupElement GroupElement::generator(GroupTag tag) {
    switch (tag) {
        case GroupTag::G1:
            return from_g1(G1::from_affine(g1_generator()));
        case GroupTag::G2:
            return from_g2(G2::from_affine(g2_generator()));
        case GroupTag::GT:
            return from_gt(pairing(g1_generator(), g2_generator()));
    }
    fail(ErrorCode::InvalidArgument, "bad group tag");
}

GroupElement GroupElement::identity(GroupTag tag) {
    GroupElement e;
    e.tag_ = tag;
    return e;
}

bool GroupElement::is_identity() const {
    switch (tag_) {
        case GroupTag::G1:
            return g1_.is_identity();
        case GroupTag::G2:
            return g2_.is_identity();
        case GroupTag::GT:
            return gt_.is_one();
    }
    return false;
}

GroupElement GroupElement::add(const GroupElement& o) const {
    if (tag_ != o.tag_) fail(ErrorCode::InvalidArgument, "mixed group tags in add");
    GroupElement r = *this;
    switch (tag_) {
        case GroupTag::G1:
            op_counters().add_g1++;
            r.g1_ = g1_.add(o.g1_);
            break;
        case GroupTag::G2:
            op_counters().add_g2++;
            r.g2_ = g2_.add(o.g2_);
            break;
        case GroupTag::GT:
            op_counters().mul_gt++;
            r.gt_ = gt_.mul(o.gt_);
            break;
    }
    return r;
}

GroupElement GroupElement::mul(const Scalar& s) const {
    GroupElement r = *this;
    switch (tag_) {
        case GroupTag::G1:
            op_counters().mul_g1++;
            r.g1_ = mul_scalar(g1_, s);
            break;
        case GroupTag::G2:
            op_counters().mul_g2++;
            r.g2_ = mul_scalar(g2_, s);
            break;
        case GroupTag::GT:
            op_counters().exp_gt++;
            r.gt_ = gt_exp(gt_, s);
            break;
    }
    return r;
}

GroupElement GroupElement::neg() const {
    GroupElement r = *this;
    switch (tag_) {
        case GroupTag::G1:
            r.g1_ = g1_.neg();
            break;
        case GroupTag::G2:
            r.g2_ = g2_.neg();
            break;
        case GroupTag::GT:
            r.gt_ = gt_.conjugate();  // inverse in the cyclotomic subgroup
            break;
    }
    return r;
}

bool GroupElement::operator==(const GroupElement& o) const {
    if (tag_ != o.tag_) return false;
    switch (tag_) {
        case GroupTag::G1:
            return g1_.equals(o.g1_);
        case GroupTag::G2:
            return g2_.equals(o.g2_);
        case GroupTag::GT:
            return gt_ == o.gt_;
    }
    return false;
}

Bytes GroupElement::encode() const {
    switch (tag_) {
        case GroupTag::G1:
            return g1_to_bytes(g1_.to_affine());
        case GroupTag::G2:
            return g2_to_bytes(g2_.to_affine());
        case GroupTag::GT:
            fail(ErrorCode::InvalidArgument, "GT elements are not serializable");
    }
    return {};
}

std::optional<GroupElement> GroupElement::decode(GroupTag tag, BytesView bytes) {
    switch (tag) {
        case GroupTag::G1: {
            auto p = g1_from_bytes(bytes);
            if (!p) return std::nullopt;
            return from_g1(G1::from_affine(*p));
        }
        case GroupTag::G2: {
            auto p = g2_from_bytes(bytes);
            if (!p) return std::nullopt;
            return from_g2(G2::from_affine(*p));
        }
        case GroupTag::GT:
            return std::nullopt;
    }
    return std::nullopt;
}

size_t GroupElement::encoded_size(GroupTag tag) {
    switch (tag) {
        case GroupTag::G1:
            return 48;
        case GroupTag::G2:
            return 96;
        default:
            fail(ErrorCode::InvalidArgument, "GT elements are not serializable");
    }
}

GroupElement multi_scalar_mul(std::span<const GroupElement> bases,
                              std::span<const Scalar> scalars) {
    if (bases.empty() || bases.size() != scalars.size()) {
        fail(ErrorCode::InvalidArgument, "MSM needs equal-length non-empty inputs");
    }
    GroupTag tag = bases[0].tag();
    for (const auto& b : bases) {
        if (b.tag() != tag) fail(ErrorCode::InvalidArgument, "mixed group tags in MSM");
    }
    std::vector<Scalar> sc(scalars.begin(), scalars.end());
    switch (tag) {
        case GroupTag::G1: {
            op_counters().msm_g1.push_back(static_cast<uint32_t>(bases.size()));
            std::vector<G1> pts;
            pts.reserve(bases.size());
            for (const auto& b : bases) pts.push_back(b.g1());
            return GroupElement::from_g1(msm(pts, sc));
        }
        case GroupTag::G2: {
            op_counters().msm_g2.push_back(static_cast<uint32_t>(bases.size()));
            std::vector<G2> pts;
            pts.reserve(bases.size());
            for (const auto& b : bases) pts.push_back(b.g2());
            return GroupElement::from_g2(msm(pts, sc));
        }
        case GroupTag::GT: {
            Fp12 acc = Fp12::one();
            for (size_t i = 0; i < bases.size(); ++i) {
                op_counters().exp_gt++;
                acc = acc.mul(gt_exp(bases[i].gt(), sc[i]));
            }
            return GroupElement::from_gt(acc);
        }
    }
    fail(ErrorCode::InvalidArgument, "bad group tag");
}

GroupElement pairing_map(const GroupElement& a, const GroupElement& b) {
    if (a.tag() != GroupTag::G1 || b.tag() != GroupTag::G2) {
        fail(ErrorCode::InvalidArgument, "pairing expects (G1, G2)");
    }
    op_counters().pairings++;
    return GroupElement::from_gt(pairing(a.g1().to_affine(), b.g2().to_affine()));
}

bool pairing_product_is_identity(
    const std::vector<std::pair<GroupElement, GroupElement>>& terms) {
    std::vector<std::pair<G1Affine, G2Affine>> pairs;
    pairs.reserve(terms.size());
    for (const auto& [a, b] : terms) {
        if (a.tag() != GroupTag::G1 || b.tag() != GroupTag::G2) {
            fail(ErrorCode::InvalidArgument, "pairing expects (G1, G2)");
        }
        op_counters().pairings++;
        pairs.emplace_back(a.g1().to_affine(), b.g2().to_affine());
    }
    return pairing_product(pairs).is_one();
}

GroupElement sample_g2(RandomSource& rng) {
    op_counters().rand_g2++;
    Scalar s = Scalar::random_nonzero(rng);
    return GroupElement::from_g2(mul_scalar(G2::from_affine(g2_generator()), s));
}

GroupElement sample_g1(RandomSource& rng) {
    Scalar s = Scalar::random_nonzero(rng);
    return GroupElement::from_g1(mul_scalar(G1::from_affine(g1_generator()), s));
}

}  // namespace sdvc::algebra
