#include "sdvc/group.hpp"
#include "sdvc/hash.hpp"

namespace sdvc::algebra {

namespace {

// Expand (dst, seed, index, ctr) to a uniform-ish field element by hashing
// two counters and reducing 64 bytes mod p.
Fp field_candidate(std::string_view dst, BytesView seed, uint32_t index, uint32_t ctr) {
    Bytes wide;
    for (uint32_t half = 0; half < 2; ++half) {
        Bytes msg;
        append_lp(msg, to_bytes(dst));
        append_lp(msg, seed);
        append_u32be(msg, index);
        append_u32be(msg, ctr);
        append_u32be(msg, half);
        Digest d = sha256(msg);
        append(wide, d);
    }
    mpz_class a;
    mpz_import(a.get_mpz_t(), wide.size(), 1, 1, 0, 0, wide.data());
    return Fp::from_mpz(a);
}

// Simplified try-and-increment map to the prime-order subgroup of G1
// (suite "TAI-SHA256-BLS12381G1"): walk x-candidates until one lies on the
// curve, fix the y sign deterministically, then clear the cofactor. Nobody
// learns a discrete log because x comes out of a hash.
G1 map_to_g1(std::string_view dst, BytesView seed, uint32_t index) {
    for (uint32_t ctr = 0;; ++ctr) {
        Fp x = field_candidate(dst, seed, index, ctr);
        auto y = x.sqr().mul(x).add(fctx().curve_b).sqrt();
        if (!y) continue;
        if (y->lex_larger()) *y = y->neg();
        G1 p = G1::from_affine({x, *y, false});
        p = mul_mpz(p, fctx().cofactor_g1);
        if (p.is_identity()) continue;
        return p;
    }
}

}  // namespace

std::vector<G1> hash_to_g1_vector(std::string_view dst, BytesView seed, size_t count) {
    if (count == 0) fail(ErrorCode::InvalidArgument, "hash_to_group needs count >= 1");
    std::vector<G1> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        out.push_back(map_to_g1(dst, seed, static_cast<uint32_t>(i)));
    }
    return out;
}

std::vector<GroupElement> hash_to_group_vector(std::string_view dst, BytesView seed,
                                               size_t count) {
    std::vector<GroupElement> out;
    out.reserve(count);
    for (const auto& p : hash_to_g1_vector(dst, seed, count)) {
        out.push_back(GroupElement::from_g1(p));
    }
    return out;
}

}  // namespace sdvc::algebra
