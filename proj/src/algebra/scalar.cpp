#include "sdvc/algebra/scalar.hpp"

#include <cassert>
#include <cstring>

#include "sdvc/algebra/fields.hpp"
#include "sdvc/errors.hpp"

namespace sdvc::algebra {

const mpz_class& scalar_order() { return fctx().r_mpz; }

namespace {
Scalar from_reduced_mpz(const mpz_class& a) {
    Scalar s;
    size_t count = 0;
    mpz_export(s.v, &count, -1, sizeof(mp_limb_t), 0, 0, a.get_mpz_t());
    assert(count <= 4);
    return s;
}
}  // namespace

Scalar Scalar::from_u64(uint64_t a) {
    Scalar s;
    s.v[0] = a;
    return s;
}

Scalar Scalar::from_mpz(const mpz_class& a) {
    mpz_class m = a % scalar_order();
    if (m < 0) m += scalar_order();
    return from_reduced_mpz(m);
}

std::optional<Scalar> Scalar::from_bytes(BytesView b) {
    if (b.size() != BYTES) return std::nullopt;
    mpz_class a;
    mpz_import(a.get_mpz_t(), BYTES, 1, 1, 0, 0, b.data());
    if (a >= scalar_order()) return std::nullopt;
    return from_reduced_mpz(a);
}

Scalar Scalar::reduce_bytes(BytesView b) {
    mpz_class a;
    if (!b.empty()) mpz_import(a.get_mpz_t(), b.size(), 1, 1, 0, 0, b.data());
    return from_mpz(a);
}

Scalar Scalar::random(RandomSource& rng) {
    // 64 bytes reduced mod r keeps the sampling bias negligible.
    return reduce_bytes(rng.bytes(64));
}

Scalar Scalar::random_nonzero(RandomSource& rng) {
    for (;;) {
        Scalar s = random(rng);
        if (!s.is_zero()) return s;
    }
}

mpz_class Scalar::to_mpz() const {
    mpz_class a;
    mpz_import(a.get_mpz_t(), 4, -1, sizeof(mp_limb_t), 0, 0, v);
    return a;
}

void Scalar::to_bytes(uint8_t out[BYTES]) const {
    mpz_class a = to_mpz();
    std::memset(out, 0, BYTES);
    size_t bytes = (mpz_sizeinbase(a.get_mpz_t(), 2) + 7) / 8;
    if (a == 0) bytes = 0;
    size_t count = 0;
    mpz_export(out + (BYTES - bytes), &count, 1, 1, 0, 0, a.get_mpz_t());
}

Bytes Scalar::bytes() const {
    Bytes b(BYTES);
    to_bytes(b.data());
    return b;
}

Scalar Scalar::add(const Scalar& o) const { return from_mpz(to_mpz() + o.to_mpz()); }
Scalar Scalar::sub(const Scalar& o) const { return from_mpz(to_mpz() - o.to_mpz()); }
Scalar Scalar::neg() const { return from_mpz(-to_mpz()); }
Scalar Scalar::mul(const Scalar& o) const { return from_mpz(to_mpz() * o.to_mpz()); }

Scalar Scalar::inverse() const {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), to_mpz().get_mpz_t(), scalar_order().get_mpz_t()) == 0) {
        fail(ErrorCode::InvalidArgument, "inverse of zero scalar");
    }
    return from_reduced_mpz(inv);
}

bool Scalar::operator==(const Scalar& o) const { return std::memcmp(v, o.v, sizeof(v)) == 0; }

}  // namespace sdvc::algebra
