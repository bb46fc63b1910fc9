#pragma once

#include <utility>
#include <vector>

#include "sdvc/algebra/curve.hpp"
#include "sdvc/algebra/fields.hpp"

namespace sdvc::algebra {

/// Optimal ate pairing e: G1 x G2 -> GT. GT elements are Fp12 values in the
/// order-r cyclotomic subgroup; they are never serialized.
Fp12 miller_loop(const G1Affine& p, const G2Affine& q);
Fp12 final_exponentiation(const Fp12& f);
Fp12 pairing(const G1Affine& p, const G2Affine& q);

/// Product of pairings: prod e(p_i, q_i), with a single shared final
/// exponentiation.
Fp12 pairing_product(const std::vector<std::pair<G1Affine, G2Affine>>& pairs);

/// a^s for a in GT.
Fp12 gt_exp(const Fp12& a, const Scalar& s);

}  // namespace sdvc::algebra
