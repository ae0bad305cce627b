#ifndef RSDEEP_BOUNDS_HPP
#define RSDEEP_BOUNDS_HPP

#include <gmpxx.h>

#include "rsdeep/numtheory.hpp"

namespace rsdeep {

/// Lower bound N(g, h) on the number of g-subsets of the factor base whose
/// product hits a fixed nonzero target:
///
///   (1/g!) ((q^g - C(g,2) q^(g-1)) / (q^h - 1) - (1 + C(g,2)) (h-1)^g q^(g/2))
///
/// q^(g/2) is replaced by ceil(sqrt(q^g)), which can only lower the value.
mpq_class n_formula(u64 q, unsigned g, unsigned h);

/// q >= max(g^2, (h-1)^(2+eps)) and g >= (4/eps + 2)(h + 1), decided exactly.
bool n_formula_conditions(u64 q, unsigned g, unsigned h, const mpq_class& eps);

/// N(g1, g2, h, m) for q = q1^m: the g1-term of n_formula over F_{q1} with
/// extension degree m h, times C(q - q1, g2).
mpq_class n_composite_formula(u64 q1, unsigned m, unsigned g1, u64 g2, unsigned h);

/// base^(num/den) <= bound for base, bound >= 0 and num/den > 0, by integer
/// bracketing base^num <= bound^den.
bool rational_power_le(const mpz_class& base, const mpq_class& exponent, const mpz_class& bound);

}  // namespace rsdeep

#endif  // RSDEEP_BOUNDS_HPP
