#ifndef RSDEEP_LINSOLVE_HPP
#define RSDEEP_LINSOLVE_HPP

#include <vector>

#include "rsdeep/numtheory.hpp"

namespace rsdeep {

/// Unique solution of rows * x = rhs over Z/modulus. The modulus is split
/// into prime powers; each is handled by Gauss-Jordan elimination with unit
/// pivots and the residues are recombined by CRT.
///
/// Throws Singular when some prime p | modulus leaves a column without a unit
/// pivot (the solution is not unique), and InvalidArgument when the system is
/// inconsistent.
std::vector<u64> solve_linear_mod(std::vector<std::vector<u64>> rows, std::vector<u64> rhs, std::size_t nvars,
                                  u64 modulus);

/// x with x = r_i mod m_i for pairwise coprime moduli.
u64 crt_combine(const std::vector<u64>& residues, const std::vector<u64>& moduli);

}  // namespace rsdeep

#endif  // RSDEEP_LINSOLVE_HPP
