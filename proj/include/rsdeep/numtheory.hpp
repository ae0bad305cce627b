#ifndef RSDEEP_NUMTHEORY_HPP
#define RSDEEP_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rsdeep {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<u64> invmod(u64 a, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

struct PrimePower {
  u64 prime;
  unsigned exponent;
};
std::optional<PrimePower> as_prime_power(u64 n);

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
/// Trial division up to 10^6, Pollard-Brent rho for the remaining cofactor.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Overflow-checked helpers; nullopt on overflow of u64.
std::optional<u64> checked_mul(u64 a, u64 b);
std::optional<u64> checked_pow(u64 base, unsigned exp);

/// The i-th prime power in increasing order, i >= 1: 2, 3, 4, 5, 7, 8, 9, 11, ...
u64 nth_prime_power(u64 i);

/// Least prime power >= n.
u64 next_prime_power(u64 n);

mpz_class binomial(u64 n, u64 k);
mpz_class factorial(u64 n);

/// ceil(sqrt(x)) for x >= 0.
mpz_class ceil_sqrt(const mpz_class& x);

/// Floor / ceiling of a rational.
mpz_class floor_q(const mpq_class& x);
mpz_class ceil_q(const mpq_class& x);

/// Parses "3/4", "0.75", "2" into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace rsdeep

#endif  // RSDEEP_NUMTHEORY_HPP
