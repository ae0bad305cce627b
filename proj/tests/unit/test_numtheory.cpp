#include <algorithm>
#include <random>

#include "doctest.h"
#include "rsdeep/error.hpp"
#include "rsdeep/numtheory.hpp"

using namespace rsdeep;

namespace {

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool trial_prime_power(u64 n) {
  if (n < 2) return false;
  u64 p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division below 20000") {
  for (u64 n = 0; n < 20000; ++n) CHECK_MESSAGE(is_prime(n) == trial_prime(n), n);
}

TEST_CASE("is_prime on strong pseudoprimes and large primes") {
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ULL));       // spsp to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));  // spsp to bases up to 23
  CHECK(is_prime(2305843009213693951ULL));    // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL));   // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("as_prime_power") {
  CHECK_FALSE(as_prime_power(1));
  CHECK_FALSE(as_prime_power(12));
  auto pp = as_prime_power(8);
  REQUIRE(pp);
  CHECK(pp->prime == 2);
  CHECK(pp->exponent == 3);
  pp = as_prime_power(1523ULL * 1523ULL);
  REQUIRE(pp);
  CHECK(pp->prime == 1523);
  CHECK(pp->exponent == 2);
}

TEST_CASE("factorize reproduces n from primes") {
  std::mt19937_64 rng(7);
  std::vector<u64> inputs = {1, 2, 48, 24, 531440, 5367999999ULL, 1000003ULL * 1000033ULL, 4294967291ULL * 4294967279ULL};
  for (int i = 0; i < 200; ++i) inputs.push_back(rng() >> (rng() % 40));
  for (u64 n : inputs) {
    if (n == 0) continue;
    u64 back = 1;
    u64 last = 0;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      CHECK(p > last);
      last = p;
      for (unsigned k = 0; k < e; ++k) back *= p;
    }
    CHECK(back == n);
  }
}

TEST_CASE("nth_prime_power matches a direct scan") {
  CHECK(nth_prime_power(1) == 2);
  CHECK(nth_prime_power(3) == 4);
  CHECK(nth_prime_power(4) == 5);
  CHECK(nth_prime_power(10) == 16);
  u64 n = 1;
  for (u64 i = 1; i <= 500; ++i) {
    do ++n;
    while (!trial_prime_power(n));
    CHECK_MESSAGE(nth_prime_power(i) == n, i);
  }
}

TEST_CASE("next_prime_power") {
  CHECK(next_prime_power(531441) == 531441);
  u64 n = 531442;
  while (!trial_prime_power(n)) ++n;
  CHECK(next_prime_power(531442) == n);
  CHECK(next_prime_power(0) == 2);
  CHECK(next_prime_power(10) == 11);
}

TEST_CASE("modular helpers") {
  CHECK(powmod(3, 200, 1000003) == powmod(9, 100, 1000003));
  CHECK(mulmod(~0ULL, ~0ULL, 1000000007ULL) == static_cast<u64>((static_cast<u128>(~0ULL) * ~0ULL) % 1000000007ULL));
  auto inv = invmod(7, 48);
  REQUIRE(inv);
  CHECK(*inv * 7 % 48 == 1);
  CHECK_FALSE(invmod(6, 48));
  CHECK(checked_mul(1ULL << 32, 1ULL << 32) == std::nullopt);
  CHECK(checked_pow(3, 41) == std::nullopt);
  CHECK(checked_pow(3, 40) == 12157665459056928801ULL);
  CHECK(checked_pow(3, 12) == 531441);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(137, 12) == mpz_class("55587257066498976"));
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  for (u64 n = 1; n < 30; ++n)
    for (u64 k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("ceil_sqrt and rounding") {
  for (long v = 0; v < 2000; ++v) {
    mpz_class r = ceil_sqrt(mpz_class(v));
    CHECK(r * r >= v);
    CHECK((r == 0 || (r - 1) * (r - 1) < v));
  }
  CHECK(floor_q(mpq_class(-7, 2)) == -4);
  CHECK(ceil_q(mpq_class(-7, 2)) == -3);
  CHECK(floor_q(mpq_class(7, 2)) == 3);
  CHECK(ceil_q(mpq_class(6, 2)) == 3);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("0.75") == mpq_class(3, 4));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("0.999999") == mpq_class(999999, 1000000));
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}
