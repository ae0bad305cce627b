#include <random>

#include "doctest.h"
#include "rsdeep/error.hpp"
#include "rsdeep/linsolve.hpp"

using namespace rsdeep;

TEST_CASE("crt_combine mod 24") {
  for (u64 x = 0; x < 24; ++x) CHECK(crt_combine({x % 8, x % 3}, {8, 3}) == x);
  CHECK_THROWS_AS(crt_combine({1, 1}, {4, 6}), Error);
}

TEST_CASE("random unimodular systems are solved exactly") {
  std::mt19937_64 rng(21);
  for (u64 modulus : {48ULL, 24ULL, 97ULL, 1ULL << 20, 2ULL * 2 * 3 * 5 * 7 * 7 * 11}) {
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 2 + rng() % 6;
      std::vector<u64> x(n);
      for (auto& v : x) v = rng() % modulus;
      // identity plus random lower and upper unit-triangular mixing keeps det = 1
      std::vector<std::vector<u64>> a(n, std::vector<u64>(n, 0));
      for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
      for (int k = 0; k < 20; ++k) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        const u64 m = rng() % modulus;
        for (std::size_t c = 0; c < n; ++c) a[i][c] = (a[i][c] + mulmod(m, a[j][c], modulus)) % modulus;
      }
      // a few redundant rows
      for (int extra = 0; extra < 3; ++extra) {
        std::vector<u64> row(n, 0);
        const std::size_t j = rng() % n;
        for (std::size_t c = 0; c < n; ++c) row[c] = mulmod(3, a[j][c], modulus);
        a.push_back(row);
      }
      std::vector<u64> b(a.size(), 0);
      for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) b[r] = (b[r] + mulmod(a[r][c], x[c], modulus)) % modulus;
      CHECK(solve_linear_mod(a, b, n, modulus) == x);
    }
  }
}

TEST_CASE("singular and inconsistent systems") {
  // 2x = 2 mod 4 has two solutions
  CHECK_THROWS_AS(solve_linear_mod({{2}}, {2}, 1, 4), Error);
  try {
    solve_linear_mod({{1, 1}, {2, 2}}, {1, 2}, 2, 7);
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Singular);
  }
  try {
    solve_linear_mod({{1}, {1}}, {1, 2}, 1, 7);
    FAIL("expected inconsistency");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidArgument);
  }
}

TEST_CASE("mod 48 needs a unit pivot for every prime") {
  // x + y = 5, x + 3y = 9 -> 2y = 4 mod 48 has two solutions mod 16
  CHECK_THROWS_AS(solve_linear_mod({{1, 1}, {1, 3}}, {5, 9}, 2, 48), Error);
  // x + y = 5, x + 2y = 9 -> y = 4, x = 1
  CHECK(solve_linear_mod({{1, 1}, {1, 2}}, {5, 9}, 2, 48) == std::vector<u64>{1, 4});
}
