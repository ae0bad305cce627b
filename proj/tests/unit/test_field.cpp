#include <random>

#include "doctest.h"
#include "rsdeep/error.hpp"
#include "rsdeep/poly.hpp"

using namespace rsdeep;

namespace {

void check_axioms(const FieldCtx& f) {
  const Index q = f.order();
  for (Index a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (Index b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(f.add(a, b), b) == a);
    }
  }
}

// Rank over F_p of vectors given as base-p digit strings of canonical indices.
unsigned rank_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
  unsigned rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const u64 inv = *invmod(rows[rank][col], p);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const u64 m = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = (rows[r][c] + p * p - m * rows[rank][c] % p) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<u64> digits(Index v, u64 p, unsigned n) {
  std::vector<u64> d(n);
  for (unsigned i = 0; i < n; ++i, v /= p) d[i] = v % p;
  return d;
}

}  // namespace

TEST_CASE("prime field basics") {
  FieldCtx f5 = make_prime_field(5);
  CHECK(f5.order() == 5);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.from_int(-1) == 4);
  CHECK(find_generator(f5).index() == 2);
  CHECK_THROWS_AS(make_prime_field(4), Error);
  CHECK_THROWS_AS(f5.inv(0), Error);
  check_axioms(f5);
}

TEST_CASE("x^2 + x + 1 over F_5 has no roots and gives F_25") {
  FieldCtx f5 = make_prime_field(5);
  Poly m(f5, {1, 1, 1});
  for (Index a = 0; a < 5; ++a) CHECK(m.eval(a) != 0);
  CHECK(is_irreducible(m));
  FieldCtx f25 = extend(f5, m);
  CHECK(f25.order() == 25);
  // alpha^2 = -alpha - 1
  const Index alpha = f25.gen().index();
  CHECK(alpha == 5);
  CHECK(f25.mul(alpha, alpha) == f25.from_coefficients(std::vector<Index>{4, 4}));
  check_axioms(f25);
}

TEST_CASE("find_irreducible canonical order") {
  CHECK(find_irreducible(make_prime_field(3), 2).coeffs() == std::vector<Index>{1, 0, 1});
  FieldCtx f2 = make_prime_field(2);
  CHECK(find_irreducible(f2, 2).coeffs() == std::vector<Index>{1, 1, 1});
  // c_0 = 1 first, then (c_1, c_2) = (0, 0) gives x^3 + 1 = (x + 1)(x^2 + x + 1), then x^3 + x^2 + 1
  CHECK(find_irreducible(f2, 3).coeffs() == std::vector<Index>{1, 0, 1, 1});
  CHECK(find_irreducible(f2, 1).coeffs() == std::vector<Index>{0, 1});
  CHECK_THROWS_AS(extend(f2, Poly(f2, {1, 0, 1})), Error);
}

TEST_CASE("small generators") {
  FieldCtx f4 = standard_field(4);
  CHECK(find_generator(f4).index() == 2);
  for (u64 q : {8, 9, 16, 25, 27, 49, 81}) {
    FieldCtx f = standard_field(q);
    FieldElem g = find_generator(f);
    CHECK(multiplicative_order(g) == q - 1);
    for (Index s = 1; s < g.index(); ++s) CHECK_FALSE(is_generator(f.elem(s)));
  }
}

TEST_CASE("axioms and associativity on towers") {
  FieldCtx f9 = standard_field(9);
  FieldCtx f81 = standard_extension(f9, 2);
  check_axioms(f9);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5000; ++i) {
    Index a = rng() % 81, b = rng() % 81, c = rng() % 81;
    CHECK(f81.mul(f81.mul(a, b), c) == f81.mul(a, f81.mul(b, c)));
    CHECK(f81.mul(a, f81.add(b, c)) == f81.add(f81.mul(a, b), f81.mul(a, c)));
  }
  FieldCtx f2 = make_prime_field(2);
  FieldCtx f16 = standard_extension(standard_extension(f2, 2), 2);
  check_axioms(f16);
}

TEST_CASE("embedding keeps indices") {
  FieldCtx f9 = standard_field(9);
  FieldCtx f81 = standard_extension(f9, 2);
  for (Index a = 0; a < 9; ++a)
    for (Index b = 0; b < 9; ++b) {
      CHECK(f81.mul(a, b) == f9.mul(a, b));
      CHECK(f81.add(a, b) == f9.add(a, b));
    }
  CHECK(f81.embed(f9.elem(7)).index() == 7);
  const auto& sub = f81.subfield_indices(9);
  REQUIRE(sub.size() == 9);
  for (Index i = 0; i < 9; ++i) CHECK(sub[i] == i);
  CHECK(f81.subfield_indices(3).size() == 3);
}

TEST_CASE("min_poly_degree matches a linear-dependence oracle over F_3") {
  FieldCtx f9 = standard_field(9);
  FieldCtx f81 = standard_extension(f9, 2);
  for (Index e = 0; e < 81; ++e) {
    // least d with 1, e, ..., e^d dependent over F_3
    std::vector<std::vector<u64>> rows;
    Index pw = 1;
    unsigned d = 0;
    for (;;) {
      rows.push_back(digits(pw, 3, 4));
      if (rank_mod_p(rows, 3) < rows.size()) break;
      pw = f81.mul(pw, e);
      ++d;
    }
    CHECK_MESSAGE(min_poly_degree(f81.elem(e), 3) == d, e);
    CHECK(min_poly_degree(f81.elem(e), f9) == d / std::gcd(d, 2u));
  }
  CHECK_THROWS_AS(min_poly_degree(f81.elem(5), 4), Error);
}

TEST_CASE("context mismatch") {
  FieldCtx a = standard_field(9), b = standard_field(9);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(a.elem(1) + b.elem(1), Error);
  CHECK_THROWS_AS(a.elem(9), Error);
}

TEST_CASE("field elem operators") {
  FieldCtx f = standard_field(27);
  for (Index i = 1; i < 27; ++i) {
    FieldElem x = f.elem(i);
    CHECK((x / x).is_one());
    CHECK((x * x.inv()).is_one());
    CHECK(x.pow(26).is_one());
    CHECK((x - x).is_zero());
    CHECK(field_inv(x) == x.inv());
  }
}
