#include "doctest.h"
#include "rsdeep/deep_ball.hpp"
#include "rsdeep/error.hpp"
#include "rsdeep/factor_oracle.hpp"

using namespace rsdeep;

TEST_CASE("build_center coordinate from direct evaluation") {
  FieldCtx f5 = make_prime_field(5);
  FieldCtx ext = extend(f5, Poly(f5, {2, 0, 1}));  // x^2 + 2
  DeepBallParams params(ext, Poly::constant(f5, 1), 3);
  Word u = build_center(params);
  CHECK(u[0] == 3);  // 1/2 + 0^1
  for (Index a = 0; a < 5; ++a) CHECK(u[a] == (f5.inv((a * a + 2) % 5) + a) % 5);
  CHECK(params.k() == 1);
  CHECK(params.radius() == 2);
}

TEST_CASE("parameter validation") {
  FieldCtx f5 = make_prime_field(5);
  FieldCtx ext = extend(f5, Poly(f5, {2, 0, 1}));
  CHECK_THROWS_AS(DeepBallParams(ext, Poly(f5, {0, 0, 1}), 3), Error);  // deg f >= h
  CHECK_THROWS_AS(DeepBallParams(ext, Poly(f5), 3), Error);            // f = 0
  CHECK_THROWS_AS(DeepBallParams(ext, Poly::constant(f5, 1), 2), Error);  // g = h
  CHECK_THROWS_AS(DeepBallParams(ext, Poly::constant(f5, 1), 5), Error);  // g = q
}

TEST_CASE("factors_to_codeword worked example at q=5") {
  FieldCtx f5 = make_prime_field(5);
  FieldCtx ext = extend(f5, Poly(f5, {1, 1, 1}));
  FactorSet s({0, 1, 2});
  // x(x+1)(x+2) = x^3 + 3x^2 + 2x = (x + 2)(x^2 + x + 1) + (4x + 3)
  Poly f(f5, {3, 4});
  CHECK(representative(ext, factor_product(ext, s)) == f);
  DeepBallParams params(ext, f, 3);
  Poly c = factors_to_codeword(s, params);
  // t = x + 2, so t - x^k = 2 and the codeword agreeing with u_f is x^k - t = 3
  CHECK(c == Poly::constant(f5, 3));
  CHECK(distance(encode(params.code(), c), build_center(params)) == params.radius());
  CHECK(distance(encode(params.code(), Poly::constant(f5, 2)), build_center(params)) > params.radius());
  CHECK(codeword_to_factors(c, params) == s);
  CHECK_THROWS_AS(factors_to_codeword(FactorSet({0, 1, 3}), params), Error);
}

TEST_CASE("roundtrip over every 4-subset at q=7, h=2") {
  FieldCtx f7 = make_prime_field(7);
  FieldCtx ext = standard_extension(f7, 2);
  unsigned total = 0;
  for (Index a = 0; a < 7; ++a)
    for (Index b = a + 1; b < 7; ++b)
      for (Index c = b + 1; c < 7; ++c)
        for (Index d = c + 1; d < 7; ++d) {
          FactorSet s({a, b, c, d});
          DeepBallParams params(ext, representative(ext, factor_product(ext, s)), 4);
          Poly cw = factors_to_codeword(s, params);
          CHECK(cw.degree() < static_cast<int>(params.k()));
          CHECK(codeword_to_factors(cw, params) == s);
          CHECK(distance(encode(params.code(), cw), build_center(params)) == params.radius());
          ++total;
        }
  CHECK(total == 35);
}

TEST_CASE("codeword_to_factors rejects a repeated root") {
  // scan q=5, h = x^2 + 2, g = 3 for f with N = f + x h = f + x^3 + 2x having a repeated root
  FieldCtx f5 = make_prime_field(5);
  FieldCtx ext = extend(f5, Poly(f5, {2, 0, 1}));
  bool found = false;
  for (Index c0 = 0; c0 < 5 && !found; ++c0)
    for (Index c1 = 0; c1 < 5 && !found; ++c1) {
      Poly f(f5, {c0, c1});
      if (f.is_zero()) continue;
      Poly n = f + Poly::x(f5) * ext.modulus();
      if (gcd(n, n.derivative()).degree() < 1) continue;
      DeepBallParams params(ext, f, 3);
      CHECK_FALSE(codeword_to_factors(Poly(f5), params));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("distance floor and counting bijection at q=5, h=2") {
  FieldCtx f5 = make_prime_field(5);
  FieldCtx ext = standard_extension(f5, 2);
  for (unsigned g : {3u, 4u}) {
    for (Index beta = 1; beta < 25; ++beta) {
      DeepBallParams params(ext, representative(ext, beta), g);
      const RSCode code = params.code();
      const Word u = build_center(params);
      u64 at = 0;
      for (u64 m = 0; m < message_count(code, kDefaultBruteCap); ++m) {
        Poly c = message_from_index(code, m);
        const std::size_t d = distance(encode(code, c), u);
        CHECK(d >= params.radius());
        const bool split = codeword_to_factors(c, params).has_value();
        CHECK(split == (d == params.radius()));
        at += split;
      }
      CHECK(at == count_factorizations(ext, beta, g));
    }
  }
}
