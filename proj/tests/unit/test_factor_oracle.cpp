#include <map>
#include <sstream>

#include "doctest.h"
#include "rsdeep/error.hpp"
#include "rsdeep/factor_oracle.hpp"

using namespace rsdeep;

namespace {

// Products of every g-subset via bitmask enumeration; independent of the
// library's walkers.
std::map<Index, u64> bitmask_counts(const FieldCtx& ext, unsigned g) {
  const Index q = ext.base().order();
  std::map<Index, u64> out;
  for (u64 mask = 0; mask < (1ULL << q); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != g) continue;
    Index prod = 1;
    for (Index a = 0; a < q; ++a)
      if (mask >> a & 1) prod = ext.mul(prod, ext.add(ext.gen().index(), a));
    ++out[prod];
  }
  return out;
}

}  // namespace

TEST_CASE("alpha^2 + alpha = -1 has exactly one 2-factorization over F_5") {
  FieldCtx f5 = make_prime_field(5);
  FieldCtx ext = extend(f5, Poly(f5, {1, 1, 1}));
  const Index alpha = ext.gen().index();
  const Index beta = ext.add(ext.mul(alpha, alpha), alpha);
  CHECK(beta == 4);
  CHECK(count_factorizations(ext, beta, 2) == 1);
  auto sets = enumerate_factorizations(ext, beta, 2);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == FactorSet({0, 1}));
}

TEST_CASE("all counting routes agree with bitmask enumeration") {
  for (u64 q : {4, 5, 7, 8, 9}) {
    FieldCtx ext = standard_extension(standard_field(q), 2);
    for (unsigned g = 1; g <= 5 && g <= q; ++g) {
      auto oracle = bitmask_counts(ext, g);
      CountTable dp = count_all_dp(ext, g);
      CountTable subsets = count_all_subsets(ext, g);
      CHECK(dp == subsets);
      CHECK(dp.total() == binomial(q, g));
      for (Index beta = 0; beta < ext.order(); ++beta) {
        const u64 want = oracle.count(beta) ? oracle[beta] : 0;
        CHECK(dp[beta] == want);
        if (beta && q <= 7) {
          CHECK(count_factorizations(ext, beta, g) == want);
          CHECK(count_mitm(ext, beta, g) == want);
        }
      }
    }
  }
}

TEST_CASE("enumerated sets are sorted, distinct and multiply to beta") {
  FieldCtx ext = standard_extension(standard_field(7), 2);
  for (Index beta = 1; beta < ext.order(); ++beta) {
    auto sets = enumerate_factorizations(ext, beta, 3);
    CHECK(sets.size() == count_factorizations(ext, beta, 3));
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    for (const auto& s : sets) {
      CHECK(s.size() == 3);
      CHECK(factor_product(ext, s) == beta);
    }
  }
}

TEST_CASE("duality count(beta, q-g) = count(dual(beta), g)") {
  for (u64 q : {5, 7}) {
    FieldCtx ext = standard_extension(standard_field(q), 2);
    for (unsigned g = 1; g <= 3; ++g)
      for (Index beta = 1; beta < ext.order(); ++beta)
        CHECK(count_factorizations(ext, beta, static_cast<unsigned>(q) - g) ==
              count_factorizations(ext, dual_transform(ext.elem(beta)).index(), g));
  }
  FieldCtx ext = standard_extension(standard_field(5), 2);
  CHECK_THROWS_AS(dual_transform(ext.zero()), Error);
}

TEST_CASE("count table text roundtrip") {
  FieldCtx ext = standard_extension(standard_field(5), 2);
  CountTable t = count_all_dp(ext, 3);
  std::stringstream ss;
  t.write(ss);
  CountTable back = CountTable::read(ss);
  CHECK(back == t);
  CHECK(t.zero_targets() + 0 < 24);
  std::stringstream bad("garbage\n");
  CHECK_THROWS_AS(CountTable::read(bad), Error);
}

TEST_CASE("split counts over F_81 / F_9 / F_3") {
  FieldCtx f3 = standard_field(3);
  FieldCtx f9 = standard_extension(f3, 2);
  FieldCtx f81 = standard_extension(f9, 2);
  auto parts = split_table_by_parts(f81, f3, 1, 3);
  auto subsets = split_table_by_subsets(f81, f3, 1, 3);
  CHECK(parts == subsets);
  u64 total = 0;
  for (Index beta = 1; beta < 81; ++beta) {
    CHECK(parts[beta] <= count_factorizations(f81, beta, 4));
    CHECK(count_split_factorizations(f81, f3, beta, 1, 3) == parts[beta]);
    total += parts[beta];
  }
  CHECK(total == 3 * 20);  // C(3,1) * C(6,3)
}

TEST_CASE("split counting rejects an alpha that does not generate") {
  // F_25 over F_5 with F_5 as the subfield: alpha has degree 2 = [F_25 : F_5] but
  // the level below F_q is missing, so use F_16 over F_4 with sub F_2 instead.
  FieldCtx f2 = standard_field(2);
  FieldCtx f4 = standard_extension(f2, 2);
  FieldCtx f16 = standard_extension(f4, 2);
  CHECK(min_poly_degree(f16.gen(), 2) == 4);
  CHECK_NOTHROW(split_table_by_parts(f16, f2, 1, 1));
  FieldCtx f5 = standard_field(5);
  FieldCtx f25 = standard_extension(f5, 2);
  CHECK_THROWS_AS(split_table_by_parts(f25, standard_field(3), 1, 1), Error);
}

TEST_CASE("caps are enforced") {
  FieldCtx ext = standard_extension(standard_field(13), 2);
  CHECK_THROWS_AS(count_factorizations(ext, 1, 6, 100), Error);
  CHECK_THROWS_AS(count_all_dp(ext, 3, 100), Error);
}
