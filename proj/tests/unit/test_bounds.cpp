#include "doctest.h"
#include "rsdeep/bounds.hpp"
#include "rsdeep/error.hpp"

using namespace rsdeep;

// Expected values computed separately with Python's fractions module.

TEST_CASE("n_formula small case by hand") {
  // (1/3!)((125 - 3*25)/24 - 4 * 1 * ceil(sqrt(125)))
  CHECK(n_formula(5, 3, 2) == mpq_class(-551, 72));
}

TEST_CASE("n_formula reference values") {
  CHECK(n_formula(137, 12, 2) == mpq_class(mpz_class("22656062186530799981755519"), mpz_class("8989902028800")));
  CHECK(n_formula(47, 10, 2) == mpq_class(mpz_class("1107483416267279"), mpz_class("4006195200")));
  CHECK(n_formula(531457, 10, 3) ==
        mpq_class(mpz_class("449349723068302935491332976361843108615963361574531052277"),
                  mpz_class("136178152075335779942400")));
  CHECK_THROWS_AS(n_formula(137, 0, 2), Error);
}

TEST_CASE("ceil(sqrt(q^g)) only lowers the bound") {
  // for even g the square root is exact; for odd g the value sits below the real-valued formula
  const mpq_class even = n_formula(7, 4, 2);
  const mpq_class real_tail_even = mpq_class(1 + 6) * 1 * 49;
  CHECK(even == (mpq_class(7 * 7 * 7 * (7 - 6)) / 48 - real_tail_even) / 24);
  CHECK(n_formula(11, 3, 2) < (mpq_class(11 * 11 * (11 - 3)) / 120 - 4 * 36.48) / 6);
}

TEST_CASE("composite formula") {
  // N over F_3 with g1 = 1, degree m h = 4, times C(6, 3)
  CHECK(n_composite_formula(3, 2, 1, 3, 2) == mpq_class(-477, 4));
  CHECK_THROWS_AS(n_composite_formula(3, 2, 1, 7, 2), Error);
}

TEST_CASE("rational_power_le") {
  CHECK(rational_power_le(3, mpq_class(6), 729));
  CHECK_FALSE(rational_power_le(3, mpq_class(6), 728));
  CHECK(rational_power_le(4, mpq_class(3, 2), 8));
  CHECK_FALSE(rational_power_le(4, mpq_class(3, 2), 7));
  CHECK(rational_power_le(0, mpq_class(5, 3), 0));
  CHECK_THROWS_AS(rational_power_le(2, mpq_class(0), 5), Error);
}

TEST_CASE("n_formula_conditions") {
  // q >= max(g^2, (h-1)^(2+eps)), g >= (4/eps + 2)(h + 1)
  CHECK(n_formula_conditions(10000, 9, 2, mpq_class(4)));  // g >= 3 * 3
  CHECK_FALSE(n_formula_conditions(10000, 8, 2, mpq_class(4)));
  CHECK_FALSE(n_formula_conditions(80, 9, 2, mpq_class(4)));  // g^2 = 81 > q
  CHECK(n_formula_conditions(81, 9, 2, mpq_class(4)));
  CHECK_THROWS_AS(n_formula_conditions(81, 9, 2, mpq_class(0)), Error);
}
