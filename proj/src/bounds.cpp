#include "rsdeep/bounds.hpp"

#include "rsdeep/error.hpp"

namespace rsdeep {

namespace {

mpz_class pow_z(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

mpq_class n_formula_any(u64 q, unsigned g, unsigned h) {
  const mpz_class qz(std::to_string(q));
  const mpz_class pairs = binomial(g, 2);
  // q^g - C(g,2) q^(g-1) = q^(g-1) (q - C(g,2)); empty product when g = 0
  mpq_class head = g == 0 ? mpq_class(1) : mpq_class(pow_z(qz, g - 1) * (qz - pairs));
  head /= mpq_class(pow_z(qz, h) - 1);
  const mpz_class tail = (1 + pairs) * pow_z(mpz_class(h) - 1, g) * ceil_sqrt(pow_z(qz, g));
  mpq_class n = (head - tail) / mpq_class(factorial(g));
  n.canonicalize();
  return n;
}

}  // namespace

bool rational_power_le(const mpz_class& base, const mpq_class& exponent, const mpz_class& bound) {
  if (exponent <= 0 || base < 0 || bound < 0) throw Error(Errc::InvalidArgument, "rational_power_le domain");
  const unsigned long num = exponent.get_num().get_ui();
  const unsigned long den = exponent.get_den().get_ui();
  return pow_z(base, num) <= pow_z(bound, den);
}

mpq_class n_formula(u64 q, unsigned g, unsigned h) {
  if (q < 2 || g < 1 || h < 1) throw Error(Errc::InvalidArgument, "n_formula needs q >= 2, g >= 1, h >= 1");
  return n_formula_any(q, g, h);
}

bool n_formula_conditions(u64 q, unsigned g, unsigned h, const mpq_class& eps) {
  if (eps <= 0) throw Error(Errc::InvalidArgument, "epsilon must be positive");
  const mpz_class qz(std::to_string(q));
  if (qz < mpz_class(g) * g) return false;
  if (h >= 2 && !rational_power_le(mpz_class(h - 1), 2 + eps, qz)) return false;
  return mpq_class(g) >= (4 / eps + 2) * (h + 1);
}

mpq_class n_composite_formula(u64 q1, unsigned m, unsigned g1, u64 g2, unsigned h) {
  if (q1 < 2 || m < 2 || h < 1) throw Error(Errc::InvalidArgument, "n_composite_formula needs q1 >= 2, m >= 2, h >= 1");
  auto q = checked_pow(q1, m);
  if (!q) throw Error(Errc::CapExceeded, "q1^m overflows");
  if (g2 > *q - q1) throw Error(Errc::InvalidArgument, "g2 must be <= q - q1");
  mpq_class n = n_formula_any(q1, g1, m * h) * mpq_class(binomial(*q - q1, g2));
  n.canonicalize();
  return n;
}

}  // namespace rsdeep
