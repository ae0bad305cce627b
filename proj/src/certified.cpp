#include "rsdeep/certified.hpp"

#include <mpfr.h>

#include "rsdeep/error.hpp"

namespace rsdeep {

namespace {

mpq_class to_q(mpfr_t v) {
  mpq_class r;
  mpfr_get_q(r.get_mpq_t(), v);
  return r;
}

}  // namespace

Enclosure ln_enclosure(u64 n, unsigned bits) {
  if (n < 1) throw Error(Errc::InvalidArgument, "ln of zero");
  mpfr_t x, lo, hi;
  mpfr_inits2(bits, x, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(x, n, MPFR_RNDN);  // exact: n < 2^64 <= 2^bits
  mpfr_log(lo, x, MPFR_RNDD);
  mpfr_log(hi, x, MPFR_RNDU);
  Enclosure e{to_q(lo), to_q(hi)};
  mpfr_clears(x, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return e;
}

}  // namespace rsdeep
