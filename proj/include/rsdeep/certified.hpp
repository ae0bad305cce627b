#ifndef RSDEEP_CERTIFIED_HPP
#define RSDEEP_CERTIFIED_HPP

#include <gmpxx.h>

#include "rsdeep/numtheory.hpp"

namespace rsdeep {

/// Closed interval with exact rational endpoints known to contain a real.
struct Enclosure {
  mpq_class lo, hi;
};

/// Enclosure of ln(n) for n >= 1 from directed-rounding evaluation at
/// `bits` of precision.
Enclosure ln_enclosure(u64 n, unsigned bits);

}  // namespace rsdeep

#endif  // RSDEEP_CERTIFIED_HPP
