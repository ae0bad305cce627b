#ifndef RSDEEP_TOOLS_VERIFY_HPP
#define RSDEEP_TOOLS_VERIFY_HPP

#include <cstdint>
#include <ostream>
#include <string>

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t max_order = 81;  // largest field order any check may touch
  std::uint64_t cap = 10'000'000;
  std::uint64_t q = 5;           // base field for the duality suite
  std::uint64_t seed = 0;
};

// Prints one "PASS|FAIL|SKIP <suite> <check>" line per check.
// Returns the number of failures; throws std::invalid_argument on an unknown suite.
int run_verify(const VerifyOptions& opt, std::ostream& out);

#endif
