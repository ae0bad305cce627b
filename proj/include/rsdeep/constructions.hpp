#ifndef RSDEEP_CONSTRUCTIONS_HPP
#define RSDEEP_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rsdeep/deep_ball.hpp"

namespace rsdeep {

enum class ConstructionMode { Thm12, Thm13, Composite };
const char* mode_name(ConstructionMode m);

// Which h-solve is used for the rate-1 family: g >= ceil((4/eps + 2)(h + 1))
// keeps the counting bound's hypothesis, the 2/eps variant is the looser one
// used when picking parameters for the q^i claim.
enum class HForm { FourOverEps, TwoOverEps };
const char* hform_name(HForm f);

/// One checked inequality by name.
struct Inequality {
  std::string name;
  bool holds = false;
};

/// Exact value or rational enclosure of epsilon. For the positive-rate family
/// eps = 1 / ln q is irrational and only the enclosure is stored.
struct EpsilonValue {
  std::string definition;
  mpq_class lo, hi;
  bool exact() const { return lo == hi; }
};

struct ConstructionRecord {
  ConstructionMode mode = ConstructionMode::Thm12;
  u64 i = 0;
  mpq_class c;    // thm12, composite
  mpq_class rho;  // thm13
  u64 q = 0;
  u64 q1 = 0;
  unsigned m = 1;
  unsigned h = 0;
  u64 g = 0;       // thm13: ball radius parameter; otherwise floor(cq)
  u64 g1 = 0, g2 = 0;
  u64 factor_count = 0;  // linear factors behind the center
  u64 k = 0;
  u64 radius = 0;
  EpsilonValue eps;
  std::optional<HForm> h_form;
  bool strict = true;
  std::vector<Inequality> inequalities;
  std::vector<std::string> waivers;
  unsigned alpha_degree = 0;  // min_poly_degree(alpha, F_{q1}), 0 when not applicable
  mpq_class bound;
  bool bound_ge_q_pow_i = false;  // thm13
  // Filled in once fields are built; empty for parameter-only records.
  std::optional<FieldCtx> ext;
  std::optional<Poly> f;
  std::optional<Word> center;
};

/// Parameter selection only (no fields built); throws ConstraintUnsatisfiable.
ConstructionRecord thm12_parameters(u64 i, const mpq_class& c);
ConstructionRecord thm13_parameters(u64 i, const mpq_class& rho, HForm form);

struct ConstructOptions {
  bool emit_center = true;
  unsigned threads = 1;
};

ConstructionRecord construct_thm12(u64 i, const mpq_class& c, const ConstructOptions& opt = {});
ConstructionRecord construct_thm13(u64 i, const mpq_class& rho, HForm form = HForm::TwoOverEps,
                                   const ConstructOptions& opt = {});

struct CompositeOptions {
  bool strict = false;
  std::optional<mpq_class> eps;  // searched when absent
  ConstructOptions build;
};
ConstructionRecord construct_composite(u64 q1, unsigned m, const mpq_class& c, unsigned h,
                                       const CompositeOptions& opt = {});

/// Smallest i (starting at `from`) whose parameters are feasible.
u64 smallest_feasible_thm12(const mpq_class& c, u64 from = 1, u64 limit = 100000);
u64 smallest_feasible_thm13(const mpq_class& rho, HForm form, u64 from = 1, u64 limit = 1000);

/// Recomputes every coordinate from (f, h_poly, k) without going through
/// build_center and compares.
bool center_matches(const ConstructionRecord& rec);

/// Least prime power n with n > x^e for rational x > 0, e > 0, decided with
/// integers only.
u64 least_prime_power_above(const mpq_class& x, const mpq_class& e);

/// Least integer n >= 0 with n^e >= x, i.e. ceil(x^(1/e)) for rational e > 0.
mpz_class ceil_rational_root(const mpz_class& x, const mpq_class& e);

}  // namespace rsdeep

#endif  // RSDEEP_CONSTRUCTIONS_HPP
