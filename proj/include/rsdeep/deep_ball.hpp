#ifndef RSDEEP_DEEP_BALL_HPP
#define RSDEEP_DEEP_BALL_HPP

#include <compare>
#include <optional>
#include <vector>

#include "rsdeep/rs_code.hpp"

namespace rsdeep {

/// A set of distinct elements a of F_q standing for the product of (alpha + a).
/// Stored sorted by canonical index.
class FactorSet {
 public:
  FactorSet() = default;
  explicit FactorSet(std::vector<Index> elements);

  const std::vector<Index>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  friend auto operator<=>(const FactorSet&, const FactorSet&) = default;
  friend bool operator==(const FactorSet&, const FactorSet&) = default;

 private:
  std::vector<Index> elems_;
};

/// Parameters of the received word u_f for the code RS_q[q, g - h]:
/// `ext` is F_{q^h} = F_q[x]/(h(x)), `f` a nonzero polynomial over F_q of
/// degree < h, and g the number of distinct linear factors.
class DeepBallParams {
 public:
  DeepBallParams(FieldCtx ext, Poly f, unsigned g);

  const FieldCtx& ext() const { return ext_; }
  const FieldCtx& field() const { return field_; }
  const Poly& f() const { return f_; }
  Poly h_poly() const { return ext_.modulus(); }
  unsigned g() const { return g_; }
  unsigned h() const { return ext_.degree(); }
  unsigned k() const { return g_ - h(); }
  Index q() const { return field_.order(); }
  std::size_t radius() const { return static_cast<std::size_t>(q() - g_); }
  RSCode code() const { return RSCode(field_, k()); }
  /// f(alpha) in F_{q^h}.
  Index target() const;

 private:
  FieldCtx ext_;
  FieldCtx field_;
  Poly f_;
  unsigned g_;
};

/// Canonical representative (degree < h) of beta in F_{q^h}.
Poly representative(const FieldCtx& ext, Index beta);

/// Index of alpha + a in F_{q^h}.
Index linear_factor(const FieldCtx& ext, Index a);
/// Product of (alpha + a) over the set.
Index factor_product(const FieldCtx& ext, const FactorSet& s);

/// u_f: coordinate at a is f(a) / h(a) + a^(g - h).
Word build_center(const DeepBallParams& params);

/// Codeword polynomial c = x^(g-h) - t, where prod (x + a) = f + t h; it
/// agrees with u_f exactly at the points -a.
/// Throws ProductMismatch unless the product over S equals f(alpha).
Poly factors_to_codeword(const FactorSet& s, const DeepBallParams& params);

/// Inverse correspondence: the factor set when f + (x^(g-h) - c) h splits
/// into g distinct linear factors over F_q, nullopt otherwise.
std::optional<FactorSet> codeword_to_factors(const Poly& c, const DeepBallParams& params);

}  // namespace rsdeep

#endif  // RSDEEP_DEEP_BALL_HPP
