#ifndef RSDEEP_POLY_HPP
#define RSDEEP_POLY_HPP

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsdeep/field.hpp"

namespace rsdeep {

/// Dense polynomial over one field level, constant term first, no trailing
/// zeros. The zero polynomial has degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  Poly(FieldCtx ctx, std::vector<Index> coeffs);

  static Poly x(const FieldCtx& ctx);
  static Poly constant(const FieldCtx& ctx, Index c);
  static Poly monomial(const FieldCtx& ctx, Index c, unsigned deg);
  /// Product of (x + a) over the given elements.
  static Poly from_linear_factors(const FieldCtx& ctx, std::span<const Index> shifts);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<Index>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Index coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Index leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Index eval(Index x) const;
  FieldElem eval(const FieldElem& x) const;
  /// Evaluates at an element of a field having ctx() as a tower ancestor.
  Index eval_in(const FieldCtx& ext, Index x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(Index s) const;
  Poly monic() const;
  Poly derivative() const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

 private:
  void trim();
  void same_ctx(const Poly& o) const;
  FieldCtx ctx_;
  std::vector<Index> c_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, u64 exp, const Poly& mod);

/// Rabin's test: f of degree d over F_Q is irreducible iff x^(Q^d) = x mod f and
/// gcd(x^(Q^(d/r)) - x, f) = 1 for every prime r | d.
bool is_irreducible(const Poly& f);

namespace detail {
// Odometer over (c_0, ..., c_{d-1}) with c_0 most significant.
bool next_candidate(std::vector<Index>& lower, Index base_order);
}  // namespace detail

/// Walks monic irreducibles of degree d in find_irreducible order and returns
/// the first one accepted by `keep`; gives up after `limit` irreducibles.
template <class Pred>
std::optional<Poly> find_irreducible_if(const FieldCtx& ctx, unsigned d, Pred keep, u64 limit) {
  std::vector<Index> lower(d, 0);
  if (d >= 2) lower[0] = 1;  // c_0 = 0 means x divides the candidate
  u64 seen = 0;
  do {
    std::vector<Index> c = lower;
    c.push_back(1);
    Poly candidate(ctx, std::move(c));
    if (!is_irreducible(candidate)) continue;
    if (keep(candidate)) return candidate;
    if (++seen >= limit) break;
  } while (detail::next_candidate(lower, ctx.order()));
  return std::nullopt;
}

}  // namespace rsdeep

#endif  // RSDEEP_POLY_HPP
