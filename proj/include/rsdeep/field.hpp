#ifndef RSDEEP_FIELD_HPP
#define RSDEEP_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsdeep/numtheory.hpp"

namespace rsdeep {

/// Canonical index of a field element: sum of index(c_j) * base_order^j over
/// the coefficient vector. Index 0 is zero, index 1 is one, and an element of
/// a tower ancestor keeps its index when embedded.
using Index = std::uint64_t;

class Poly;
class FieldElem;

namespace detail {
struct FieldImpl;
}

/// Immutable handle to one level of a finite-field tower
/// F_p -> F_{p^a} -> ... Copies share the same level; two handles compare
/// equal only when they refer to the same constructed level.
class FieldCtx {
 public:
  static FieldCtx prime(u64 p);
  static FieldCtx extend(const FieldCtx& base, const Poly& modulus);

  u64 characteristic() const;
  Index order() const;
  /// Degree over the immediate base (1 for a prime field).
  unsigned degree() const;
  unsigned absolute_degree() const;
  bool is_prime_field() const;
  FieldCtx base() const;
  Poly modulus() const;
  /// Levels from the prime field up to this one.
  std::vector<FieldCtx> tower() const;
  /// True when `other` is this level or one of its bases.
  bool has_ancestor(const FieldCtx& other) const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem elem(Index i) const;
  /// Class of x in base[x]/(modulus).
  FieldElem gen() const;
  FieldElem embed(const FieldElem& sub) const;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index mul(Index a, Index b) const;
  Index inv(Index a) const;
  Index pow(Index a, u64 e) const;
  /// Image of an integer in the prime subfield.
  Index from_int(long long v) const;

  std::vector<Index> coefficients(Index a) const;
  Index from_coefficients(std::span<const Index> coeffs) const;

  /// Indices of {e : e^sub_order = e}, ascending; computed once per order.
  const std::vector<Index>& subfield_indices(Index sub_order) const;

  std::string describe() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) { return a.impl_ == b.impl_; }

 private:
  explicit FieldCtx(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
};

class FieldElem {
 public:
  FieldElem(FieldCtx ctx, Index index);

  const FieldCtx& ctx() const { return ctx_; }
  Index index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  FieldElem inv() const;
  FieldElem pow(u64 e) const;
  std::vector<Index> coefficients() const { return ctx_.coefficients(index_); }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.ctx_ == b.ctx_ && a.index_ == b.index_;
  }

 private:
  void same_ctx(const FieldElem& o) const;
  FieldCtx ctx_;
  Index index_;
};

FieldCtx make_prime_field(u64 p);
FieldCtx extend(const FieldCtx& base, const Poly& modulus);
/// F_q for a prime power q: the prime field, extended once by
/// find_irreducible when q is not prime.
FieldCtx standard_field(u64 q);
/// base[x]/(find_irreducible(base, d)).
FieldCtx standard_extension(const FieldCtx& base, unsigned d);
FieldElem field_inv(const FieldElem& e);

/// First monic irreducible of degree d over ctx, ordered lexicographically by
/// (c_0, c_1, ..., c_{d-1}) with coefficients compared by canonical index.
Poly find_irreducible(const FieldCtx& ctx, unsigned d);

/// Degree of the minimal polynomial of e over the subfield of order
/// |sub| (identified by order). Throws InvalidArgument when |ctx(e)| is not a
/// power of |sub|.
unsigned min_poly_degree(const FieldElem& e, const FieldCtx& sub);
unsigned min_poly_degree(const FieldElem& e, Index sub_order);

/// Multiplicative order of a nonzero element.
u64 multiplicative_order(const FieldElem& e);

/// Generator of ctx^* with the smallest canonical index.
FieldElem find_generator(const FieldCtx& ctx);
bool is_generator(const FieldElem& e);

}  // namespace rsdeep

#endif  // RSDEEP_FIELD_HPP
