#ifndef RSDEEP_FACTOR_ORACLE_HPP
#define RSDEEP_FACTOR_ORACLE_HPP

#include <iosfwd>
#include <vector>

#include <gmpxx.h>

#include "rsdeep/deep_ball.hpp"

namespace rsdeep {

// Counting representations of beta in F_{q^h}^* as a product of exactly g
// distinct factors (alpha + a), a in F_q. Every routine takes the extension
// level F_{q^h}; its immediate base is F_q.

inline constexpr u64 kDefaultSubsetCap = 50'000'000;
inline constexpr u64 kDefaultDpMaxOrder = 10'000'000;

/// Subset enumeration; throws CapExceeded when C(q, g) > cap.
u64 count_factorizations(const FieldElem& beta, unsigned g, u64 cap = kDefaultSubsetCap);
u64 count_factorizations(const FieldCtx& ext, Index beta, unsigned g, u64 cap = kDefaultSubsetCap);

/// Every factor set of size g with product beta, in lexicographic order.
std::vector<FactorSet> enumerate_factorizations(const FieldCtx& ext, Index beta, unsigned g,
                                                u64 cap = kDefaultSubsetCap);

/// Meet-in-the-middle count: splits each sorted g-subset into its first
/// floor(g/2) and remaining elements.
u64 count_mitm(const FieldCtx& ext, Index beta, unsigned g, u64 cap = kDefaultSubsetCap);

/// Counts for every target beta (indexed canonically), fixed g.
class CountTable {
 public:
  CountTable(unsigned g, std::vector<mpz_class> counts) : g_(g), counts_(std::move(counts)) {}

  unsigned g() const { return g_; }
  const mpz_class& operator[](Index beta) const { return counts_[beta]; }
  std::size_t size() const { return counts_.size(); }
  const std::vector<mpz_class>& counts() const { return counts_; }

  mpz_class total() const;
  /// Minimum over beta != 0.
  mpz_class min_nonzero_target() const;
  /// Number of beta != 0 with count zero.
  std::size_t zero_targets() const;

  /// One "index count" line per beta in ascending index order.
  void write(std::ostream& os) const;
  static CountTable read(std::istream& is);

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  unsigned g_;
  std::vector<mpz_class> counts_;
};

/// Dynamic programming over a in canonical order with state (factors used,
/// running product). Refuses fields with q^h > max_order.
CountTable count_all_dp(const FieldCtx& ext, unsigned g, u64 max_order = kDefaultDpMaxOrder);

/// Same table by direct subset enumeration (independent route).
CountTable count_all_subsets(const FieldCtx& ext, unsigned g, u64 cap = kDefaultSubsetCap);

/// Product of (alpha + a) over all of F_q.
Index full_product(const FieldCtx& ext);

/// beta -> prod_{a in F_q}(alpha + a) / beta.
FieldElem dual_transform(const FieldElem& beta);

/// Pairs (S1 subset of F_{q1}, S2 subset of F_q - F_{q1}) with |S1| = g1,
/// |S2| = g2 and product beta. `sub` is the level F_{q1} below F_q; alpha must
/// generate F_{q^h} over it (SubfieldGenerationFailure otherwise).
u64 count_split_factorizations(const FieldCtx& ext, const FieldCtx& sub, Index beta, unsigned g1, unsigned g2);

/// Split counts for every beta: g1-subset DP over F_{q1} combined with an
/// enumeration of the g2-subsets of the complement.
std::vector<u64> split_table_by_parts(const FieldCtx& ext, const FieldCtx& sub, unsigned g1, unsigned g2);

/// Split counts for every beta by enumerating (g1 + g2)-subsets of F_q and
/// keeping those with exactly g1 elements in F_{q1}.
std::vector<u64> split_table_by_subsets(const FieldCtx& ext, const FieldCtx& sub, unsigned g1, unsigned g2,
                                        u64 cap = kDefaultSubsetCap);

}  // namespace rsdeep

#endif  // RSDEEP_FACTOR_ORACLE_HPP
