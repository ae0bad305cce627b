#ifndef RSDEEP_RS_CODE_HPP
#define RSDEEP_RS_CODE_HPP

#include <cstddef>
#include <vector>

#include "rsdeep/poly.hpp"

namespace rsdeep {

inline constexpr u64 kDefaultBruteCap = 10'000'000;

/// Extended Reed-Solomon code RS_q[q, k]: evaluations of all polynomials of
/// degree < k at every element of F_q, in ascending canonical index order.
class RSCode {
 public:
  RSCode(FieldCtx field, unsigned k);

  const FieldCtx& field() const { return field_; }
  unsigned dimension() const { return k_; }
  Index length() const { return field_.order(); }
  unsigned min_distance() const { return static_cast<unsigned>(length()) - k_ + 1; }

 private:
  FieldCtx field_;
  unsigned k_;
};

/// Length-q vector over F_q, coordinate i belonging to the element of index i.
class Word {
 public:
  Word(FieldCtx field, std::vector<Index> symbols);

  const FieldCtx& field() const { return field_; }
  const std::vector<Index>& symbols() const { return symbols_; }
  Index operator[](std::size_t i) const { return symbols_[i]; }
  std::size_t size() const { return symbols_.size(); }

  friend bool operator==(const Word& a, const Word& b) { return a.field_ == b.field_ && a.symbols_ == b.symbols_; }

 private:
  FieldCtx field_;
  std::vector<Index> symbols_;
};

Word encode(const RSCode& code, const Poly& message);
std::size_t distance(const Word& u, const Word& v);

/// Messages are enumerated by ascending index m = sum c_j q^j.
Poly message_from_index(const RSCode& code, u64 m);
u64 message_count(const RSCode& code, u64 cap);

struct DecodeHit {
  Poly message;
  std::size_t distance;
};

/// All messages whose codeword lies within `radius` of w, in enumeration
/// order. Throws CapExceeded when q^k > cap.
std::vector<DecodeHit> list_decode_brute(const RSCode& code, const Word& w, std::size_t radius,
                                         u64 cap = kDefaultBruteCap, unsigned threads = 1);

struct MlResult {
  std::size_t distance;
  std::vector<Poly> nearest;
};

/// Exact minimum distance from w to the code and every message attaining it.
MlResult ml_decode_brute(const RSCode& code, const Word& w, u64 cap = kDefaultBruteCap);

}  // namespace rsdeep

#endif  // RSDEEP_RS_CODE_HPP
