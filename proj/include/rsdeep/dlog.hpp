#ifndef RSDEEP_DLOG_HPP
#define RSDEEP_DLOG_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "rsdeep/deep_ball.hpp"

namespace rsdeep {

/// Relation oracle used by the reduction: every codeword polynomial within
/// `radius` of the received word.
class MlDecoder {
 public:
  virtual ~MlDecoder() = default;
  virtual std::vector<Poly> decode(const RSCode& code, const Word& w, std::size_t radius) const = 0;
  /// True when decode may be called from several threads at once.
  virtual bool concurrent() const { return false; }
};

class BruteForceDecoder final : public MlDecoder {
 public:
  explicit BruteForceDecoder(u64 cap = kDefaultBruteCap) : cap_(cap) {}
  std::vector<Poly> decode(const RSCode& code, const Word& w, std::size_t radius) const override;
  bool concurrent() const override { return true; }

 private:
  u64 cap_;
};

/// b^exponent = prod_{a in factors} (alpha + a), checked on construction.
class Relation {
 public:
  Relation(const FieldCtx& ext, Index base, u64 exponent, FactorSet factors);

  u64 exponent() const { return exponent_; }
  const FactorSet& factors() const { return factors_; }

 private:
  u64 exponent_;
  FactorSet factors_;
};

/// Solved factor base. Every relation involves exactly g logarithms, so the
/// individual logs are only fixed up to a common shift c with g c = 0 mod
/// q^h - 1. The table therefore keeps d_a = log(alpha + a) - log(alpha) and
/// z = g log(alpha), which are unique; the log of any g-element product is
/// sum d_a + z.
struct LogTable {
  u64 modulus = 0;
  unsigned g = 0;
  std::vector<u64> offsets;
  u64 g_log_alpha = 0;
  /// log_b(alpha + a) itself, present when gcd(g, modulus) = 1.
  std::optional<std::vector<u64>> logs;

  u64 log_of(const FactorSet& s) const;
};

struct DlogOptions {
  u64 seed = 0;
  /// Solve attempts; each retry adds a fresh batch of relations.
  unsigned retry_budget = 5;
  /// Relations per batch beyond q.
  std::size_t extra_relations = 8;
  /// When the target's own word has no factorization, retry with
  /// target * b^s for this many seeded shifts s (0: report NoFactorization).
  unsigned target_shifts = 0;
};

class DlogInstance {
 public:
  /// Throws InvalidParams unless base generates ext^* and h < g < q.
  DlogInstance(FieldCtx ext, Index base, unsigned g, std::shared_ptr<const MlDecoder> decoder, DlogOptions options = {});

  const FieldCtx& ext() const { return ext_; }
  Index base() const { return base_; }
  unsigned g() const { return g_; }
  u64 group_order() const { return ext_.order() - 1; }
  const MlDecoder& decoder() const { return *decoder_; }
  const DlogOptions& options() const { return options_; }

 private:
  FieldCtx ext_;
  Index base_;
  unsigned g_;
  std::shared_ptr<const MlDecoder> decoder_;
  DlogOptions options_;
};

/// Decodes the word of f = b^i; nullopt when no codeword lies within q - g.
/// Among several nearest codewords the lexicographically least factor set wins.
std::optional<Relation> collect_relation(const DlogInstance& inst, u64 i);

/// Factor set of an arbitrary nonzero target, via its own received word.
std::optional<FactorSet> decode_factors(const DlogInstance& inst, Index target);

/// Throws Singular when the relations do not pin the offsets and g log(alpha).
LogTable solve_congruences(const std::vector<Relation>& relations, u64 modulus, std::size_t q, unsigned g);

/// Relation collection plus the solved factor base, reusable across targets.
class IndexCalculus {
 public:
  explicit IndexCalculus(const DlogInstance& inst, std::ostream* transcript = nullptr);

  const LogTable& table();
  const std::vector<Relation>& relations() const { return relations_; }
  /// x with b^x = target, verified before returning.
  u64 log(const FieldElem& target);

 private:
  void solve();
  void note(const std::string& line);

  const DlogInstance& inst_;
  std::ostream* transcript_;
  std::vector<Relation> relations_;
  std::optional<LogTable> table_;
};

u64 dlog(const DlogInstance& inst, const FieldElem& target, std::ostream* transcript = nullptr);

/// Least x >= 0 with base^x = target, by walking powers. Throws CapExceeded
/// for fields larger than max_order.
u64 dlog_bruteforce(const FieldElem& base, const FieldElem& target, u64 max_order = 1'000'000);

/// One "i a_1 ... a_g" line per relation.
void write_relations(std::ostream& os, const std::vector<Relation>& relations);
std::vector<Relation> read_relations(std::istream& is, const FieldCtx& ext, Index base);

}  // namespace rsdeep

#endif  // RSDEEP_DLOG_HPP
