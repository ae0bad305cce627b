#include "rsdeep/dlog.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "rsdeep/error.hpp"
#include "rsdeep/linsolve.hpp"

namespace rsdeep {

std::vector<Poly> BruteForceDecoder::decode(const RSCode& code, const Word& w, std::size_t radius) const {
  std::vector<Poly> out;
  for (auto& hit : list_decode_brute(code, w, radius, cap_)) out.push_back(std::move(hit.message));
  return out;
}

Relation::Relation(const FieldCtx& ext, Index base, u64 exponent, FactorSet factors)
    : exponent_(exponent), factors_(std::move(factors)) {
  if (ext.pow(base, exponent_) != factor_product(ext, factors_))
    throw Error(Errc::ProductMismatch, "relation b^" + std::to_string(exponent_) + " does not match its factors");
}

DlogInstance::DlogInstance(FieldCtx ext, Index base, unsigned g, std::shared_ptr<const MlDecoder> decoder,
                           DlogOptions options)
    : ext_(std::move(ext)), base_(base), g_(g), decoder_(std::move(decoder)), options_(options) {
  if (ext_.is_prime_field()) throw Error(Errc::InvalidParams, "extension field required");
  const unsigned h = ext_.degree();
  const Index q = ext_.base().order();
  if (!(h < g_ && g_ < q)) throw Error(Errc::InvalidParams, "need h < g < q");
  if (base_ >= ext_.order() || !is_generator(ext_.elem(base_)))
    throw Error(Errc::InvalidParams, "base is not a generator of the multiplicative group");
  if (!decoder_) throw Error(Errc::InvalidParams, "decoder required");
}

std::optional<FactorSet> decode_factors(const DlogInstance& inst, Index target) {
  if (target == 0) throw Error(Errc::DivisionByZero, "zero has no logarithm");
  const DeepBallParams params(inst.ext(), representative(inst.ext(), target), inst.g());
  const RSCode code = params.code();
  const Word center = build_center(params);
  std::optional<FactorSet> best;
  for (const Poly& c : inst.decoder().decode(code, center, params.radius())) {
    auto s = codeword_to_factors(c, params);
    if (s && (!best || *s < *best)) best = std::move(s);
  }
  return best;
}

std::optional<Relation> collect_relation(const DlogInstance& inst, u64 i) {
  if (i >= inst.group_order()) throw Error(Errc::InvalidArgument, "exponent must satisfy 0 <= i <= q^h - 2");
  const Index beta = inst.ext().pow(inst.base(), i);
  auto s = decode_factors(inst, beta);
  if (!s) return std::nullopt;
  return Relation(inst.ext(), inst.base(), i, std::move(*s));
}

u64 LogTable::log_of(const FactorSet& s) const {
  if (s.size() != g) throw Error(Errc::InvalidArgument, "factor set size differs from g");
  u64 x = g_log_alpha;
  for (Index a : s.elements()) x = (x + offsets.at(a)) % modulus;
  return x;
}

LogTable solve_congruences(const std::vector<Relation>& relations, u64 modulus, std::size_t q, unsigned g) {
  // unknowns: d_1 .. d_{q-1} in columns 0 .. q-2, z in column q-1 (d_0 = 0)
  std::vector<std::vector<u64>> rows;
  std::vector<u64> rhs;
  for (const auto& rel : relations) {
    if (rel.factors().size() != g) throw Error(Errc::InvalidArgument, "relation with the wrong number of factors");
    std::vector<u64> row(q, 0);
    for (Index a : rel.factors().elements())
      if (a != 0) row.at(a - 1) += 1;
    row[q - 1] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(rel.exponent() % modulus);
  }
  std::vector<u64> x = solve_linear_mod(std::move(rows), std::move(rhs), q, modulus);
  LogTable t;
  t.modulus = modulus;
  t.g = g;
  t.offsets.assign(q, 0);
  for (std::size_t a = 1; a < q; ++a) t.offsets[a] = x[a - 1];
  t.g_log_alpha = x[q - 1];
  if (auto ginv = invmod(g % modulus, modulus)) {
    const u64 l0 = mulmod(t.g_log_alpha, *ginv, modulus);
    std::vector<u64> logs(q);
    for (std::size_t a = 0; a < q; ++a) logs[a] = (t.offsets[a] + l0) % modulus;
    t.logs = std::move(logs);
  }
  return t;
}

IndexCalculus::IndexCalculus(const DlogInstance& inst, std::ostream* transcript)
    : inst_(inst), transcript_(transcript) {}

void IndexCalculus::note(const std::string& line) {
  if (transcript_) *transcript_ << line << "\n";
}

const LogTable& IndexCalculus::table() {
  if (!table_) solve();
  return *table_;
}

void IndexCalculus::solve() {
  const FieldCtx& ext = inst_.ext();
  const std::size_t q = ext.base().order();
  const u64 modulus = inst_.group_order();
  const std::size_t batch = q + inst_.options().extra_relations;
  std::mt19937_64 rng(inst_.options().seed);
  std::uniform_int_distribution<u64> pick(0, modulus - 1);

  for (unsigned attempt = 1; attempt <= inst_.options().retry_budget; ++attempt) {
    const std::size_t want = relations_.size() + batch;
    std::size_t draws = 0;
    while (relations_.size() < want) {
      if (++draws > 64 * batch)
        throw Error(Errc::Exhausted, "too few decodable exponents; pick a different g");
      const u64 i = pick(rng);
      auto rel = collect_relation(inst_, i);
      if (!rel) continue;
      std::ostringstream os;
      os << "relation i=" << i << " factors=";
      for (std::size_t j = 0; j < rel->factors().size(); ++j) os << (j ? "," : "") << rel->factors().elements()[j];
      note(os.str());
      relations_.push_back(std::move(*rel));
    }
    try {
      LogTable t = solve_congruences(relations_, modulus, q, inst_.g());
      // b^(g d_a + z) = (alpha + a)^g for every a
      for (Index a = 0; a < q; ++a) {
        const u64 e = (mulmod(inst_.g(), t.offsets[a], modulus) + t.g_log_alpha) % modulus;
        if (ext.pow(inst_.base(), e) != ext.pow(linear_factor(ext, a), inst_.g()))
          throw std::logic_error("solved logarithm fails re-verification");
      }
      note("solve attempt=" + std::to_string(attempt) + " relations=" + std::to_string(relations_.size()) + " ok");
      std::ostringstream os;
      os << "offsets";
      for (u64 v : t.offsets) os << " " << v;
      os << " g_log_alpha " << t.g_log_alpha;
      note(os.str());
      table_ = std::move(t);
      return;
    } catch (const Error& e) {
      if (e.code() != Errc::Singular) throw;
      note("solve attempt=" + std::to_string(attempt) + " relations=" + std::to_string(relations_.size()) +
           " singular");
    }
  }
  throw Error(Errc::Exhausted, "linear system still singular after retry budget");
}

u64 IndexCalculus::log(const FieldElem& target) {
  const FieldCtx& ext = inst_.ext();
  if (!(target.ctx() == ext)) throw Error(Errc::ContextMismatch, "target from a different field");
  if (target.is_zero()) throw Error(Errc::DivisionByZero, "zero has no logarithm");
  const LogTable& t = table();
  const u64 modulus = t.modulus;

  std::mt19937_64 shift_rng(inst_.options().seed ^ (0x9e3779b97f4a7c15ULL * (target.index() + 1)));
  std::uniform_int_distribution<u64> pick(0, modulus - 1);
  for (unsigned attempt = 0; attempt <= inst_.options().target_shifts; ++attempt) {
    const u64 shift = attempt == 0 ? 0 : pick(shift_rng);
    const Index shifted = ext.mul(target.index(), ext.pow(inst_.base(), shift));
    auto s = decode_factors(inst_, shifted);
    if (!s) continue;
    const u64 x = (t.log_of(*s) + modulus - shift) % modulus;
    if (ext.pow(inst_.base(), x) != target.index()) throw std::logic_error("b^x != target after index calculus");
    std::ostringstream os;
    os << "target=" << target.index() << " shift=" << shift << " factors=";
    for (std::size_t j = 0; j < s->size(); ++j) os << (j ? "," : "") << s->elements()[j];
    os << " x=" << x;
    note(os.str());
    note("b^x == target: true");
    return x;
  }
  throw Error(Errc::NoFactorization,
              "target " + std::to_string(target.index()) + " has no factorization into g distinct linear factors");
}

u64 dlog(const DlogInstance& inst, const FieldElem& target, std::ostream* transcript) {
  IndexCalculus ic(inst, transcript);
  return ic.log(target);
}

u64 dlog_bruteforce(const FieldElem& base, const FieldElem& target, u64 max_order) {
  if (!(base.ctx() == target.ctx())) throw Error(Errc::ContextMismatch, "base and target in different fields");
  const FieldCtx& ctx = base.ctx();
  if (ctx.order() > max_order) throw Error(Errc::CapExceeded, "field too large for brute-force logarithm");
  if (target.is_zero()) throw Error(Errc::DivisionByZero, "zero has no logarithm");
  Index cur = 1;
  for (u64 x = 0; x + 1 < ctx.order(); ++x) {
    if (cur == target.index()) return x;
    cur = ctx.mul(cur, base.index());
  }
  throw Error(Errc::InvalidArgument, "target not in the subgroup generated by base");
}

void write_relations(std::ostream& os, const std::vector<Relation>& relations) {
  for (const auto& rel : relations) {
    os << rel.exponent();
    for (Index a : rel.factors().elements()) os << " " << a;
    os << "\n";
  }
}

std::vector<Relation> read_relations(std::istream& is, const FieldCtx& ext, Index base) {
  std::vector<Relation> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    u64 i;
    if (!(ls >> i)) throw Error(Errc::Parse, "bad relation record: " + line);
    std::vector<Index> elems;
    for (Index a; ls >> a;) elems.push_back(a);
    out.emplace_back(ext, base, i, FactorSet(std::move(elems)));
  }
  return out;
}

}  // namespace rsdeep
