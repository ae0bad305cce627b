#include "rsdeep/factor_oracle.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "rsdeep/error.hpp"

namespace rsdeep {

namespace {

const FieldCtx& require_ext(const FieldCtx& ext) {
  if (ext.is_prime_field()) throw Error(Errc::InvalidArgument, "extension field F_{q^h} required");
  return ext;
}

void check_subset_cap(u64 n, unsigned g, u64 cap) {
  if (binomial(n, g) > mpz_class(static_cast<unsigned long>(cap)))
    throw Error(Errc::CapExceeded, "C(" + std::to_string(n) + "," + std::to_string(g) + ") exceeds subset cap");
}

std::vector<Index> factor_base(const FieldCtx& ext, std::span<const Index> shifts) {
  std::vector<Index> out;
  out.reserve(shifts.size());
  for (Index a : shifts) out.push_back(linear_factor(ext, a));
  return out;
}

std::vector<Index> all_shifts(const FieldCtx& ext) {
  std::vector<Index> s(ext.base().order());
  for (Index a = 0; a < s.size(); ++a) s[a] = a;
  return s;
}

// Calls visit(product, chosen) for every g-subset of positions into
// `factors`, in lexicographic order of positions.
template <class Visit>
class SubsetWalker {
 public:
  SubsetWalker(const FieldCtx& ext, const std::vector<Index>& factors, unsigned g, Visit& visit)
      : ext_(ext), factors_(factors), g_(g), visit_(visit), chosen_(g) {}

  void run() {
    if (g_ <= factors_.size()) walk(0, 0, 1);
  }

 private:
  void walk(std::size_t start, unsigned depth, Index prod) {
    if (depth == g_) {
      visit_(prod, chosen_);
      return;
    }
    for (std::size_t i = start; i + (g_ - depth) <= factors_.size(); ++i) {
      chosen_[depth] = i;
      walk(i + 1, depth + 1, ext_.mul(prod, factors_[i]));
    }
  }

  const FieldCtx& ext_;
  const std::vector<Index>& factors_;
  unsigned g_;
  Visit& visit_;
  std::vector<std::size_t> chosen_;
};

template <class Visit>
void for_each_subset(const FieldCtx& ext, const std::vector<Index>& factors, unsigned g, Visit visit) {
  SubsetWalker<Visit>(ext, factors, g, visit).run();
}

// Verifies F_{q1} sits inside F_q and alpha generates F_{q^h} over it;
// returns (elements of F_{q1}, elements of F_q - F_{q1}).
std::pair<std::vector<Index>, std::vector<Index>> split_sets(const FieldCtx& ext, const FieldCtx& sub) {
  require_ext(ext);
  const FieldCtx fq = ext.base();
  if (sub.characteristic() != fq.characteristic())
    throw Error(Errc::ContextMismatch, "subfield has a different characteristic");
  const auto& inside = fq.subfield_indices(sub.order());
  const unsigned want = ext.absolute_degree() / sub.absolute_degree();
  if (min_poly_degree(ext.gen(), sub.order()) != want)
    throw Error(Errc::SubfieldGenerationFailure, "alpha does not generate F_{q^h} over F_{q1}");
  std::vector<Index> outside;
  for (Index a = 0, j = 0; a < fq.order(); ++a) {
    if (j < inside.size() && inside[j] == a)
      ++j;
    else
      outside.push_back(a);
  }
  return {inside, outside};
}

}  // namespace

u64 count_factorizations(const FieldElem& beta, unsigned g, u64 cap) {
  return count_factorizations(beta.ctx(), beta.index(), g, cap);
}

u64 count_factorizations(const FieldCtx& ext, Index beta, unsigned g, u64 cap) {
  require_ext(ext);
  const Index q = ext.base().order();
  if (g > q) throw Error(Errc::InvalidArgument, "g must be <= q");
  if (beta >= ext.order()) throw Error(Errc::InvalidArgument, "target out of range");
  check_subset_cap(q, g, cap);
  const auto base = factor_base(ext, all_shifts(ext));
  u64 count = 0;
  for_each_subset(ext, base, g, [&](Index prod, const std::vector<std::size_t>&) { count += prod == beta; });
  return count;
}

std::vector<FactorSet> enumerate_factorizations(const FieldCtx& ext, Index beta, unsigned g, u64 cap) {
  require_ext(ext);
  const Index q = ext.base().order();
  if (g > q) throw Error(Errc::InvalidArgument, "g must be <= q");
  check_subset_cap(q, g, cap);
  const auto base = factor_base(ext, all_shifts(ext));
  std::vector<FactorSet> out;
  for_each_subset(ext, base, g, [&](Index prod, const std::vector<std::size_t>& chosen) {
    if (prod == beta) out.emplace_back(std::vector<Index>(chosen.begin(), chosen.end()));
  });
  return out;
}

u64 count_mitm(const FieldCtx& ext, Index beta, unsigned g, u64 cap) {
  require_ext(ext);
  const Index q = ext.base().order();
  if (g > q) throw Error(Errc::InvalidArgument, "g must be <= q");
  if (g == 0) return beta == 1;
  const unsigned ga = g / 2, gb = g - ga;
  check_subset_cap(q, ga, cap);
  check_subset_cap(q, gb, cap);
  const auto base = factor_base(ext, all_shifts(ext));

  // product of the first part -> sorted list of its largest element (+1, so
  // the empty first part maps to 0)
  std::unordered_map<Index, std::vector<std::size_t>> firsts;
  for_each_subset(ext, base, ga, [&](Index prod, const std::vector<std::size_t>& chosen) {
    firsts[prod].push_back(chosen.empty() ? 0 : chosen.back() + 1);
  });
  for (auto& [prod, tops] : firsts) std::sort(tops.begin(), tops.end());

  u64 count = 0;
  for_each_subset(ext, base, gb, [&](Index prod, const std::vector<std::size_t>& chosen) {
    const Index need = ext.mul(beta, ext.inv(prod));
    auto it = firsts.find(need);
    if (it == firsts.end()) return;
    // first part must end strictly before the second part starts
    const auto& tops = it->second;
    count += static_cast<u64>(std::upper_bound(tops.begin(), tops.end(), chosen.front()) - tops.begin());
  });
  return count;
}

mpz_class CountTable::total() const {
  mpz_class t = 0;
  for (const auto& c : counts_) t += c;
  return t;
}

mpz_class CountTable::min_nonzero_target() const {
  mpz_class m = counts_.size() > 1 ? counts_[1] : mpz_class(0);
  for (std::size_t b = 1; b < counts_.size(); ++b) m = std::min(m, counts_[b]);
  return m;
}

std::size_t CountTable::zero_targets() const {
  std::size_t z = 0;
  for (std::size_t b = 1; b < counts_.size(); ++b) z += counts_[b] == 0;
  return z;
}

void CountTable::write(std::ostream& os) const {
  os << "# g " << g_ << " size " << counts_.size() << "\n";
  for (std::size_t b = 0; b < counts_.size(); ++b) os << b << " " << counts_[b].get_str() << "\n";
}

CountTable CountTable::read(std::istream& is) {
  std::string line;
  unsigned g = 0;
  std::size_t size = 0;
  if (!std::getline(is, line)) throw Error(Errc::Parse, "empty count table");
  {
    std::istringstream hs(line);
    std::string hash, gk, sk;
    if (!(hs >> hash >> gk >> g >> sk >> size) || hash != "#" || gk != "g" || sk != "size")
      throw Error(Errc::Parse, "bad count table header");
  }
  std::vector<mpz_class> counts(size);
  for (std::size_t b = 0; b < size; ++b) {
    if (!std::getline(is, line)) throw Error(Errc::Parse, "truncated count table");
    std::istringstream ls(line);
    std::size_t idx;
    std::string value;
    if (!(ls >> idx >> value) || idx != b) throw Error(Errc::Parse, "bad count table record");
    counts[b] = mpz_class(value);
  }
  return CountTable(g, std::move(counts));
}

CountTable count_all_dp(const FieldCtx& ext, unsigned g, u64 max_order) {
  require_ext(ext);
  const Index order = ext.order();
  const Index q = ext.base().order();
  if (order > max_order)
    throw Error(Errc::CapExceeded, "q^h = " + std::to_string(order) + " exceeds DP limit");
  if (g > q) throw Error(Errc::InvalidArgument, "g must be <= q");

  std::vector<std::vector<mpz_class>> layer(g + 1, std::vector<mpz_class>(order));
  layer[0][1] = 1;
  std::vector<Index> shifted(order);
  for (Index a = 0; a < q; ++a) {
    const Index fa = linear_factor(ext, a);
    for (Index b = 0; b < order; ++b) shifted[b] = ext.mul(b, fa);
    const unsigned top = static_cast<unsigned>(std::min<Index>(g, a + 1));
    // descending j keeps layer j-1 at its pre-a state
    for (unsigned j = top; j >= 1; --j) {
      const auto& src = layer[j - 1];
      auto& dst = layer[j];
      for (Index b = 0; b < order; ++b)
        if (sgn(src[b]) != 0) dst[shifted[b]] += src[b];
    }
  }
  return CountTable(g, std::move(layer[g]));
}

CountTable count_all_subsets(const FieldCtx& ext, unsigned g, u64 cap) {
  require_ext(ext);
  const Index q = ext.base().order();
  if (g > q) throw Error(Errc::InvalidArgument, "g must be <= q");
  check_subset_cap(q, g, cap);
  std::vector<u64> raw(ext.order(), 0);
  for_each_subset(ext, factor_base(ext, all_shifts(ext)), g,
                  [&](Index prod, const std::vector<std::size_t>&) { ++raw[prod]; });
  std::vector<mpz_class> counts(raw.size());
  for (std::size_t b = 0; b < raw.size(); ++b) counts[b] = static_cast<unsigned long>(raw[b]);
  return CountTable(g, std::move(counts));
}

Index full_product(const FieldCtx& ext) {
  require_ext(ext);
  Index acc = 1;
  for (Index a = 0; a < ext.base().order(); ++a) acc = ext.mul(acc, linear_factor(ext, a));
  return acc;
}

FieldElem dual_transform(const FieldElem& beta) {
  if (beta.is_zero()) throw Error(Errc::DivisionByZero, "dual of zero");
  const FieldCtx& ext = beta.ctx();
  return FieldElem(ext, ext.mul(full_product(ext), ext.inv(beta.index())));
}

std::vector<u64> split_table_by_parts(const FieldCtx& ext, const FieldCtx& sub, unsigned g1, unsigned g2) {
  auto [inside, outside] = split_sets(ext, sub);
  std::vector<u64> result(ext.order(), 0);
  if (g1 > inside.size() || g2 > outside.size()) return result;
  check_subset_cap(outside.size(), g2, kDefaultSubsetCap);

  // g1-subset products of F_{q1}
  std::vector<u64> first(ext.order(), 0);
  for_each_subset(ext, factor_base(ext, inside), g1, [&](Index prod, const std::vector<std::size_t>&) { ++first[prod]; });
  std::vector<Index> support;
  for (Index b = 0; b < first.size(); ++b)
    if (first[b]) support.push_back(b);

  for_each_subset(ext, factor_base(ext, outside), g2, [&](Index prod, const std::vector<std::size_t>&) {
    for (Index b : support) result[ext.mul(b, prod)] += first[b];
  });
  return result;
}

std::vector<u64> split_table_by_subsets(const FieldCtx& ext, const FieldCtx& sub, unsigned g1, unsigned g2, u64 cap) {
  auto [inside, outside] = split_sets(ext, sub);
  std::vector<u64> result(ext.order(), 0);
  const Index q = ext.base().order();
  const unsigned g = g1 + g2;
  if (g > q) return result;
  check_subset_cap(q, g, cap);
  std::vector<bool> in_sub(q, false);
  for (Index a : inside) in_sub[a] = true;
  for_each_subset(ext, factor_base(ext, all_shifts(ext)), g, [&](Index prod, const std::vector<std::size_t>& chosen) {
    unsigned hits = 0;
    for (std::size_t a : chosen) hits += in_sub[a];
    if (hits == g1) ++result[prod];
  });
  return result;
}

u64 count_split_factorizations(const FieldCtx& ext, const FieldCtx& sub, Index beta, unsigned g1, unsigned g2) {
  if (beta >= ext.order()) throw Error(Errc::InvalidArgument, "target out of range");
  return split_table_by_parts(ext, sub, g1, g2)[beta];
}

}  // namespace rsdeep
