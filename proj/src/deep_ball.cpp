#include "rsdeep/deep_ball.hpp"

#include <algorithm>

#include "rsdeep/error.hpp"

namespace rsdeep {

FactorSet::FactorSet(std::vector<Index> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw Error(Errc::InvalidArgument, "factor set elements must be distinct");
}

namespace {

FieldCtx base_of(const FieldCtx& ext) {
  if (ext.is_prime_field()) throw Error(Errc::InvalidParams, "extension field required");
  return ext.base();
}

}  // namespace

DeepBallParams::DeepBallParams(FieldCtx ext, Poly f, unsigned g)
    : ext_(std::move(ext)), field_(base_of(ext_)), f_(std::move(f)), g_(g) {
  const unsigned h = ext_.degree();
  if (!(f_.ctx() == field_)) throw Error(Errc::InvalidParams, "f must be a polynomial over F_q");
  if (h < 2) throw Error(Errc::InvalidParams, "h must be at least 2");
  if (!(h < g_ && g_ < field_.order()))
    throw Error(Errc::InvalidParams, "need h < g < q (h=" + std::to_string(h) + ", g=" + std::to_string(g_) +
                                         ", q=" + std::to_string(field_.order()) + ")");
  if (f_.is_zero()) throw Error(Errc::InvalidParams, "f must be nonzero");
  if (f_.degree() >= static_cast<int>(h)) throw Error(Errc::InvalidParams, "deg f must be < h");
}

Index DeepBallParams::target() const { return ext_.from_coefficients(f_.coeffs()); }

Poly representative(const FieldCtx& ext, Index beta) { return Poly(ext.base(), ext.coefficients(beta)); }

Index linear_factor(const FieldCtx& ext, Index a) { return ext.add(ext.gen().index(), a); }

Index factor_product(const FieldCtx& ext, const FactorSet& s) {
  const Index alpha = ext.gen().index();
  Index acc = 1;
  for (Index a : s.elements()) acc = ext.mul(acc, ext.add(alpha, a));
  return acc;
}

Word build_center(const DeepBallParams& params) {
  const FieldCtx& fq = params.field();
  const Poly hp = params.h_poly();
  const unsigned k = params.k();
  std::vector<Index> out(fq.order());
  for (Index a = 0; a < fq.order(); ++a) {
    // h(a) != 0: h is irreducible of degree >= 2
    Index ratio = fq.mul(params.f().eval(a), fq.inv(hp.eval(a)));
    out[a] = fq.add(ratio, fq.pow(a, k));
  }
  return Word(fq, std::move(out));
}

Poly factors_to_codeword(const FactorSet& s, const DeepBallParams& params) {
  const FieldCtx& fq = params.field();
  if (s.size() != params.g()) throw Error(Errc::InvalidArgument, "factor set must have exactly g elements");
  for (Index a : s.elements())
    if (a >= fq.order()) throw Error(Errc::InvalidArgument, "factor outside F_q");
  if (factor_product(params.ext(), s) != params.target())
    throw Error(Errc::ProductMismatch, "product of (alpha + a) differs from f(alpha)");

  Poly numerator = Poly::from_linear_factors(fq, s.elements());
  auto [t, rem] = divmod(numerator - params.f(), params.h_poly());
  if (!rem.is_zero()) throw std::logic_error("h(x) does not divide prod(x + a) - f(x)");
  // u_f + (t - x^k) vanishes on the roots, so the agreeing codeword is x^k - t
  return Poly::monomial(fq, 1, params.k()) - t;
}

std::optional<FactorSet> codeword_to_factors(const Poly& c, const DeepBallParams& params) {
  const FieldCtx& fq = params.field();
  if (!(c.ctx() == fq)) throw Error(Errc::ContextMismatch, "codeword polynomial over a different field");
  if (c.degree() >= static_cast<int>(params.k())) throw Error(Errc::DegreeTooHigh, "codeword degree must be < g - h");

  const Poly n = params.f() + (Poly::monomial(fq, 1, params.k()) - c) * params.h_poly();
  std::vector<Index> shifts;
  for (Index r = 0; r < fq.order(); ++r) {
    if (n.eval(r) == 0) shifts.push_back(fq.neg(r));
  }
  // n is monic of degree g, so g distinct roots means it splits
  if (shifts.size() != params.g()) return std::nullopt;
  return FactorSet(std::move(shifts));
}

}  // namespace rsdeep
