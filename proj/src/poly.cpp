#include "rsdeep/poly.hpp"

#include <sstream>

#include "rsdeep/error.hpp"

namespace rsdeep {

Poly::Poly(FieldCtx ctx, std::vector<Index> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (Index v : c_)
    if (v >= ctx_.order()) throw Error(Errc::InvalidArgument, "coefficient index out of range");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::same_ctx(const Poly& o) const {
  if (!(ctx_ == o.ctx_)) throw Error(Errc::ContextMismatch, "polynomials over different fields");
}

Poly Poly::x(const FieldCtx& ctx) { return Poly(ctx, {0, 1}); }
Poly Poly::constant(const FieldCtx& ctx, Index c) { return Poly(ctx, {c}); }

Poly Poly::monomial(const FieldCtx& ctx, Index c, unsigned deg) {
  std::vector<Index> v(deg + 1, 0);
  v[deg] = c;
  return Poly(ctx, std::move(v));
}

Poly Poly::from_linear_factors(const FieldCtx& ctx, std::span<const Index> shifts) {
  std::vector<Index> c{1};
  for (Index a : shifts) {
    // multiply by (x + a)
    c.push_back(0);
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = ctx.add(c[j - 1], ctx.mul(a, c[j]));
    c[0] = ctx.mul(a, c[0]);
  }
  return Poly(ctx, std::move(c));
}

Index Poly::eval(Index x) const {
  Index acc = 0;
  for (std::size_t j = c_.size(); j-- > 0;) acc = ctx_.add(ctx_.mul(acc, x), c_[j]);
  return acc;
}

FieldElem Poly::eval(const FieldElem& x) const {
  if (x.ctx() == ctx_) return FieldElem(ctx_, eval(x.index()));
  return FieldElem(x.ctx(), eval_in(x.ctx(), x.index()));
}

Index Poly::eval_in(const FieldCtx& ext, Index x) const {
  if (!ext.has_ancestor(ctx_)) throw Error(Errc::ContextMismatch, "evaluation field does not contain the coefficients");
  Index acc = 0;
  for (std::size_t j = c_.size(); j-- > 0;) acc = ext.add(ext.mul(acc, x), c_[j]);
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  same_ctx(o);
  std::vector<Index> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = ctx_.add(coeff(j), o.coeff(j));
  return Poly(ctx_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  same_ctx(o);
  std::vector<Index> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = ctx_.sub(coeff(j), o.coeff(j));
  return Poly(ctx_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  same_ctx(o);
  if (is_zero() || o.is_zero()) return Poly(ctx_);
  std::vector<Index> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = ctx_.add(r[i + j], ctx_.mul(c_[i], o.c_[j]));
  }
  return Poly(ctx_, std::move(r));
}

Poly Poly::scale(Index s) const {
  std::vector<Index> r(c_);
  for (Index& v : r) v = ctx_.mul(v, s);
  return Poly(ctx_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(ctx_.inv(leading()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(ctx_);
  std::vector<Index> r(c_.size() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j)
    r[j - 1] = ctx_.mul(ctx_.from_int(static_cast<long long>(j % ctx_.characteristic())), c_[j]);
  return Poly(ctx_, std::move(r));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = c_.size(); j-- > 0;) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[j] != 1 || j == 0) os << c_[j];
    if (j >= 1) os << "x";
    if (j >= 2) os << "^" << j;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (!(a.ctx() == b.ctx())) throw Error(Errc::ContextMismatch, "polynomials over different fields");
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  const FieldCtx& ctx = a.ctx();
  if (a.degree() < b.degree()) return {Poly(ctx), a};
  std::vector<Index> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Index> quot(rem.size() - db, 0);
  const Index lead_inv = ctx.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Index factor = ctx.mul(rem[k], lead_inv);
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = ctx.sub(rem[k - db + j], ctx.mul(factor, bc[j]));
  }
  rem.resize(db);
  return {Poly(ctx, std::move(quot)), Poly(ctx, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, u64 exp, const Poly& mod) {
  Poly result = Poly::constant(base.ctx(), 1) % mod;
  Poly b = base % mod;
  while (exp) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  const int deg = f.degree();
  if (deg < 1) return false;
  if (deg == 1) return true;
  const auto d = static_cast<unsigned>(deg);
  const Index q = f.ctx().order();
  const Poly x = Poly::x(f.ctx());

  std::vector<unsigned> cofactors;  // d / r for primes r | d
  for (const auto& [r, k] : factorize(d)) {
    (void)k;
    cofactors.push_back(d / static_cast<unsigned>(r));
  }

  Poly frob = x % f;  // x^(q^k) mod f
  for (unsigned k = 1; k <= d; ++k) {
    frob = powmod(frob, q, f);
    for (unsigned c : cofactors) {
      if (c == k && gcd(frob - x, f).degree() != 0) return false;
    }
  }
  return frob == x % f;
}

}  // namespace rsdeep
