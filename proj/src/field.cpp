#include "rsdeep/field.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>

#include "rsdeep/error.hpp"
#include "rsdeep/poly.hpp"

namespace rsdeep {

namespace {
constexpr unsigned kMaxDegree = 63;
constexpr Index kMaxOrder = Index{1} << 62;
constexpr Index kTableOrder = 256;

// n with base^n == value, if any.
std::optional<unsigned> power_of(Index base, Index value) {
  Index power = 1;
  for (unsigned n = 0;; ++n) {
    if (power == value) return n;
    auto next = checked_mul(power, base);
    if (!next || *next > value) return std::nullopt;
    power = *next;
  }
}
}  // namespace

namespace detail {

struct FieldImpl {
  u64 p = 0;
  std::shared_ptr<const FieldImpl> base;
  std::vector<Index> modulus;  // monic, over base, constant term first
  unsigned degree = 1;
  unsigned abs_degree = 1;
  Index order = 0;
  Index base_order = 0;

  // Full operation tables for small extension levels.
  std::vector<std::uint32_t> add_t, mul_t, neg_t, inv_t;

  mutable std::mutex cache_mu;
  mutable std::map<Index, std::vector<Index>> subfields;

  bool is_prime() const { return !base; }

  void unpack(Index v, Index* out) const {
    for (unsigned j = 0; j < degree; ++j) {
      out[j] = v % base_order;
      v /= base_order;
    }
  }

  Index pack(const Index* c) const {
    Index v = 0;
    for (unsigned j = degree; j-- > 0;) v = v * base_order + c[j];
    return v;
  }

  Index add(Index a, Index b) const {
    if (is_prime()) {
      Index s = a + b;
      return s >= p ? s - p : s;
    }
    if (!add_t.empty()) return add_t[a * order + b];
    std::array<Index, kMaxDegree> ca{}, cb{};
    unpack(a, ca.data());
    unpack(b, cb.data());
    for (unsigned j = 0; j < degree; ++j) ca[j] = base->add(ca[j], cb[j]);
    return pack(ca.data());
  }

  Index neg(Index a) const {
    if (is_prime()) return a == 0 ? 0 : p - a;
    if (!neg_t.empty()) return neg_t[a];
    std::array<Index, kMaxDegree> ca{};
    unpack(a, ca.data());
    for (unsigned j = 0; j < degree; ++j) ca[j] = base->neg(ca[j]);
    return pack(ca.data());
  }

  Index sub(Index a, Index b) const {
    if (is_prime()) return a >= b ? a - b : a + p - b;
    return add(a, neg(b));
  }

  Index mul(Index a, Index b) const {
    if (is_prime()) return mulmod(a, b, p);
    if (!mul_t.empty()) return mul_t[a * order + b];
    if (a == 0 || b == 0) return 0;
    std::array<Index, kMaxDegree> ca{}, cb{};
    std::array<Index, 2 * kMaxDegree> prod{};
    unpack(a, ca.data());
    unpack(b, cb.data());
    for (unsigned i = 0; i < degree; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < degree; ++j) {
        if (cb[j] == 0) continue;
        prod[i + j] = base->add(prod[i + j], base->mul(ca[i], cb[j]));
      }
    }
    for (unsigned k = 2 * degree - 1; k-- > degree;) {
      Index c = prod[k];
      if (c == 0) continue;
      // x^degree = -(m_0 + ... + m_{degree-1} x^{degree-1})
      for (unsigned j = 0; j < degree; ++j) {
        if (modulus[j] == 0) continue;
        prod[k - degree + j] = base->sub(prod[k - degree + j], base->mul(c, modulus[j]));
      }
    }
    return pack(prod.data());
  }

  Index pow(Index a, u64 e) const {
    Index result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Index inv(Index a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (is_prime()) return *invmod(a, p);
    if (!inv_t.empty()) return inv_t[a];
    return pow(a, order - 2);
  }

  void build_tables() {
    if (is_prime() || order > kTableOrder) return;
    std::vector<std::uint32_t> at(order * order), mt(order * order), nt(order), it(order);
    for (Index a = 0; a < order; ++a) {
      nt[a] = static_cast<std::uint32_t>(neg(a));
      it[a] = a == 0 ? 0 : static_cast<std::uint32_t>(inv(a));
      for (Index b = 0; b < order; ++b) {
        at[a * order + b] = static_cast<std::uint32_t>(add(a, b));
        mt[a * order + b] = static_cast<std::uint32_t>(mul(a, b));
      }
    }
    add_t = std::move(at);
    mul_t = std::move(mt);
    neg_t = std::move(nt);
    inv_t = std::move(it);
  }
};

bool next_candidate(std::vector<Index>& lower, Index base_order) {
  for (std::size_t i = lower.size(); i-- > 0;) {
    if (++lower[i] < base_order) return true;
    lower[i] = 0;
  }
  return false;
}

}  // namespace detail

FieldCtx FieldCtx::prime(u64 p) {
  if (p < 2 || !is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxOrder) throw Error(Errc::CapExceeded, "prime too large");
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = p;
  impl->order = p;
  impl->base_order = p;
  return FieldCtx(std::move(impl));
}

FieldCtx FieldCtx::extend(const FieldCtx& base, const Poly& modulus) {
  if (!(modulus.ctx() == base))
    throw Error(Errc::ContextMismatch, "modulus is not a polynomial over the base field");
  if (modulus.degree() < 1 || !modulus.is_monic())
    throw Error(Errc::InvalidArgument, "modulus must be monic of degree >= 1");
  const auto d = static_cast<unsigned>(modulus.degree());
  if (d > kMaxDegree) throw Error(Errc::CapExceeded, "extension degree too large");
  auto order = checked_pow(base.order(), d);
  if (!order || *order > kMaxOrder)
    throw Error(Errc::CapExceeded, "field order exceeds 2^62");
  if (!is_irreducible(modulus))
    throw Error(Errc::NotIrreducible, modulus.to_string() + " is reducible over " + base.describe());

  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = base.characteristic();
  impl->base = base.impl_;
  impl->modulus = modulus.coeffs();
  impl->degree = d;
  impl->abs_degree = base.absolute_degree() * d;
  impl->order = *order;
  impl->base_order = base.order();
  impl->build_tables();
  return FieldCtx(std::move(impl));
}

u64 FieldCtx::characteristic() const { return impl_->p; }
Index FieldCtx::order() const { return impl_->order; }
unsigned FieldCtx::degree() const { return impl_->degree; }
unsigned FieldCtx::absolute_degree() const { return impl_->abs_degree; }
bool FieldCtx::is_prime_field() const { return impl_->is_prime(); }

FieldCtx FieldCtx::base() const {
  if (impl_->is_prime()) throw Error(Errc::InvalidArgument, "prime field has no base level");
  return FieldCtx(impl_->base);
}

Poly FieldCtx::modulus() const {
  if (impl_->is_prime()) throw Error(Errc::InvalidArgument, "prime field has no modulus");
  return Poly(base(), impl_->modulus);
}

std::vector<FieldCtx> FieldCtx::tower() const {
  std::vector<FieldCtx> levels;
  for (auto cur = impl_; cur; cur = cur->base) levels.push_back(FieldCtx(cur));
  return {levels.rbegin(), levels.rend()};
}

bool FieldCtx::has_ancestor(const FieldCtx& other) const {
  for (auto cur = impl_; cur; cur = cur->base)
    if (cur == other.impl_) return true;
  return false;
}

FieldElem FieldCtx::zero() const { return FieldElem(*this, 0); }
FieldElem FieldCtx::one() const { return FieldElem(*this, 1); }
FieldElem FieldCtx::elem(Index i) const { return FieldElem(*this, i); }

FieldElem FieldCtx::gen() const {
  if (impl_->is_prime()) throw Error(Errc::InvalidArgument, "prime field has no generator x");
  if (impl_->degree == 1) return FieldElem(*this, impl_->base->neg(impl_->modulus[0]));
  return FieldElem(*this, impl_->base_order);
}

FieldElem FieldCtx::embed(const FieldElem& sub) const {
  if (!has_ancestor(sub.ctx()))
    throw Error(Errc::ContextMismatch, "element field is not a subfield level of this tower");
  return FieldElem(*this, sub.index());
}

Index FieldCtx::add(Index a, Index b) const { return impl_->add(a, b); }
Index FieldCtx::sub(Index a, Index b) const { return impl_->sub(a, b); }
Index FieldCtx::neg(Index a) const { return impl_->neg(a); }
Index FieldCtx::mul(Index a, Index b) const { return impl_->mul(a, b); }
Index FieldCtx::inv(Index a) const { return impl_->inv(a); }
Index FieldCtx::pow(Index a, u64 e) const { return impl_->pow(a, e); }

Index FieldCtx::from_int(long long v) const {
  auto p = static_cast<long long>(impl_->p);
  long long r = v % p;
  return static_cast<Index>(r < 0 ? r + p : r);
}

std::vector<Index> FieldCtx::coefficients(Index a) const {
  std::vector<Index> c(impl_->degree);
  impl_->unpack(a, c.data());
  return c;
}

Index FieldCtx::from_coefficients(std::span<const Index> coeffs) const {
  if (coeffs.size() > impl_->degree)
    throw Error(Errc::InvalidArgument, "too many coefficients for this level");
  std::array<Index, kMaxDegree> c{};
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] >= impl_->base_order) throw Error(Errc::InvalidArgument, "coefficient index out of range");
    c[j] = coeffs[j];
  }
  if (impl_->is_prime()) return c[0];
  return impl_->pack(c.data());
}

const std::vector<Index>& FieldCtx::subfield_indices(Index sub_order) const {
  std::lock_guard lock(impl_->cache_mu);
  auto it = impl_->subfields.find(sub_order);
  if (it != impl_->subfields.end()) return it->second;
  if (sub_order < 2 || !power_of(sub_order, impl_->order))
    throw Error(Errc::InvalidArgument, "no subfield of order " + std::to_string(sub_order));
  std::vector<Index> members;
  for (Index e = 0; e < impl_->order; ++e)
    if (impl_->pow(e, sub_order) == e) members.push_back(e);
  return impl_->subfields.emplace(sub_order, std::move(members)).first->second;
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  auto name = [](u64 p, unsigned d) { return "GF(" + std::to_string(p) + (d > 1 ? "^" + std::to_string(d) : "") + ")"; };
  os << name(impl_->p, impl_->abs_degree);
  if (!impl_->is_prime()) {
    os << " = " << name(impl_->p, base().absolute_degree()) << "[x]/(" << modulus().to_string() << ")";
  }
  return os.str();
}

FieldElem::FieldElem(FieldCtx ctx, Index index) : ctx_(std::move(ctx)), index_(index) {
  if (index_ >= ctx_.order()) throw Error(Errc::InvalidArgument, "element index out of range");
}

void FieldElem::same_ctx(const FieldElem& o) const {
  if (!(ctx_ == o.ctx_)) throw Error(Errc::ContextMismatch, "elements belong to different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  same_ctx(o);
  return FieldElem(ctx_, ctx_.add(index_, o.index_));
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  same_ctx(o);
  return FieldElem(ctx_, ctx_.sub(index_, o.index_));
}
FieldElem FieldElem::operator-() const { return FieldElem(ctx_, ctx_.neg(index_)); }
FieldElem FieldElem::operator*(const FieldElem& o) const {
  same_ctx(o);
  return FieldElem(ctx_, ctx_.mul(index_, o.index_));
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  same_ctx(o);
  return FieldElem(ctx_, ctx_.mul(index_, ctx_.inv(o.index_)));
}
FieldElem FieldElem::inv() const { return FieldElem(ctx_, ctx_.inv(index_)); }
FieldElem FieldElem::pow(u64 e) const { return FieldElem(ctx_, ctx_.pow(index_, e)); }

FieldCtx make_prime_field(u64 p) { return FieldCtx::prime(p); }
FieldCtx extend(const FieldCtx& base, const Poly& modulus) { return FieldCtx::extend(base, modulus); }
FieldElem field_inv(const FieldElem& e) { return e.inv(); }

Poly find_irreducible(const FieldCtx& ctx, unsigned d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "degree must be >= 1");
  auto found = find_irreducible_if(ctx, d, [](const Poly&) { return true; }, 1);
  if (!found) throw Error(Errc::NotIrreducible, "no irreducible found");  // unreachable for finite fields
  return *found;
}

unsigned min_poly_degree(const FieldElem& e, Index sub_order) {
  const Index order = e.ctx().order();
  const auto n = sub_order < 2 ? std::nullopt : power_of(sub_order, order);
  if (!n)
    throw Error(Errc::InvalidArgument,
                "order " + std::to_string(sub_order) + " is not a subfield order of " + std::to_string(order));
  const FieldCtx& ctx = e.ctx();
  Index y = e.index();
  for (unsigned d = 1; d <= *n; ++d) {
    y = ctx.pow(y, sub_order);
    if (y == e.index()) return d;
  }
  return *n;  // unreachable: e^(|ctx|) = e
}

unsigned min_poly_degree(const FieldElem& e, const FieldCtx& sub) { return min_poly_degree(e, sub.order()); }

namespace {

bool generator_check(const FieldCtx& ctx, Index e, const std::vector<std::pair<u64, unsigned>>& factors) {
  if (e == 0) return false;
  const u64 group = ctx.order() - 1;
  for (const auto& [r, k] : factors) {
    (void)k;
    if (ctx.pow(e, group / r) == 1) return false;
  }
  return true;
}

}  // namespace

u64 multiplicative_order(const FieldElem& e) {
  if (e.is_zero()) throw Error(Errc::DivisionByZero, "zero has no multiplicative order");
  const FieldCtx& ctx = e.ctx();
  u64 ord = ctx.order() - 1;
  for (const auto& [r, k] : factorize(ord)) {
    for (unsigned i = 0; i < k && ctx.pow(e.index(), ord / r) == 1; ++i) ord /= r;
  }
  return ord;
}

FieldElem find_generator(const FieldCtx& ctx) {
  const auto factors = factorize(ctx.order() - 1);
  for (Index e = 1; e < ctx.order(); ++e)
    if (generator_check(ctx, e, factors)) return ctx.elem(e);
  throw Error(Errc::InvalidArgument, "no generator");  // unreachable
}

bool is_generator(const FieldElem& e) {
  return generator_check(e.ctx(), e.index(), factorize(e.ctx().order() - 1));
}

FieldCtx standard_field(u64 q) {
  auto pp = as_prime_power(q);
  if (!pp) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  FieldCtx fp = make_prime_field(pp->prime);
  return pp->exponent == 1 ? fp : standard_extension(fp, pp->exponent);
}

FieldCtx standard_extension(const FieldCtx& base, unsigned d) { return extend(base, find_irreducible(base, d)); }

}  // namespace rsdeep
