#include "rsdeep/constructions.hpp"

#include "rsdeep/bounds.hpp"
#include "rsdeep/certified.hpp"
#include "rsdeep/error.hpp"

namespace rsdeep {

const char* mode_name(ConstructionMode m) {
  switch (m) {
    case ConstructionMode::Thm12: return "thm12";
    case ConstructionMode::Thm13: return "thm13";
    case ConstructionMode::Composite: return "composite";
  }
  return "?";
}

const char* hform_name(HForm f) { return f == HForm::FourOverEps ? "4/eps" : "2/eps"; }

namespace {

mpz_class floor_root(const mpz_class& x, unsigned long n) {
  mpz_class r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), n);
  return r;
}

mpz_class zpow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

unsigned long to_ulong(const mpz_class& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) throw Error(Errc::CapExceeded, std::string(what) + " does not fit 64 bits");
  return v.get_ui();
}

u64 to_u64(const mpz_class& v, const char* what) { return to_ulong(v, what); }

// epsilon either as an exact rational or as 1/ln(ln_of).
struct EpsModel {
  std::optional<mpq_class> exact;
  u64 ln_of = 0;
};

enum class Tri { Yes, No, Unknown };

Tri decide(const mpq_class& lhs_lo, const mpq_class& lhs_hi, const mpq_class& rhs_lo, const mpq_class& rhs_hi) {
  if (lhs_hi <= rhs_lo) return Tri::Yes;
  if (lhs_lo > rhs_hi) return Tri::No;
  return Tri::Unknown;
}

template <class F>
bool certify(F attempt) {
  for (unsigned bits = 64; bits <= 8192; bits *= 2) {
    Tri t = attempt(bits);
    if (t != Tri::Unknown) return t == Tri::Yes;
  }
  throw Error(Errc::InvalidArgument, "comparison not decided at 8192 bits");
}

// base^(2 + eps) <= q1
bool power_ineq(u64 base, u64 q1, const EpsModel& eps) {
  if (eps.exact) return rational_power_le(mpz_class(base), mpq_class(2) + *eps.exact, mpz_class(q1));
  return certify([&](unsigned bits) {
    Enclosure lq = ln_enclosure(eps.ln_of, bits);
    Enclosure lb = ln_enclosure(base, bits);
    Enclosure l1 = ln_enclosure(q1, bits);
    mpq_class lo = (2 + 1 / lq.hi) * lb.lo;
    mpq_class hi = (2 + 1 / lq.lo) * lb.hi;
    return decide(lo, hi, l1.lo, l1.hi);
  });
}

// (4/eps + 2) s <= q1
bool coef_ineq(u64 s, u64 q1, const EpsModel& eps) {
  if (eps.exact) return (4 / *eps.exact + 2) * s <= mpq_class(q1);
  return certify([&](unsigned bits) {
    Enclosure lq = ln_enclosure(eps.ln_of, bits);
    mpq_class lo = (4 * lq.lo + 2) * s;
    mpq_class hi = (4 * lq.hi + 2) * s;
    return decide(lo, hi, mpq_class(q1), mpq_class(q1));
  });
}

// The four inequalities of Eq. (1) generalized to q = q1^m.
std::vector<Inequality> eq1(u64 q1, unsigned m, unsigned h, const mpq_class& c, const EpsModel& eps) {
  const std::string mh = std::to_string(m) + "h";
  std::vector<Inequality> out;
  const u64 mhv = static_cast<u64>(m) * h;
  out.push_back({"(" + mh + "-1)^(2+eps) <= q1", power_ineq(mhv - 1, q1, eps)});
  out.push_back({"(4/eps+2)(" + mh + "+1)^2 <= q1", coef_ineq((mhv + 1) * (mhv + 1), q1, eps)});
  // c^(-2/(2m-1)) <= q1  <=>  den^2 <= q1^(2m-1) num^2
  mpz_class num = c.get_num(), den = c.get_den();
  mpz_class q1z(q1);
  out.push_back({"c^(-2/" + std::to_string(2 * m - 1) + ") <= q1", den * den <= zpow(q1z, 2 * m - 1) * num * num});
  // (1-c)^(-1/(m-1)) <= q1  <=>  1 <= q1^(m-1) (1-c)
  std::string e1 = m == 2 ? "-1" : "-1/" + std::to_string(m - 1);
  out.push_back({"(1-c)^(" + e1 + ") <= q1", mpq_class(1) <= mpq_class(zpow(q1z, m - 1)) * (1 - c)});
  return out;
}

bool all_hold(const std::vector<Inequality>& v) {
  for (const auto& x : v)
    if (!x.holds) return false;
  return true;
}

std::string failing(const std::vector<Inequality>& v) {
  std::string s;
  for (const auto& x : v) {
    if (x.holds) continue;
    if (!s.empty()) s += "; ";
    s += x.name;
  }
  return s;
}

EpsilonValue inverse_ln(u64 q) {
  Enclosure l = ln_enclosure(q, 64);
  return {"1/ln(q)", 1 / l.hi, 1 / l.lo};
}

// h(x) of degree h over F_q whose root generates F_{q^h} over F_{q1}.
FieldCtx generating_extension(const FieldCtx& fq, unsigned h, u64 q1) {
  const u64 p = fq.characteristic();
  unsigned q1_deg = 0;
  for (u64 t = q1; t > 1; t /= p) ++q1_deg;
  const unsigned target = fq.absolute_degree() * h / q1_deg;
  std::optional<FieldCtx> found;
  auto hp = find_irreducible_if(
      fq, h,
      [&](const Poly& cand) {
        FieldCtx ext = extend(fq, cand);
        if (min_poly_degree(ext.gen(), q1) != target) return false;
        found = ext;
        return true;
      },
      100000);
  if (!hp) throw Error(Errc::SubfieldGenerationFailure, "no degree-" + std::to_string(h) + " irreducible over F_" +
                                                           std::to_string(fq.order()) + " has a root generating over F_" +
                                                           std::to_string(q1));
  return *found;
}

void build(ConstructionRecord& rec, FieldCtx ext, const ConstructOptions& opt) {
  Poly one = Poly::constant(ext.base(), 1);
  rec.ext = ext;
  rec.f = one;
  if (opt.emit_center) rec.center = build_center(DeepBallParams(ext, one, static_cast<unsigned>(rec.factor_count)));
}

mpq_class checked_unit_interval(const mpq_class& c, const char* name) {
  if (c <= 0 || c >= 1) throw Error(Errc::InvalidParams, std::string(name) + " must lie strictly between 0 and 1");
  return c;
}

// g1 = floor(q^(1/2m)), g2 = floor(cq) - g1 with 0 <= g2 <= q - q1
void split_g(ConstructionRecord& rec) {
  mpz_class gq = floor_q(rec.c * mpq_class(mpz_class(rec.q)));
  rec.g = to_u64(gq, "floor(cq)");
  rec.g1 = to_u64(floor_root(mpz_class(rec.q), 2 * rec.m), "g1");
  if (rec.g < rec.g1)
    throw Error(Errc::ConstraintUnsatisfiable,
                "binding inequality: 0 <= floor(cq) - floor(q^(1/2m)) (floor(cq)=" + std::to_string(rec.g) +
                    ", g1=" + std::to_string(rec.g1) + ")");
  rec.g2 = rec.g - rec.g1;
  if (rec.g2 > rec.q - rec.q1)
    throw Error(Errc::ConstraintUnsatisfiable, "binding inequality: floor(cq) - floor(q^(1/2m)) <= q - q^(1/m) (g2=" +
                                                   std::to_string(rec.g2) + ", q-q1=" + std::to_string(rec.q - rec.q1) +
                                                   ")");
  if (rec.g <= rec.h)
    throw Error(Errc::ConstraintUnsatisfiable, "floor(cq) = " + std::to_string(rec.g) + " must exceed h");
  rec.k = rec.g - rec.h;
  rec.radius = rec.q - rec.g;
  rec.factor_count = rec.g;
}

}  // namespace

mpz_class ceil_rational_root(const mpz_class& x, const mpq_class& e) {
  if (e <= 0 || x < 0) throw Error(Errc::InvalidArgument, "ceil_rational_root needs x >= 0, e > 0");
  // n^(a/b) >= x  <=>  n^a >= x^b
  unsigned long a = to_ulong(e.get_num(), "exponent"), b = to_ulong(e.get_den(), "exponent");
  mpz_class xb = zpow(x, b);
  mpz_class r = floor_root(xb, a);
  if (zpow(r, a) < xb) ++r;
  return r;
}

u64 least_prime_power_above(const mpq_class& x, const mpq_class& e) {
  if (x <= 0 || e <= 0) throw Error(Errc::InvalidArgument, "least_prime_power_above needs x, e > 0");
  // n > x^(a/b)  <=>  n^b > x^a  <=>  n^b > floor(x^a) for integer n
  unsigned long a = to_ulong(e.get_num(), "exponent"), b = to_ulong(e.get_den(), "exponent");
  mpz_class z = zpow(x.get_num(), a) / zpow(x.get_den(), a);
  mpz_class n = floor_root(z, b) + 1;
  return next_prime_power(to_u64(n, "threshold"));
}

ConstructionRecord thm12_parameters(u64 i, const mpq_class& c) {
  checked_unit_interval(c, "c");
  if (i < 1) throw Error(Errc::InvalidParams, "i must be >= 1");
  ConstructionRecord rec;
  rec.mode = ConstructionMode::Thm12;
  rec.i = i;
  rec.c = c;
  rec.m = 2;
  rec.q1 = nth_prime_power(i);
  auto q = checked_mul(rec.q1, rec.q1);
  if (!q) throw Error(Errc::CapExceeded, "q1^2 overflows");
  rec.q = *q;
  rec.eps = inverse_ln(rec.q);
  EpsModel eps{std::nullopt, rec.q};

  auto at2 = eq1(rec.q1, 2, 2, c, eps);
  if (!all_hold(at2))
    throw Error(Errc::ConstraintUnsatisfiable, "i=" + std::to_string(i) + " q1=" + std::to_string(rec.q1) +
                                                   ": no h >= 2 satisfies Eq. (1); binding inequality: " +
                                                   failing(at2));
  unsigned h = 2;
  auto best = at2;
  for (;;) {
    auto next = eq1(rec.q1, 2, h + 1, c, eps);
    if (!all_hold(next)) break;
    ++h;
    best = std::move(next);
  }
  rec.h = h;
  rec.inequalities = std::move(best);
  split_g(rec);
  rec.bound = n_composite_formula(rec.q1, 2, static_cast<unsigned>(rec.g1), rec.g2, h);
  return rec;
}

ConstructionRecord construct_thm12(u64 i, const mpq_class& c, const ConstructOptions& opt) {
  ConstructionRecord rec = thm12_parameters(i, c);
  FieldCtx f1 = standard_field(rec.q1);
  FieldCtx fq = standard_extension(f1, 2);
  FieldCtx ext = generating_extension(fq, rec.h, rec.q1);
  rec.alpha_degree = min_poly_degree(ext.gen(), rec.q1);
  build(rec, ext, opt);
  return rec;
}

ConstructionRecord thm13_parameters(u64 i, const mpq_class& rho, HForm form) {
  if (rho <= mpq_class(2, 3) || rho >= 1) throw Error(Errc::InvalidParams, "rho must lie strictly between 2/3 and 1");
  if (i < 1) throw Error(Errc::InvalidParams, "i must be >= 1");
  ConstructionRecord rec;
  rec.mode = ConstructionMode::Thm13;
  rec.i = i;
  rec.rho = rho;
  rec.h_form = form;
  mpq_class eps = 4 * (1 - rho) / (3 * rho - 2);
  eps.canonicalize();
  rec.eps = {"4(1-rho)/(3rho-2)", eps, eps};
  const mpq_class two_eps = 2 + eps;
  mpq_class base = 2 * two_eps * i / eps;
  rec.q = least_prime_power_above(base, two_eps);
  rec.q1 = rec.q;
  rec.g = to_u64(ceil_rational_root(mpz_class(rec.q), two_eps), "g");

  const mpq_class coef = (form == HForm::FourOverEps ? 4 : 2) / eps + 2;
  // largest h with ceil(coef (h+1)) <= g, i.e. coef (h+1) <= g
  mpz_class hz = floor_q(mpq_class(mpz_class(rec.g)) / coef) - 1;
  const std::string hname = std::string("ceil((") + (form == HForm::FourOverEps ? "4" : "2") + "/eps+2)(h+1)) <= g";
  if (hz < 2)
    throw Error(Errc::ConstraintUnsatisfiable, "i=" + std::to_string(i) + " q=" + std::to_string(rec.q) +
                                                   " g=" + std::to_string(rec.g) + ": largest h with " + hname +
                                                   " is " + hz.get_str() + "; binding inequality: h >= 2");
  rec.h = static_cast<unsigned>(to_ulong(hz, "h"));
  rec.inequalities.push_back({hname, true});
  rec.inequalities.push_back({"h >= 2", true});
  if (rec.g + rec.h >= rec.q) throw Error(Errc::ConstraintUnsatisfiable, "g + h must be below q");
  rec.k = rec.q - rec.g - rec.h;
  rec.radius = to_u64(floor_q(rho * mpq_class(mpz_class(rec.q - rec.k + 1))), "radius");
  if (rec.g > rec.radius)
    throw Error(Errc::ConstraintUnsatisfiable, "i=" + std::to_string(i) + ": binding inequality: g <= floor(rho(q-k+1)) (g=" +
                                                   std::to_string(rec.g) + ", radius=" + std::to_string(rec.radius) +
                                                   ")");
  rec.inequalities.push_back({"g <= floor(rho(q-k+1))", true});
  rec.factor_count = rec.q - rec.g;
  rec.bound = n_formula(rec.q, static_cast<unsigned>(rec.g), rec.h);
  rec.bound_ge_q_pow_i = rec.bound >= mpq_class(zpow(mpz_class(rec.q), i));
  return rec;
}

ConstructionRecord construct_thm13(u64 i, const mpq_class& rho, HForm form, const ConstructOptions& opt) {
  ConstructionRecord rec = thm13_parameters(i, rho, form);
  FieldCtx fq = standard_field(rec.q);
  FieldCtx ext = standard_extension(fq, rec.h);
  build(rec, ext, opt);
  return rec;
}

ConstructionRecord construct_composite(u64 q1, unsigned m, const mpq_class& c, unsigned h,
                                       const CompositeOptions& opt) {
  if (!as_prime_power(q1)) throw Error(Errc::InvalidParams, std::to_string(q1) + " is not a prime power");
  if (m < 2) throw Error(Errc::InvalidParams, "m must be >= 2");
  if (h < 2) throw Error(Errc::InvalidParams, "h must be >= 2");
  checked_unit_interval(c, "c");
  ConstructionRecord rec;
  rec.mode = ConstructionMode::Composite;
  rec.c = c;
  rec.q1 = q1;
  rec.m = m;
  rec.h = h;
  rec.strict = opt.strict;
  auto q = checked_pow(q1, m);
  if (!q) throw Error(Errc::CapExceeded, "q1^m overflows");
  rec.q = *q;

  const u64 mh = static_cast<u64>(m) * h;
  const u64 s = (mh + 1) * (mh + 1);
  std::optional<mpq_class> eps = opt.eps;
  if (eps && *eps <= 0) throw Error(Errc::InvalidParams, "eps must be positive");
  if (eps) {
    rec.eps = {"given", *eps, *eps};
  } else if (q1 > 2 * s) {
    // least eps with (4/eps + 2) s <= q1
    eps = mpq_class(4 * s, q1 - 2 * s);
    eps->canonicalize();
    rec.eps = {"4(mh+1)^2/(q1-2(mh+1)^2)", *eps, *eps};
  } else {
    rec.eps = {"none", 0, 0};
  }
  if (eps) {
    rec.inequalities = eq1(q1, m, h, c, EpsModel{eps, 0});
  } else {
    // no eps > 0 satisfies the coefficient inequality; the power inequality
    // is taken at its infimum eps -> 0
    rec.inequalities = eq1(q1, m, h, c, EpsModel{mpq_class(1), 0});
    rec.inequalities[0] = {"(" + std::to_string(m) + "h-1)^2 <= q1", mh * mh - 2 * mh + 1 <= q1};
    rec.inequalities[1].holds = false;
  }
  if (!all_hold(rec.inequalities)) {
    if (opt.strict)
      throw Error(Errc::ConstraintUnsatisfiable, "q1=" + std::to_string(q1) + " m=" + std::to_string(m) +
                                                     " h=" + std::to_string(h) +
                                                     ": binding inequality: " + failing(rec.inequalities));
    for (const auto& x : rec.inequalities)
      if (!x.holds) rec.waivers.push_back(x.name);
  }
  split_g(rec);
  rec.bound = n_composite_formula(q1, m, static_cast<unsigned>(rec.g1), rec.g2, h);

  FieldCtx f1 = standard_field(q1);
  FieldCtx fq = standard_extension(f1, m);
  FieldCtx ext = generating_extension(fq, h, q1);
  rec.alpha_degree = min_poly_degree(ext.gen(), q1);
  build(rec, ext, opt.build);
  return rec;
}

u64 smallest_feasible_thm12(const mpq_class& c, u64 from, u64 limit) {
  for (u64 i = from; i < from + limit; ++i) {
    try {
      thm12_parameters(i, c);
      return i;
    } catch (const Error& e) {
      if (e.code() != Errc::ConstraintUnsatisfiable) throw;
    }
  }
  throw Error(Errc::Exhausted, "no feasible i in range");
}

u64 smallest_feasible_thm13(const mpq_class& rho, HForm form, u64 from, u64 limit) {
  for (u64 i = from; i < from + limit; ++i) {
    try {
      thm13_parameters(i, rho, form);
      return i;
    } catch (const Error& e) {
      if (e.code() != Errc::ConstraintUnsatisfiable) throw;
    }
  }
  throw Error(Errc::Exhausted, "no feasible i in range");
}

bool center_matches(const ConstructionRecord& rec) {
  if (!rec.center || !rec.ext || !rec.f) return false;
  const FieldCtx& ext = *rec.ext;
  const FieldCtx fq = ext.base();
  const Poly hp = ext.modulus();
  const Word& w = *rec.center;
  if (w.size() != fq.order()) return false;
  for (Index a = 0; a < fq.order(); ++a) {
    FieldElem x = fq.elem(a);
    FieldElem num = fq.zero(), den = fq.zero();
    for (auto it = rec.f->coeffs().rbegin(); it != rec.f->coeffs().rend(); ++it) num = num * x + fq.elem(*it);
    for (auto it = hp.coeffs().rbegin(); it != hp.coeffs().rend(); ++it) den = den * x + fq.elem(*it);
    FieldElem xk = fq.one();
    for (u64 e = rec.k; e; e >>= 1) {
      if (e & 1) xk = xk * x;
      x = x * x;
    }
    if ((num / den + xk).index() != w[a]) return false;
  }
  return true;
}

}  // namespace rsdeep
