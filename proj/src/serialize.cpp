#include "rsdeep/serialize.hpp"

#include "rsdeep/error.hpp"

namespace rsdeep {

namespace {

template <class F>
auto parsing(F body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

std::vector<Index> indices(const json& j) { return j.get<std::vector<Index>>(); }

json inequalities_to_json(const std::vector<Inequality>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back({{"name", x.name}, {"holds", x.holds}});
  return out;
}

}  // namespace

json field_to_json(const FieldCtx& ctx) {
  json tower = json::array();
  for (const FieldCtx& level : ctx.tower()) {
    if (level.is_prime_field()) continue;
    tower.push_back(poly_to_json(level.modulus()));
  }
  return {{"p", ctx.characteristic()}, {"tower", tower}};
}

FieldCtx field_from_json(const json& j) {
  return parsing([&] {
    FieldCtx ctx = make_prime_field(j.at("p").get<u64>());
    for (const json& m : j.at("tower")) ctx = extend(ctx, poly_from_json(ctx, m));
    return ctx;
  });
}

json poly_to_json(const Poly& p) { return json(p.coeffs()); }

Poly poly_from_json(const FieldCtx& ctx, const json& j) {
  return parsing([&] {
    std::vector<Index> c = indices(j);
    for (Index v : c)
      if (v >= ctx.order()) throw Error(Errc::Parse, "coefficient index out of range");
    return Poly(ctx, std::move(c));
  });
}

json rational_to_json(const mpq_class& v) { return {{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}}; }

mpq_class rational_from_json(const json& j) {
  return parsing([&] {
    mpq_class v(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
    if (v.get_den() == 0) throw Error(Errc::Parse, "zero denominator");
    v.canonicalize();
    return v;
  });
}

json center_to_json(const DeepBallParams& params, const Word& center) {
  json j;
  j["field"] = field_to_json(params.ext());
  j["h_poly"] = poly_to_json(params.h_poly());
  j["f"] = poly_to_json(params.f());
  j["g"] = params.g();
  j["k"] = params.k();
  j["radius"] = params.radius();
  j["center"] = center.symbols();
  return j;
}

CenterRecord center_from_json(const json& j) {
  return parsing([&] {
    FieldCtx ext = field_from_json(j.at("field"));
    if (ext.is_prime_field()) throw Error(Errc::Parse, "center field must be an extension");
    if (poly_to_json(ext.modulus()) != j.at("h_poly")) throw Error(Errc::Parse, "h_poly differs from the tower top");
    FieldCtx fq = ext.base();
    DeepBallParams params(ext, poly_from_json(fq, j.at("f")), j.at("g").get<unsigned>());
    if (j.at("k").get<u64>() != params.k() || j.at("radius").get<u64>() != params.radius())
      throw Error(Errc::Parse, "k or radius inconsistent with g and h");
    Word center(fq, indices(j.at("center")));
    if (!(center == build_center(params))) throw Error(Errc::Parse, "center does not match its parameters");
    return CenterRecord{std::move(params), std::move(center)};
  });
}

json record_to_json(const ConstructionRecord& rec) {
  json j;
  j["mode"] = mode_name(rec.mode);
  if (rec.mode != ConstructionMode::Composite) j["i"] = rec.i;
  if (rec.mode == ConstructionMode::Thm13)
    j["rho"] = rational_to_json(rec.rho);
  else
    j["c"] = rational_to_json(rec.c);
  j["q"] = rec.q;
  j["q1"] = rec.q1;
  j["m"] = rec.m;
  j["h"] = rec.h;
  j["g"] = rec.g;
  if (rec.mode != ConstructionMode::Thm13) {
    j["g1"] = rec.g1;
    j["g2"] = rec.g2;
  }
  j["factor_count"] = rec.factor_count;
  j["k"] = rec.k;
  j["radius"] = rec.radius;
  json eps = {{"definition", rec.eps.definition}, {"log_base", "e"}, {"exact", rec.eps.exact()}};
  if (rec.eps.exact()) {
    eps["value"] = rational_to_json(rec.eps.lo);
  } else {
    eps["lower"] = rational_to_json(rec.eps.lo);
    eps["upper"] = rational_to_json(rec.eps.hi);
  }
  j["eps"] = eps;
  if (rec.h_form) j["h_form"] = hform_name(*rec.h_form);
  j["strict"] = rec.strict;
  j["inequalities"] = inequalities_to_json(rec.inequalities);
  j["waivers"] = rec.waivers;
  if (rec.alpha_degree) j["alpha_degree_over_q1"] = rec.alpha_degree;
  j["bound"] = rational_to_json(rec.bound);
  if (rec.mode == ConstructionMode::Thm13) j["bound_ge_q_pow_i"] = rec.bound_ge_q_pow_i;
  if (rec.ext) {
    j["field"] = field_to_json(*rec.ext);
    j["h_poly"] = poly_to_json(rec.ext->modulus());
  }
  if (rec.f) j["f"] = poly_to_json(*rec.f);
  if (rec.center) j["center"] = rec.center->symbols();
  return j;
}

ConstructionRecord record_from_json(const json& j) {
  return parsing([&] {
    ConstructionRecord rec;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "thm12")
      rec.mode = ConstructionMode::Thm12;
    else if (mode == "thm13")
      rec.mode = ConstructionMode::Thm13;
    else if (mode == "composite")
      rec.mode = ConstructionMode::Composite;
    else
      throw Error(Errc::Parse, "unknown mode " + mode);
    rec.i = j.value("i", u64{0});
    if (j.contains("rho")) rec.rho = rational_from_json(j.at("rho"));
    if (j.contains("c")) rec.c = rational_from_json(j.at("c"));
    rec.q = j.at("q").get<u64>();
    rec.q1 = j.at("q1").get<u64>();
    rec.m = j.at("m").get<unsigned>();
    rec.h = j.at("h").get<unsigned>();
    rec.g = j.at("g").get<u64>();
    rec.g1 = j.value("g1", u64{0});
    rec.g2 = j.value("g2", u64{0});
    rec.factor_count = j.at("factor_count").get<u64>();
    rec.k = j.at("k").get<u64>();
    rec.radius = j.at("radius").get<u64>();
    const json& eps = j.at("eps");
    rec.eps.definition = eps.at("definition").get<std::string>();
    if (eps.at("exact").get<bool>()) {
      rec.eps.lo = rec.eps.hi = rational_from_json(eps.at("value"));
    } else {
      rec.eps.lo = rational_from_json(eps.at("lower"));
      rec.eps.hi = rational_from_json(eps.at("upper"));
    }
    if (j.contains("h_form")) {
      const std::string f = j.at("h_form").get<std::string>();
      if (f == "4/eps")
        rec.h_form = HForm::FourOverEps;
      else if (f == "2/eps")
        rec.h_form = HForm::TwoOverEps;
      else
        throw Error(Errc::Parse, "unknown h_form " + f);
    }
    rec.strict = j.at("strict").get<bool>();
    for (const json& x : j.at("inequalities"))
      rec.inequalities.push_back({x.at("name").get<std::string>(), x.at("holds").get<bool>()});
    rec.waivers = j.at("waivers").get<std::vector<std::string>>();
    rec.alpha_degree = j.value("alpha_degree_over_q1", 0u);
    rec.bound = rational_from_json(j.at("bound"));
    rec.bound_ge_q_pow_i = j.value("bound_ge_q_pow_i", false);
    if (j.contains("field")) {
      FieldCtx ext = field_from_json(j.at("field"));
      if (poly_to_json(ext.modulus()) != j.at("h_poly")) throw Error(Errc::Parse, "h_poly differs from the tower top");
      rec.ext = ext;
      if (j.contains("f")) rec.f = poly_from_json(ext.base(), j.at("f"));
      if (j.contains("center")) rec.center = Word(ext.base(), indices(j.at("center")));
    }
    return rec;
  });
}

}  // namespace rsdeep
