#include "verify.hpp"

#include <functional>
#include <memory>
#include <stdexcept>

#include "rsdeep/deep_ball.hpp"
#include "rsdeep/dlog.hpp"
#include "rsdeep/error.hpp"
#include "rsdeep/factor_oracle.hpp"

using namespace rsdeep;

namespace {

struct Report {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& suite, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "PASS " : "FAIL ") << suite << " " << name << why << "\n";
    if (!ok) ++failures;
  }
  void skip(const std::string& suite, const std::string& name) { out << "SKIP " << suite << " " << name << "\n"; }
};

std::string tag(const FieldCtx& f) { return "q=" + std::to_string(f.order()); }

void fields_suite(const VerifyOptions& opt, Report& r) {
  for (u64 q = 2; q <= opt.max_order; ++q) {
    if (!as_prime_power(q)) continue;
    const u64 cube = q * q * q;
    if (cube > opt.cap) {
      r.skip("fields", "q=" + std::to_string(q) + " axioms");
      continue;
    }
    FieldCtx f = standard_field(q);
    r.check("fields", tag(f) + " axioms", [&] {
      for (Index a = 0; a < q; ++a) {
        if (f.add(a, f.neg(a)) != 0) return false;
        if (a && f.mul(a, f.inv(a)) != 1) return false;
        for (Index b = 0; b < q; ++b) {
          if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) return false;
          for (Index c = 0; c < q; ++c) {
            if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
            if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
          }
        }
      }
      return true;
    });
    r.check("fields", tag(f) + " generator", [&] { return multiplicative_order(find_generator(f)) == q - 1; });
    r.check("fields", tag(f) + " frobenius", [&] {
      for (Index a = 0; a < q; ++a)
        if (f.pow(a, q) != a) return false;
      return true;
    });
  }
}

void rs_suite(const VerifyOptions& opt, Report& r) {
  for (u64 q : {4, 5, 7, 8, 9}) {
    if (q > opt.max_order) continue;
    FieldCtx f = standard_field(q);
    for (unsigned k = 1; k <= 3; ++k) {
      RSCode code(f, k);
      const std::string name = tag(f) + " k=" + std::to_string(k) + " min_distance";
      if (message_count(code, opt.cap) > opt.cap) {
        r.skip("rs", name);
        continue;
      }
      r.check("rs", name, [&] {
        std::size_t best = code.length();
        const Word zero(f, std::vector<Index>(code.length(), 0));
        for (u64 m = 1; m < message_count(code, opt.cap); ++m)
          best = std::min(best, distance(encode(code, message_from_index(code, m)), zero));
        return best == code.min_distance();
      });
    }
  }
}

void deep_ball_suite(const VerifyOptions& opt, Report& r) {
  for (u64 q : {5, 7}) {
    if (q * q > opt.max_order) continue;
    FieldCtx fq = standard_field(q);
    FieldCtx ext = standard_extension(fq, 2);
    for (unsigned g : {3u, 4u}) {
      for (Index beta = 1; beta < ext.order(); ++beta) {
        DeepBallParams params(ext, representative(ext, beta), g);
        const std::string name = tag(fq) + " g=" + std::to_string(g) + " beta=" + std::to_string(beta);
        r.check("deep_ball", name + " bijection", [&] {
          const RSCode code = params.code();
          const Word u = build_center(params);
          std::size_t at_radius = 0;
          for (u64 m = 0; m < message_count(code, opt.cap); ++m) {
            Poly c = message_from_index(code, m);
            const std::size_t d = distance(encode(code, c), u);
            if (d < params.radius()) return false;
            if (d == params.radius()) {
              ++at_radius;
              auto s = codeword_to_factors(c, params);
              if (!s || !(factors_to_codeword(*s, params) == c)) return false;
            }
          }
          return at_radius == count_factorizations(ext, beta, g, opt.cap);
        });
      }
    }
  }
}

void partition_suite(const VerifyOptions& opt, Report& r) {
  for (u64 q : {5, 7, 9}) {
    if (q * q > opt.max_order) {
      r.skip("partition", "q=" + std::to_string(q));
      continue;
    }
    FieldCtx ext = standard_extension(standard_field(q), 2);
    for (unsigned g = 1; g <= 4; ++g) {
      r.check("partition", "q=" + std::to_string(q) + " g=" + std::to_string(g), [&] {
        const mpz_class want = binomial(q, g);
        CountTable dp = count_all_dp(ext, g);
        CountTable subsets = count_all_subsets(ext, g, opt.cap);
        return dp.total() == want && subsets.total() == want && dp.counts() == subsets.counts();
      });
    }
  }
}

void duality_suite(const VerifyOptions& opt, Report& r) {
  if (opt.q * opt.q > opt.max_order) {
    r.skip("duality", "q=" + std::to_string(opt.q));
    return;
  }
  FieldCtx ext = standard_extension(standard_field(opt.q), 2);
  for (unsigned g = 1; g <= 2 && g < opt.q; ++g) {
    r.check("duality", "q=" + std::to_string(opt.q) + " g=" + std::to_string(g), [&] {
      for (Index beta = 1; beta < ext.order(); ++beta) {
        const Index dual = dual_transform(ext.elem(beta)).index();
        if (count_factorizations(ext, beta, static_cast<unsigned>(opt.q) - g, opt.cap) !=
            count_factorizations(ext, dual, g, opt.cap))
          return false;
      }
      return true;
    });
  }
}

void dlog_suite(const VerifyOptions& opt, Report& r) {
  if (opt.max_order < 25) {
    r.skip("dlog", "q=5");
    return;
  }
  FieldCtx ext = standard_extension(standard_field(5), 2);
  DlogOptions dopt;
  dopt.seed = opt.seed;
  dopt.target_shifts = 16;
  DlogInstance inst(ext, find_generator(ext).index(), 3, std::make_shared<BruteForceDecoder>(opt.cap), dopt);
  IndexCalculus ic(inst);
  for (Index t = 1; t < ext.order(); ++t) {
    r.check("dlog", "q=5 g=3 target=" + std::to_string(t),
            [&] { return ext.pow(inst.base(), ic.log(ext.elem(t))) == t; });
  }
}

void composite_suite(const VerifyOptions& opt, Report& r) {
  if (opt.max_order < 81) {
    r.skip("composite", "q1=3 m=2 h=2");
    return;
  }
  FieldCtx f3 = standard_field(3);
  FieldCtx f9 = standard_extension(f3, 2);
  FieldCtx f81 = standard_extension(f9, 2);
  r.check("composite", "q1=3 m=2 h=2 split<=count", [&] {
    auto parts = split_table_by_parts(f81, f3, 1, 3);
    auto subsets = split_table_by_subsets(f81, f3, 1, 3, opt.cap);
    if (parts != subsets) return false;
    for (Index beta = 1; beta < f81.order(); ++beta)
      if (parts[beta] > count_factorizations(f81, beta, 4, opt.cap)) return false;
    return true;
  });
}

}  // namespace

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  static const std::vector<std::pair<std::string, void (*)(const VerifyOptions&, Report&)>> suites = {
      {"fields", fields_suite},       {"rs", rs_suite},     {"deep_ball", deep_ball_suite},
      {"partition", partition_suite}, {"duality", duality_suite}, {"dlog", dlog_suite},
      {"composite", composite_suite},
  };
  Report r{out};
  if (opt.suite == "none") return 0;
  bool matched = false;
  for (const auto& [name, run] : suites) {
    if (opt.suite != "all" && opt.suite != name) continue;
    matched = true;
    run(opt, r);
  }
  if (!matched) throw std::invalid_argument("unknown suite " + opt.suite);
  return r.failures;
}
