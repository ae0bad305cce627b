// rsdeep: command-line front end for the deep-ball / index-calculus library.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "rsdeep/constructions.hpp"
#include "rsdeep/deep_ball.hpp"
#include "rsdeep/dlog.hpp"
#include "rsdeep/error.hpp"
#include "rsdeep/factor_oracle.hpp"
#include "rsdeep/serialize.hpp"
#include "verify.hpp"

using namespace rsdeep;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsatisfiable = 3;
constexpr int kExitError = 4;

struct FieldFlags {
  u64 p = 0;
  unsigned ext_deg = 1;
  unsigned h_deg = 2;

  void add(CLI::App* cmd, bool with_h = true) {
    cmd->add_option("--p", p, "characteristic")->required();
    cmd->add_option("--ext-deg", ext_deg, "degree of F_q over F_p")->capture_default_str();
    if (with_h) cmd->add_option("--h-deg,--h", h_deg, "degree h of F_{q^h} over F_q")->capture_default_str();
  }
  FieldCtx base() const {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    FieldCtx fp = make_prime_field(p);
    return ext_deg == 1 ? fp : standard_extension(fp, ext_deg);
  }
  FieldCtx ext() const { return standard_extension(base(), h_deg); }
};

std::vector<Index> parse_indices(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("--f", "expected comma-separated indices");
    out.push_back(v);
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(Errc::InvalidArgument, "cannot write " + path);
  os << text;
}

std::string rational_text(const mpq_class& v) { return v.get_den() == 1 ? v.get_num().get_str() : v.get_str(); }

void print_record_summary(const ConstructionRecord& rec) {
  std::cout << "mode " << mode_name(rec.mode) << "\n";
  if (rec.mode != ConstructionMode::Composite) std::cout << "i " << rec.i << "\n";
  std::cout << "q " << rec.q << "\nq1 " << rec.q1 << "\nm " << rec.m << "\nh " << rec.h << "\ng " << rec.g << "\n";
  if (rec.mode != ConstructionMode::Thm13) std::cout << "g1 " << rec.g1 << "\ng2 " << rec.g2 << "\n";
  std::cout << "k " << rec.k << "\nradius " << rec.radius << "\n";
  if (rec.eps.exact())
    std::cout << "eps " << rational_text(rec.eps.lo) << " (" << rec.eps.definition << ")\n";
  else
    std::cout << "eps in [" << rational_text(rec.eps.lo) << ", " << rational_text(rec.eps.hi) << "] ("
              << rec.eps.definition << ", natural log)\n";
  if (rec.h_form) std::cout << "h_form " << hform_name(*rec.h_form) << "\n";
  for (const auto& x : rec.inequalities) std::cout << "inequality " << (x.holds ? "holds " : "fails ") << x.name << "\n";
  for (const auto& w : rec.waivers) std::cout << "waived " << w << "\n";
  if (rec.alpha_degree) std::cout << "alpha_degree_over_q1 " << rec.alpha_degree << "\n";
  if (rec.ext) std::cout << "h_poly " << rec.ext->modulus().to_string() << "\n";
  const std::string bound = floor_q(rec.bound).get_str();
  if (bound.size() <= 80)
    std::cout << "bound " << bound << " (floor)\n";
  else
    std::cout << "bound_digits " << bound.size() << " (exact value in the record file)\n";
  if (rec.mode == ConstructionMode::Thm13) std::cout << "bound >= q^i: " << (rec.bound_ge_q_pow_i ? "true" : "false") << "\n";
  if (rec.center) std::cout << "center_recomputed: " << (center_matches(rec) ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Solomon deep-ball centers, factorization counts and index calculus"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // frees -h; --h is an alias of --h-deg

  // field info
  FieldFlags field_flags;
  bool field_with_h = false;
  auto* field = app.add_subcommand("field", "finite-field utilities");
  field->require_subcommand(1);
  auto* field_info = field->add_subcommand("info", "describe F_q (and F_{q^h} with --h-deg)");
  field_info->add_option("--p", field_flags.p, "characteristic")->required();
  field_info->add_option("--ext-deg", field_flags.ext_deg, "degree of F_q over F_p");
  field_info->add_option("--h-deg,--h", field_flags.h_deg, "degree of F_{q^h} over F_q")->each([&](const std::string&) {
    field_with_h = true;
  });

  // center build
  FieldFlags center_flags;
  unsigned center_g = 0;
  std::string center_f = "1", center_out;
  auto* center = app.add_subcommand("center", "received words u_f");
  center->require_subcommand(1);
  auto* center_build = center->add_subcommand("build", "build the center u_f");
  center_flags.add(center_build);
  center_build->add_option("--g", center_g, "number of linear factors")->required();
  center_build->add_option("--f", center_f, "f as comma-separated coefficient indices, constant first");
  center_build->add_option("--out", center_out, "output file (default stdout)");

  // ball count
  FieldFlags ball_flags;
  unsigned ball_g = 0;
  std::string ball_f = "1";
  u64 ball_cap = kDefaultBruteCap;
  unsigned ball_threads = 1;
  auto* ball = app.add_subcommand("ball", "Hamming balls around u_f");
  ball->require_subcommand(1);
  auto* ball_count = ball->add_subcommand("count", "codewords at distance q-g from u_f, checked against the factor count");
  ball_flags.add(ball_count);
  ball_count->add_option("--g", ball_g, "number of linear factors")->required();
  ball_count->add_option("--f", ball_f, "f as comma-separated coefficient indices");
  ball_count->add_option("--cap", ball_cap, "maximum number of messages to enumerate");
  ball_count->add_option("--threads", ball_threads, "worker threads");

  // factor count / table
  FieldFlags factor_flags;
  unsigned factor_g = 0;
  Index factor_target = 0;
  std::string factor_method = "subsets", factor_out;
  u64 factor_cap = kDefaultSubsetCap;
  auto* factor = app.add_subcommand("factor", "factorizations into distinct linear factors");
  factor->require_subcommand(1);
  auto* factor_count = factor->add_subcommand("count", "count factor sets of size g with a given product");
  factor_flags.add(factor_count);
  factor_count->add_option("--g", factor_g, "set size")->required();
  factor_count->add_option("--target-index", factor_target, "canonical index of the target")->required();
  factor_count->add_option("--method", factor_method, "subsets | mitm | dp")
      ->check(CLI::IsMember({"subsets", "mitm", "dp"}));
  factor_count->add_option("--cap", factor_cap, "subset enumeration cap");
  FieldFlags table_flags;
  unsigned table_g = 0;
  std::string table_method = "dp";
  auto* factor_table = factor->add_subcommand("table", "counts for every target");
  table_flags.add(factor_table);
  factor_table->add_option("--g", table_g, "set size")->required();
  factor_table->add_option("--method", table_method, "dp | subsets")->check(CLI::IsMember({"dp", "subsets"}));
  factor_table->add_option("--cap", factor_cap, "subset enumeration cap");
  factor_table->add_option("--out", factor_out, "output file (default stdout)");

  // dual check
  FieldFlags dual_flags;
  unsigned dual_g = 0;
  auto* dual = app.add_subcommand("dual", "duality between g and q-g factor sets");
  dual->require_subcommand(1);
  auto* dual_check = dual->add_subcommand("check", "count(beta, q-g) == count(dual(beta), g) for every beta");
  dual_flags.add(dual_check);
  dual_check->add_option("--g", dual_g, "set size")->required();

  // dlog
  FieldFlags dlog_flags;
  unsigned dlog_g = 0;
  Index dlog_target = 0;
  u64 dlog_seed = 0, dlog_cap = kDefaultBruteCap;
  unsigned dlog_shifts = 32, dlog_retries = 5;
  std::string dlog_relations;
  auto* dlog_cmd = app.add_subcommand("dlog", "discrete logarithm through the decoding reduction");
  dlog_flags.add(dlog_cmd);
  dlog_cmd->add_option("--g", dlog_g, "number of linear factors")->required();
  dlog_cmd->add_option("--target-index", dlog_target, "canonical index of the target")->required();
  dlog_cmd->add_option("--seed", dlog_seed, "random seed")->capture_default_str();
  dlog_cmd->add_option("--cap", dlog_cap, "brute-force decoder cap");
  dlog_cmd->add_option("--target-shifts", dlog_shifts, "retry an undecodable target with seeded shifts")
      ->capture_default_str();
  dlog_cmd->add_option("--retries", dlog_retries, "solve attempts");
  dlog_cmd->add_option("--relations-out", dlog_relations, "write the relation log here");

  // construct
  auto* construct = app.add_subcommand("construct", "explicit parameter families");
  construct->require_subcommand(1);
  std::string out_path;
  bool no_center = false;
  u64 ci = 0;
  std::string c_text = "1/2", rho_text = "3/4", hform_text = "2";
  auto* thm12 = construct->add_subcommand("thm12", "positive-rate family, q = (i-th prime power)^2");
  thm12->add_option("--i", ci, "family index (default: smallest feasible)");
  thm12->add_option("--c", c_text, "rate c in (0,1)")->capture_default_str();
  auto* thm13 = construct->add_subcommand("thm13", "relative-radius family");
  thm13->add_option("--i", ci, "family index (default: smallest feasible)");
  thm13->add_option("--rho", rho_text, "relative radius in (2/3,1)")->capture_default_str();
  thm13->add_option("--h-form", hform_text, "h-solve coefficient: 2 for (2/eps+2), 4 for (4/eps+2)")
      ->check(CLI::IsMember({"2", "4"}))
      ->capture_default_str();
  u64 comp_q1 = 0;
  unsigned comp_m = 2, comp_h = 2;
  bool comp_strict = false;
  std::string comp_eps;
  auto* composite = construct->add_subcommand("composite", "q = q1^m with explicit h");
  composite->add_option("--q1", comp_q1, "subfield order")->required();
  composite->add_option("--m", comp_m, "q = q1^m")->capture_default_str();
  composite->add_option("--c", c_text, "rate c in (0,1)")->capture_default_str();
  composite->add_option("--h", comp_h, "extension degree h")->capture_default_str();
  composite->add_flag("--strict", comp_strict, "refuse instances violating the inequalities");
  composite->add_option("--eps", comp_eps, "epsilon (default: least feasible)");
  for (auto* sub : {thm12, thm13, composite}) {
    sub->add_option("--out", out_path, "record file");
    sub->add_flag("--no-center", no_center, "skip center evaluation");
  }

  // verify
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", vopt.suite, "fields|rs|deep_ball|partition|duality|dlog|composite|all|none")
      ->capture_default_str();
  verify->add_option("--max-order", vopt.max_order, "largest field order to touch")->capture_default_str();
  verify->add_option("--cap", vopt.cap, "brute-force cap")->capture_default_str();
  verify->add_option("--q", vopt.q, "base field order for the duality suite")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (field_info->parsed()) {
      FieldCtx fq = field_flags.base();
      std::cout << "field " << fq.describe() << "\norder " << fq.order() << "\ngenerator " << find_generator(fq).index()
                << "\n";
      if (field_with_h) {
        FieldCtx ext = standard_extension(fq, field_flags.h_deg);
        std::cout << "extension " << ext.describe() << "\norder " << ext.order() << "\ngenerator "
                  << find_generator(ext).index() << "\nalpha+0 index " << linear_factor(ext, 0) << "\n";
        std::cout << "tower " << field_to_json(ext).dump() << "\n";
      } else {
        std::cout << "tower " << field_to_json(fq).dump() << "\n";
      }
      return 0;
    }

    if (center_build->parsed()) {
      FieldCtx ext = center_flags.ext();
      DeepBallParams params(ext, Poly(ext.base(), parse_indices(center_f)), center_g);
      emit(center_out, center_to_json(params, build_center(params)).dump() + "\n");
      if (!center_out.empty()) std::cout << "k " << params.k() << "\nradius " << params.radius() << "\n";
      return 0;
    }

    if (ball_count->parsed()) {
      FieldCtx ext = ball_flags.ext();
      DeepBallParams params(ext, Poly(ext.base(), parse_indices(ball_f)), ball_g);
      const Word u = build_center(params);
      auto hits = list_decode_brute(params.code(), u, params.radius(), ball_cap, ball_threads);
      const u64 oracle = count_factorizations(ext, params.target(), ball_g);
      bool ok = true;
      for (const auto& hit : hits) {
        if (hit.distance != params.radius()) ok = false;
        auto s = codeword_to_factors(hit.message, params);
        if (!s) ok = false;
      }
      ok = ok && hits.size() == oracle;
      std::cout << "target " << params.target() << "\nradius " << params.radius() << "\ncodewords_at_radius "
                << hits.size() << "\nfactorizations " << oracle << "\nmatch: " << (ok ? "true" : "false") << "\n";
      return ok ? 0 : kExitVerify;
    }

    if (factor_count->parsed()) {
      FieldCtx ext = factor_flags.ext();
      if (factor_target >= ext.order()) throw Error(Errc::InvalidArgument, "target index out of range");
      std::string value;
      if (factor_method == "subsets")
        value = std::to_string(count_factorizations(ext, factor_target, factor_g, factor_cap));
      else if (factor_method == "mitm")
        value = std::to_string(count_mitm(ext, factor_target, factor_g, factor_cap));
      else
        value = count_all_dp(ext, factor_g)[factor_target].get_str();
      std::cout << "target " << factor_target << "\ng " << factor_g << "\ncount " << value << "\n";
      return 0;
    }

    if (factor_table->parsed()) {
      FieldCtx ext = table_flags.ext();
      CountTable t = table_method == "dp" ? count_all_dp(ext, table_g) : count_all_subsets(ext, table_g, factor_cap);
      std::ostringstream os;
      t.write(os);
      emit(factor_out, os.str());
      if (!factor_out.empty())
        std::cout << "total " << t.total().get_str() << "\nmin_nonzero_target " << t.min_nonzero_target().get_str()
                  << "\nzero_targets " << t.zero_targets() << "\n";
      return 0;
    }

    if (dual_check->parsed()) {
      FieldCtx ext = dual_flags.ext();
      const unsigned q = static_cast<unsigned>(ext.base().order());
      if (dual_g > q) throw Error(Errc::InvalidArgument, "g exceeds q");
      u64 mismatches = 0;
      for (Index beta = 1; beta < ext.order(); ++beta) {
        const Index d = dual_transform(ext.elem(beta)).index();
        const u64 lhs = count_factorizations(ext, beta, q - dual_g);
        const u64 rhs = count_factorizations(ext, d, dual_g);
        if (lhs != rhs) {
          ++mismatches;
          std::cout << "mismatch beta=" << beta << " dual=" << d << " " << lhs << " != " << rhs << "\n";
        }
      }
      std::cout << "checked " << ext.order() - 1 << "\nmismatches " << mismatches << "\n";
      return mismatches ? kExitVerify : 0;
    }

    if (dlog_cmd->parsed()) {
      FieldCtx ext = dlog_flags.ext();
      if (dlog_target == 0) throw Error(Errc::DivisionByZero, "target 0 has no logarithm");
      if (dlog_target >= ext.order()) throw Error(Errc::InvalidArgument, "target index out of range");
      DlogOptions opt;
      opt.seed = dlog_seed;
      opt.target_shifts = dlog_shifts;
      opt.retry_budget = dlog_retries;
      const Index base = find_generator(ext).index();
      DlogInstance inst(ext, base, dlog_g, std::make_shared<BruteForceDecoder>(dlog_cap), opt);
      std::cout << "field " << ext.describe() << "\nbase " << base << "\ng " << dlog_g << "\nseed " << dlog_seed << "\n";
      IndexCalculus ic(inst, &std::cout);
      const u64 x = ic.log(ext.elem(dlog_target));
      if (!dlog_relations.empty()) {
        std::ostringstream os;
        write_relations(os, ic.relations());
        emit(dlog_relations, os.str());
      }
      if (ext.order() <= 1'000'000) {
        const u64 bx = dlog_bruteforce(ext.elem(base), ext.elem(dlog_target));
        std::cout << "bruteforce x=" << bx << " agrees: " << (bx == x ? "true" : "false") << "\n";
        if (bx != x) return kExitVerify;
      }
      std::cout << "answer " << x << "\n";
      return 0;
    }

    if (thm12->parsed() || thm13->parsed() || composite->parsed()) {
      ConstructOptions build;
      build.emit_center = !no_center;
      ConstructionRecord rec;
      if (thm12->parsed()) {
        const mpq_class c = parse_rational(c_text);
        const u64 i = ci ? ci : smallest_feasible_thm12(c);
        rec = construct_thm12(i, c, build);
      } else if (thm13->parsed()) {
        const mpq_class rho = parse_rational(rho_text);
        const HForm form = hform_text == "4" ? HForm::FourOverEps : HForm::TwoOverEps;
        const u64 i = ci ? ci : smallest_feasible_thm13(rho, form);
        rec = construct_thm13(i, rho, form, build);
      } else {
        CompositeOptions opt;
        opt.strict = comp_strict;
        if (!comp_eps.empty()) opt.eps = parse_rational(comp_eps);
        opt.build = build;
        rec = construct_composite(comp_q1, comp_m, parse_rational(c_text), comp_h, opt);
      }
      print_record_summary(rec);
      if (!out_path.empty()) emit(out_path, record_to_json(rec).dump() + "\n");
      return 0;
    }

    if (verify->parsed()) {
      const int failures = run_verify(vopt, std::cout);
      return failures ? kExitVerify : 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ConstraintUnsatisfiable ? kExitUnsatisfiable : kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
