// Command-line front end: coordinate-law generation, formal-element
// evaluation, identity verification, and the independence campaign.
//
// Exit codes: 0 success, 1 verification failure (an identity check or a
// conjecture verdict did not come out clean), 2 usage/parse error, 3 a
// resource guard stopped the computation.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "witt/indep.hpp"
#include "witt/report.hpp"
#include "witt/rng.hpp"
#include "witt/textio.hpp"
#include "witt/wittpoly.hpp"

namespace {

using namespace witt;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    // trim
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

void require_odd_or_flag(unsigned p, bool allow_p2) {
  if (p == 2 && !allow_p2)
    throw usage_error(
        "p = 2 requires --allow-p2: the structural identities assume p != 2");
  if (!is_prime(p)) throw usage_error("p must be prime");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw usage_error("cannot open output file '" + path + "'");
  return file;
}

// ----------------------------------------------------------- gen-witt-polys

struct GenOpts {
  unsigned p = 3;
  unsigned levels = 2;
  std::string order;
  std::string format = "text";
  std::string output;
  bool allow_p2 = false;
  std::size_t max_words = 0;  // 0: resolve from env
};

int cmd_gen(const GenOpts& o) {
  require_odd_or_flag(o.p, o.allow_p2);
  std::size_t guard = o.max_words ? o.max_words : guard_from_env().max_words;
  WittPolySet set =
      make_witt_poly_set(o.p, o.levels, split_csv(o.order), guard);
  std::ofstream file;
  std::ostream& out = open_output(o.output, file);
  if (o.format == "json") {
    out << to_json(set).dump(2) << "\n";
  } else if (o.format == "text") {
    out << "p = " << set.p << "\n";
    out << "N = " << set.level << "\n";
    std::string names;
    for (const auto& n : set.variable_order)
      names += (names.empty() ? "" : ",") + n;
    out << "variable_order = " << names << "\n";
    for (unsigned n = 0; n <= set.level; ++n)
      out << "s" << n << " = " << set.s[n] << "\n";
    for (unsigned n = 0; n <= set.level; ++n)
      out << "d" << n << " = " << set.d[n] << "\n";
    for (unsigned n = 0; n <= set.level; ++n)
      out << "r" << n << " = " << set.r[n] << "\n";
    for (unsigned n = 0; n <= set.level; ++n)
      out << "e" << n << " = " << set.e[n] << "\n";
  } else {
    throw usage_error("--format must be 'text' or 'json'");
  }
  return 0;
}

// -------------------------------------------------------------------- ghost

struct GhostOpts {
  unsigned p = 3;
  unsigned levels = 2;
  std::string expr;
  std::string vars;
  bool allow_p2 = false;
};

int cmd_ghost(const GhostOpts& o) {
  require_odd_or_flag(o.p, o.allow_p2);
  std::vector<std::string> names =
      o.vars.empty() ? scan_variable_names(o.expr) : split_csv(o.vars);
  if (names.empty())
    throw usage_error("no variables found; pass --vars or use some in the expression");
  AlgebraPtr alg = Algebra::make(names);
  WittContext ctx(o.p, o.levels, alg, o.allow_p2);
  FormalXElement e = parse_formal(o.expr, alg);
  std::vector<NcPoly> coords = evaluate_formal(e, ctx);
  for (unsigned n = 0; n <= ctx.level(); ++n)
    std::cout << "coord[" << n << "] = " << coords[n] << "\n";
  GhostVector g = ghost_of_coords(WittCoords(coords), ctx);
  for (unsigned n = 0; n <= ctx.level(); ++n)
    std::cout << "ghost[" << n << "] = " << to_string(g.components[n]) << "\n";
  auto obs = divisibility_obstruction(coords, ctx);
  std::cout << "obstruction = " << (obs ? std::to_string(*obs) : "unbounded")
            << "\n";
  return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyOpts {
  unsigned p = 3;
  unsigned levels = 2;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  bool allow_p2 = false;
};

NcPoly random_small_poly(DetRng& rng, const AlgebraPtr& alg, unsigned max_deg) {
  std::size_t nterms = 1 + rng.below(3);
  std::vector<NcPoly::Term> buf;
  static const std::vector<long> coeffs = {-2, -1, 1, 2};
  for (std::size_t t = 0; t < nterms; ++t) {
    Word w;
    std::size_t len = rng.below(max_deg + 1);
    for (std::size_t i = 0; i < len; ++i)
      w.push_back(static_cast<std::uint8_t>(rng.below(alg->size())));
    buf.emplace_back(std::move(w), Int(coeffs[rng.below(coeffs.size())]));
  }
  return NcPoly::from_terms(alg, std::move(buf));
}

WittCoords random_coords(DetRng& rng, const AlgebraPtr& alg, const WittContext& ctx) {
  std::vector<NcPoly> v;
  for (unsigned n = 0; n <= ctx.level(); ++n) {
    NcPoly f = random_small_poly(rng, alg, 2);
    v.push_back(f.is_zero() ? NcPoly::zero(alg) : f);
  }
  return WittCoords(std::move(v));
}

int cmd_verify(const VerifyOpts& o) {
  require_odd_or_flag(o.p, o.allow_p2);
  if (o.trials == 0) {
    std::cout << "warning: 0 trials requested; every check passes vacuously\n";
    return 0;
  }
  AlgebraPtr alg = Algebra::make({"X", "Y"});
  WittContext ctx(o.p, o.levels, alg, o.allow_p2);
  WittPolySet set = make_witt_poly_set(o.p, o.levels, {}, guard_from_env().max_words);
  DetRng rng(o.seed);
  std::size_t bad = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "ok: " : "FAIL: ") << name << " (" << o.trials
              << " trials)\n";
    if (!ok) ++bad;
  };

  bool relation_ok = true, add_ok = true, sub_ok = true, anti_ok = true,
       shift_ok = true;
  for (std::size_t t = 0; t < o.trials; ++t) {
    NcPoly x = random_small_poly(rng, alg, 2);
    NcPoly y = random_small_poly(rng, alg, 2);
    if (!verify_witt_relation(x, y, set, ctx)) relation_ok = false;

    WittCoords a = random_coords(rng, alg, ctx);
    WittCoords b = random_coords(rng, alg, ctx);
    GhostVector ga = ghost_of_coords(a, ctx), gb = ghost_of_coords(b, ctx);
    GhostVector gs = ghost_of_coords(witt_add(a, b, set), ctx);
    GhostVector gd = ghost_of_coords(witt_sub(a, b, set), ctx);
    for (unsigned n = 0; n <= ctx.level(); ++n) {
      if (gs.components[n] != ga.components[n] + gb.components[n]) add_ok = false;
      if (gd.components[n] != ga.components[n] - gb.components[n]) sub_ok = false;
    }

    if (o.p != 2) {
      std::vector<NcPoly> tx = teichmuller(x, ctx), tnx = teichmuller(-x, ctx);
      for (unsigned n = 0; n <= ctx.level(); ++n)
        if (tnx[n] != -tx[n]) anti_ok = false;
    }

    GhostVector gshift = ghost_of_coords(verschiebung_shift(a), ctx);
    if (!gshift.components[0].is_zero()) shift_ok = false;
    for (unsigned n = 1; n <= ctx.level(); ++n)
      if (gshift.components[n] != ctx.p_int() * ga.components[n - 1])
        shift_ok = false;
  }
  report("correction-polynomial relations (r and e)", relation_ok);
  report("ghost additivity of the coordinate sum", add_ok);
  report("ghost subtractivity of the coordinate difference", sub_ok);
  if (o.p != 2)
    report("lift anti-symmetry", anti_ok);
  else
    std::cout << "note: lift anti-symmetry skipped at p = 2\n";
  report("shift ghost relation", shift_ok);
  if (bad) {
    std::cout << "verify: " << bad << " check(s) failed\n";
    return 1;
  }
  std::cout << "verify: all checks passed\n";
  return 0;
}

// --------------------------------------------------------- check-conjecture

struct CheckOpts {
  unsigned p = 3;
  unsigned levels = 2;
  std::string vars = "X,Y";
  unsigned max_degree = 3;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string polys;
  std::string output;
  bool timings = false;
  bool allow_p2 = false;
  std::size_t max_words = 0;  // 0: resolve from env
};

int cmd_check(const CheckOpts& o) {
  require_odd_or_flag(o.p, o.allow_p2);
  GuardConfig guard = guard_from_env();
  if (o.max_words) guard.max_words = o.max_words;
  std::ofstream file;
  std::ostream& out = open_output(o.output, file);

  ReportTotals totals;
  nlohmann::ordered_json config;
  config["p"] = o.p;
  config["levels"] = o.levels;
  config["vars"] = split_csv(o.vars);
  config["max_degree"] = o.max_degree;
  config["seed"] = o.seed;
  config["max_words"] = guard.max_words;

  auto run_one = [&](std::size_t index, char family,
                     const IndependenceInstance& inst) {
    std::vector<std::string> texts;
    for (const auto& f : inst.polys) texts.push_back(to_string(f));
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = check_independence(inst, guard);
    auto t1 = std::chrono::steady_clock::now();
    std::optional<long long> millis;
    if (o.timings)
      millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out << report_record(index, family, texts, v, millis).dump() << "\n";
    tally(totals, v);
  };

  if (!o.polys.empty()) {
    // Explicit mode: one instance from semicolon-separated texts.
    config["mode"] = "explicit";
    AlgebraPtr alg = Algebra::make(split_csv(o.vars));
    std::vector<NcPoly> polys;
    std::string cur;
    std::istringstream in(o.polys);
    while (std::getline(in, cur, ';')) polys.push_back(parse_ncpoly(cur, alg));
    IndependenceInstance inst{o.p, std::move(polys), o.levels};
    validate_instance(inst);  // usage errors exit 2 before any output
    run_one(0, '-', inst);
  } else {
    config["mode"] = "sampled";
    config["samples"] = o.samples;
    SamplerConfig scfg;
    scfg.p = o.p;
    scfg.degree_bound = o.max_degree;
    scfg.count = o.samples;
    scfg.seed = o.seed;
    scfg.alphabet = split_csv(o.vars);
    scfg.max_level = o.levels;
    HardInstanceSampler sampler(scfg);
    while (auto s = sampler.next()) {
      if (!s->instance) {
        out << report_skipped(s->index, s->diagnostic).dump() << "\n";
        ++totals.skipped;
        continue;
      }
      run_one(s->index, s->family, *s->instance);
    }
  }
  out << report_summary(totals, config).dump() << "\n";
  if (totals.guard_tripped) return 3;
  return totals.undetermined == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coordinate arithmetic for multiplicative lifts over free algebras: "
      "universal sum/difference laws, ghost components in the cyclic-word "
      "quotient, and an exact independence checker"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* cgen = app.add_subcommand("gen-witt-polys",
                                  "Generate the coordinate law polynomials");
  cgen->add_option("--p", gen.p, "prime");
  cgen->add_option("--levels", gen.levels, "truncation level N");
  cgen->add_option("--order", gen.order, "lifted variable precedence (CSV)");
  cgen->add_option("--format", gen.format, "text|json");
  cgen->add_option("--output,-o", gen.output, "output file (default stdout)");
  cgen->add_flag("--allow-p2", gen.allow_p2, "permit p = 2");
  cgen->add_option("--max-words", gen.max_words,
                   "expansion guard (default: WITT_MAX_WORDS or 3000000)");

  GhostOpts ghost;
  auto* cghost = app.add_subcommand(
      "ghost", "Evaluate a formal combination of lifts and its ghost");
  cghost->add_option("expr", ghost.expr, "e.g. \"T(X+Y) + T(-X) + T(-Y) + V^1 T(Z)\"")
      ->required();
  cghost->add_option("--p", ghost.p, "prime");
  cghost->add_option("--levels", ghost.levels, "truncation level N");
  cghost->add_option("--vars", ghost.vars,
                     "variables (CSV; default: scanned from the expression)");
  cghost->add_flag("--allow-p2", ghost.allow_p2, "permit p = 2");

  VerifyOpts verify;
  auto* cverify =
      app.add_subcommand("verify", "Run the structural identity checks");
  cverify->add_option("--p", verify.p, "prime");
  cverify->add_option("--levels", verify.levels, "truncation level N");
  cverify->add_option("--trials", verify.trials, "random trials per check");
  cverify->add_option("--seed", verify.seed, "random seed");
  cverify->add_flag("--allow-p2", verify.allow_p2, "permit p = 2");

  CheckOpts check;
  auto* ccheck = app.add_subcommand(
      "check-conjecture",
      "Test independence of lifts on adversarial samples (JSONL report)");
  ccheck->add_option("--p", check.p, "prime");
  ccheck->add_option("--levels", check.levels, "deepest ghost level to test");
  ccheck->add_option("--vars", check.vars, "variables (CSV)");
  ccheck->add_option("--max-degree", check.max_degree, "word degree bound");
  ccheck->add_option("--samples", check.samples, "number of sampled instances");
  ccheck->add_option("--seed", check.seed, "random seed");
  ccheck->add_option("--polys", check.polys,
                     "explicit instance: semicolon-separated polynomials");
  ccheck->add_option("--output,-o", check.output, "report file (default stdout)");
  ccheck->add_flag("--timings", check.timings,
                   "include per-record millis (breaks byte determinism)");
  ccheck->add_flag("--allow-p2", check.allow_p2, "permit p = 2");
  ccheck->add_option("--max-words", check.max_words,
                     "expansion guard (default: WITT_MAX_WORDS or 3000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cgen) return cmd_gen(gen);
    if (*cghost) return cmd_ghost(ghost);
    if (*cverify) return cmd_verify(verify);
    if (*ccheck) return cmd_check(check);
  } catch (const resource_limit_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
