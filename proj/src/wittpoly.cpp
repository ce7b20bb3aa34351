#include "witt/wittpoly.hpp"

#include <algorithm>
#include <set>

#include "witt/textio.hpp"

namespace witt {

static std::vector<std::string> canonical_lifted_names(unsigned level) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= level; ++i) {
    names.push_back("X" + std::to_string(i));
    names.push_back("Y" + std::to_string(i));
  }
  return names;
}

std::pair<std::vector<CPoly>, std::vector<CPoly>> gen_commutative_witt_polys(
    unsigned p, unsigned level) {
  if (!is_prime(p)) throw usage_error("gen_commutative_witt_polys: p must be prime");
  AlgebraPtr alg = Algebra::make(canonical_lifted_names(level));
  Int P(p);
  std::vector<CPoly> a, b;
  for (unsigned i = 0; i <= level; ++i) {
    a.push_back(CPoly::variable(alg, alg->var("X" + std::to_string(i))));
    b.push_back(CPoly::variable(alg, alg->var("Y" + std::to_string(i))));
  }
  auto family = [&](bool diff) {
    std::vector<CPoly> out;
    for (unsigned n = 0; n <= level; ++n) {
      // Ghost equation at level n, with the already-solved lower coordinates
      // moved to the other side; what remains must divide exactly by p^n.
      CPoly g = CPoly::zero(alg);
      for (unsigned i = 0; i <= n; ++i) {
        unsigned long e = 1;
        for (unsigned k = 0; k < n - i; ++k) e *= p;
        Int scale = int_pow(P, i);
        g += scale * a[i].pow(e);
        if (diff)
          g -= scale * b[i].pow(e);
        else
          g += scale * b[i].pow(e);
      }
      for (unsigned i = 0; i < n; ++i) {
        unsigned long e = 1;
        for (unsigned k = 0; k < n - i; ++k) e *= p;
        g -= int_pow(P, i) * out[i].pow(e);
      }
      out.push_back(g.exact_div_int(int_pow(P, n), "gen_commutative_witt_polys"));
    }
    return out;
  };
  return {family(false), family(true)};
}

// One family (sum or difference) of the cyclic-word recursion.
static std::vector<NcPoly> lift_family(unsigned p, unsigned level, const AlgebraPtr& alg,
                                       bool diff, std::span<const CPoly> comm,
                                       std::size_t max_terms) {
  Int P(p);
  std::vector<NcPoly> va, vb;
  for (unsigned i = 0; i <= level; ++i) {
    va.push_back(NcPoly::variable(alg, alg->var("X" + std::to_string(i))));
    vb.push_back(NcPoly::variable(alg, alg->var("Y" + std::to_string(i))));
  }
  WittContext ctx(p, level, alg, /*allow_even_prime=*/true);
  std::vector<NcPoly> out;
  for (unsigned n = 0; n <= level; ++n) {
    NcPoly g = NcPoly::zero(alg);
    for (unsigned i = 0; i <= n; ++i) {
      Int scale = int_pow(P, i);
      unsigned long e = ctx.p_pow(n - i);
      g += scale * va[i].pow(e, max_terms);
      if (diff)
        g -= scale * vb[i].pow(e, max_terms);
      else
        g += scale * vb[i].pow(e, max_terms);
    }
    for (unsigned i = 0; i < n; ++i)
      g -= int_pow(P, i) * out[i].pow(ctx.p_pow(n - i), max_terms);
    // The defect is p^n-divisible only as a cyclic-word class; divide there
    // and represent each class by its canonical rotation.
    NecklacePoly t = project(g).exact_div_int(int_pow(P, n), "lift_witt_polys");
    std::vector<NcPoly::Term> rep(t.terms().begin(), t.terms().end());
    NcPoly sn = NcPoly::from_terms(alg, std::move(rep));
    if (commutative_image(sn) != comm[n])
      throw std::logic_error("lift_witt_polys: commutative shadow mismatch");
    out.push_back(std::move(sn));
  }
  return out;
}

WittPolySet lift_witt_polys(unsigned p, std::span<const CPoly> s_comm,
                            std::span<const CPoly> d_comm,
                            std::vector<std::string> order, std::size_t max_terms) {
  if (!is_prime(p)) throw usage_error("lift_witt_polys: p must be prime");
  if (s_comm.empty() || s_comm.size() != d_comm.size())
    throw usage_error("lift_witt_polys: need matching nonempty coordinate families");
  unsigned level = static_cast<unsigned>(s_comm.size() - 1);

  std::vector<std::string> canonical = canonical_lifted_names(level);
  if (order.empty()) order = canonical;
  if (std::set<std::string>(order.begin(), order.end()) !=
      std::set<std::string>(canonical.begin(), canonical.end()))
    throw usage_error("lift_witt_polys: order must permute the lifted variable names");

  WittPolySet set;
  set.p = p;
  set.level = level;
  set.variable_order = order;
  set.lifted_alg = Algebra::make(order);
  set.pair_alg = Algebra::make({"X", "Y"});
  for (unsigned n = 0; n <= level; ++n) {
    set.s_comm.push_back(reindexed(s_comm[n], set.lifted_alg));
    set.d_comm.push_back(reindexed(d_comm[n], set.lifted_alg));
  }
  set.s = lift_family(p, level, set.lifted_alg, false, set.s_comm, max_terms);
  set.d = lift_family(p, level, set.lifted_alg, true, set.d_comm, max_terms);

  // Single-lift specializations: X0 -> X, Y0 -> Y, higher coordinates -> 0.
  std::map<VarId, NcPoly> spec;
  NcPoly zero = NcPoly::zero(set.pair_alg);
  for (unsigned i = 0; i <= level; ++i) {
    spec[set.lifted_alg->var("X" + std::to_string(i))] =
        i == 0 ? NcPoly::variable(set.pair_alg, set.pair_alg->var("X")) : zero;
    spec[set.lifted_alg->var("Y" + std::to_string(i))] =
        i == 0 ? NcPoly::variable(set.pair_alg, set.pair_alg->var("Y")) : zero;
  }
  for (unsigned n = 0; n <= level; ++n) {
    set.r.push_back(substitute(set.s[n], spec, max_terms));
    set.e.push_back(substitute(set.d[n], spec, max_terms));
  }
  return set;
}

WittPolySet make_witt_poly_set(unsigned p, unsigned level,
                               std::vector<std::string> order,
                               std::size_t max_terms) {
  auto [s_comm, d_comm] = gen_commutative_witt_polys(p, level);
  return lift_witt_polys(p, s_comm, d_comm, std::move(order), max_terms);
}

static WittCoords apply_coordinate_law(const WittCoords& a, const WittCoords& b,
                                       const WittPolySet& polys,
                                       const std::vector<NcPoly>& law) {
  if (a.size() != b.size())
    throw usage_error("witt_add/witt_sub: coordinate lengths differ");
  if (a.size() > polys.level + 1)
    throw usage_error("witt_add/witt_sub: coordinates exceed the set's level");
  AlgebraPtr target = require_same_context(a.algebra(), b.algebra(), "witt_add/witt_sub");
  std::map<VarId, NcPoly> assign;
  for (std::size_t i = 0; i < a.size(); ++i) {
    assign[polys.lifted_alg->var("X" + std::to_string(i))] = a[i];
    assign[polys.lifted_alg->var("Y" + std::to_string(i))] = b[i];
  }
  // A detached-zero coordinate pair would leave the context undetermined.
  if (target)
    for (auto& [v, img] : assign)
      if (img.is_zero() && !img.algebra()) assign[v] = NcPoly::zero(target);
  std::vector<NcPoly> out;
  out.reserve(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out.push_back(substitute(law[n], assign));
  return WittCoords(std::move(out));
}

WittCoords witt_add(const WittCoords& a, const WittCoords& b,
                    const WittPolySet& polys) {
  return apply_coordinate_law(a, b, polys, polys.s);
}

WittCoords witt_sub(const WittCoords& a, const WittCoords& b,
                    const WittPolySet& polys) {
  return apply_coordinate_law(a, b, polys, polys.d);
}

bool verify_witt_relation(const NcPoly& x, const NcPoly& y,
                          const WittPolySet& polys, const WittContext& ctx) {
  if (ctx.p() != polys.p)
    throw usage_error("verify_witt_relation: prime differs from the set's");
  if (ctx.level() > polys.level)
    throw usage_error("verify_witt_relation: level exceeds the set's");
  std::map<VarId, NcPoly> assign;
  assign[polys.pair_alg->var("X")] = x;
  assign[polys.pair_alg->var("Y")] = y;

  GhostVector gx = ghost_of_coords(teichmuller_coords(x, ctx), ctx);
  GhostVector gy = ghost_of_coords(teichmuller_coords(y, ctx), ctx);

  for (int diff = 0; diff < 2; ++diff) {
    const auto& law = diff ? polys.e : polys.r;
    std::vector<NcPoly> corrected;
    for (unsigned n = 0; n <= ctx.level(); ++n)
      corrected.push_back(substitute(law[n], assign));
    GhostVector got = ghost_of_coords(WittCoords(std::move(corrected)), ctx);
    for (unsigned n = 0; n <= ctx.level(); ++n) {
      NecklacePoly want = diff ? gx.components[n] - gy.components[n]
                               : gx.components[n] + gy.components[n];
      if (got.components[n] != want) return false;
    }
  }
  return true;
}

nlohmann::ordered_json to_json(const WittPolySet& set) {
  nlohmann::ordered_json j;
  j["schema"] = "witt-polyset";
  j["version"] = 1;
  j["p"] = set.p;
  j["N"] = set.level;
  j["variable_order"] = set.variable_order;
  auto dump = [](const std::vector<NcPoly>& v) {
    std::vector<std::string> out;
    for (const auto& f : v) out.push_back(to_string(f));
    return out;
  };
  j["s"] = dump(set.s);
  j["d"] = dump(set.d);
  j["r"] = dump(set.r);
  j["e"] = dump(set.e);
  return j;
}

template <typename J>
static WittPolySet from_json_impl(const J& j) {
  for (const char* key : {"schema", "version", "p", "N", "variable_order", "s", "d", "r", "e"})
    if (!j.contains(key))
      throw usage_error(std::string("witt-polyset: missing field '") + key + "'");
  if (j.at("schema").template get<std::string>() != "witt-polyset")
    throw usage_error("witt-polyset: wrong schema tag");
  if (j.at("version").template get<int>() != 1)
    throw usage_error("witt-polyset: unsupported version");
  unsigned p = j.at("p").template get<unsigned>();
  unsigned level = j.at("N").template get<unsigned>();
  std::vector<std::string> order =
      j.at("variable_order").template get<std::vector<std::string>>();

  // Re-derive the whole set, then require the file to agree with it. The
  // file is a transport format, not an independent source of truth.
  WittPolySet set = make_witt_poly_set(p, level, order);
  auto check = [&](const char* key, const std::vector<NcPoly>& have,
                   const AlgebraPtr& alg) {
    auto texts = j.at(key).template get<std::vector<std::string>>();
    if (texts.size() != level + 1)
      throw usage_error(std::string("witt-polyset: field '") + key +
                        "' must list level+1 polynomials");
    for (unsigned n = 0; n <= level; ++n)
      if (parse_ncpoly(texts[n], alg) != have[n])
        throw usage_error(std::string("witt-polyset: field '") + key +
                          "' entry " + std::to_string(n) +
                          " disagrees with the derived polynomial");
  };
  check("s", set.s, set.lifted_alg);
  check("d", set.d, set.lifted_alg);
  check("r", set.r, set.pair_alg);
  check("e", set.e, set.pair_alg);
  return set;
}

WittPolySet witt_poly_set_from_json(const nlohmann::json& j) {
  return from_json_impl(j);
}

}  // namespace witt
