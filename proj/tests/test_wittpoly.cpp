#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/oracles.hpp"
#include "support/test_util.hpp"
#include "witt/textio.hpp"
#include "witt/wittpoly.hpp"

using namespace witt;
using testutil::constant_of;
using testutil::random_poly;
using testutil::to_oracle;

namespace {

AlgebraPtr xy() { return Algebra::make({"X", "Y"}); }

// Oracle variable order: all X coordinates, then all Y coordinates.
std::vector<std::string> oracle_names(unsigned level) {
  std::vector<std::string> out;
  for (unsigned i = 0; i <= level; ++i) out.push_back("X" + std::to_string(i));
  for (unsigned i = 0; i <= level; ++i) out.push_back("Y" + std::to_string(i));
  return out;
}

WittCoords random_coords(DetRng& rng, const AlgebraPtr& alg, unsigned level,
                         unsigned max_len) {
  std::vector<NcPoly> c;
  for (unsigned i = 0; i <= level; ++i) c.push_back(random_poly(rng, alg, max_len, 3));
  return WittCoords(std::move(c));
}

NecklacePoly ghost_comp_sum(const GhostVector& a, const GhostVector& b, unsigned n,
                            bool subtract) {
  return subtract ? a.components[n] - b.components[n]
                  : a.components[n] + b.components[n];
}

}  // namespace

TEST_CASE("commutative coordinate laws match the rational ghost solve") {
  for (auto [p, level] : {std::pair{3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    auto [s, d] = gen_commutative_witt_polys(p, level);
    auto names = oracle_names(level);
    auto os = oracle::witt_law_polys(p, level, false);
    auto od = oracle::witt_law_polys(p, level, true);
    REQUIRE(s.size() == level + 1);
    for (unsigned n = 0; n <= level; ++n) {
      CHECK(to_oracle(s[n], names) == os[n]);
      CHECK(to_oracle(d[n], names) == od[n]);
    }
  }
  CHECK_THROWS_AS(gen_commutative_witt_polys(4, 1), usage_error);
}

TEST_CASE("fixed texts of the small laws") {
  WittPolySet set = make_witt_poly_set(3, 2);
  CHECK(to_string(set.s_comm[0]) == "X0 + Y0");
  CHECK(to_string(set.s_comm[1]) == "X1 + Y1 - X0^2*Y0 - X0*Y0^2");
  CHECK(to_string(set.d_comm[1]) == "X1 - Y1 + X0^2*Y0 - X0*Y0^2");
  CHECK(to_string(set.s[0]) == "X0 + Y0");
  CHECK(to_string(set.s[1]) == "X1 + Y1 - X0*X0*Y0 - X0*Y0*Y0");
  CHECK(to_string(set.r[0]) == "X + Y");
  CHECK(to_string(set.r[1]) == "-X*X*Y - X*Y*Y");
  CHECK(to_string(set.e[0]) == "X - Y");
  CHECK(to_string(set.e[1]) == "X*X*Y - X*Y*Y");
  CHECK(set.s[2].term_count() == 74);
  CHECK(set.r[2].term_count() == 54);
  for (const auto& [w, c] : set.r[2].terms()) {
    CHECK(c == -1);
    CHECK(w.size() == 9);
  }

  // At p = 5 the shadow coefficient 2 on X0^3*Y0^2 splits across the two
  // distinct cyclic classes of that composition, one representative each —
  // so the lift diverges from plain letter-sorting already at depth one.
  WittPolySet p5 = make_witt_poly_set(5, 1);
  CHECK(to_string(p5.s_comm[1]) ==
        "X1 + Y1 - X0^4*Y0 - 2*X0^3*Y0^2 - 2*X0^2*Y0^3 - X0*Y0^4");
  CHECK(to_string(p5.r[1]) ==
        "-X*X*X*X*Y - X*X*X*Y*Y - X*X*Y*X*Y - X*X*Y*Y*Y - X*Y*X*Y*Y - X*Y*Y*Y*Y");
  CHECK(p5.s[1] != sorted_lift(p5.s_comm[1]));
  CHECK(commutative_image(p5.s[1]) == p5.s_comm[1]);
  for (const auto& [w, c] : p5.r[1].terms()) CHECK(c == -1);
}

TEST_CASE("the lift shadows back onto the commutative laws") {
  WittPolySet set = make_witt_poly_set(3, 2);
  for (unsigned n = 0; n <= 2; ++n) {
    CHECK(commutative_image(set.s[n]) == set.s_comm[n]);
    CHECK(commutative_image(set.d[n]) == set.d_comm[n]);
  }
}

TEST_CASE("letter-sorting the commutative law stops working at depth two") {
  WittPolySet set = make_witt_poly_set(3, 2);
  CHECK(set.s[0] == sorted_lift(set.s_comm[0]));
  CHECK(set.s[1] == sorted_lift(set.s_comm[1]));
  CHECK(set.s[2] != sorted_lift(set.s_comm[2]));

  // The naive lift has the right shadow but the wrong ghost: its depth-two
  // defect is not even a sum of commutators, so no choice of representative
  // rescues it.
  WittContext ctx(3, 2, set.lifted_alg);
  std::vector<NcPoly> xc, yc, naive, corrected;
  for (unsigned i = 0; i <= 2; ++i) {
    xc.push_back(NcPoly::variable(set.lifted_alg, VarId{static_cast<std::uint8_t>(2 * i)}));
    yc.push_back(NcPoly::variable(set.lifted_alg, VarId{static_cast<std::uint8_t>(2 * i + 1)}));
    naive.push_back(sorted_lift(set.s_comm[i]));
    corrected.push_back(set.s[i]);
  }
  auto gx = ghost_of_coords(WittCoords(xc), ctx);
  auto gy = ghost_of_coords(WittCoords(yc), ctx);
  auto gn = ghost_of_coords(WittCoords(naive), ctx);
  auto gc = ghost_of_coords(WittCoords(corrected), ctx);
  CHECK(gn.components[1] == gx.components[1] + gy.components[1]);
  CHECK(gn.components[2] != gx.components[2] + gy.components[2]);
  CHECK(gc.components[2] == gx.components[2] + gy.components[2]);
}

TEST_CASE("coordinate addition satisfies ghost additivity") {
  auto alg = xy();
  WittPolySet set = make_witt_poly_set(3, 2);
  WittContext ctx(3, 2, alg);
  DetRng rng(41);
  for (int i = 0; i < 10; ++i) {
    WittCoords a = random_coords(rng, alg, 2, 1);
    WittCoords b = random_coords(rng, alg, 2, 1);
    auto ga = ghost_of_coords(a, ctx);
    auto gb = ghost_of_coords(b, ctx);
    auto gsum = ghost_of_coords(witt_add(a, b, set), ctx);
    auto gdiff = ghost_of_coords(witt_sub(a, b, set), ctx);
    for (unsigned n = 0; n <= 2; ++n) {
      CHECK(gsum.components[n] == ghost_comp_sum(ga, gb, n, false));
      CHECK(gdiff.components[n] == ghost_comp_sum(ga, gb, n, true));
    }
  }
}

TEST_CASE("adding zero changes nothing; subtracting yourself ghosts to zero") {
  auto alg = xy();
  WittPolySet set = make_witt_poly_set(3, 2);
  WittContext ctx(3, 2, alg);
  DetRng rng(42);
  for (int i = 0; i < 10; ++i) {
    WittCoords a = random_coords(rng, alg, 2, 2);
    CHECK(witt_add(a, WittCoords::zero(ctx), set) == a);
    CHECK(witt_add(WittCoords::zero(ctx), a, set) == a);
    WittCoords diff = witt_sub(a, a, set);
    CHECK(diff[0].is_zero());
    CHECK(diff[1].is_zero());
    CHECK(is_commutator_sum(diff[2]));
    auto g = ghost_of_coords(diff, ctx);
    for (unsigned n = 0; n <= 2; ++n) CHECK(g.components[n].is_zero());
  }
}

TEST_CASE("constant coordinates reproduce classical Witt arithmetic") {
  auto alg = xy();
  WittPolySet set = make_witt_poly_set(3, 2);
  DetRng rng(43);
  for (int i = 0; i < 100; ++i) {
    std::vector<NcPoly> ac, bc;
    std::vector<mpz_class> ai, bi;
    for (unsigned n = 0; n <= 2; ++n) {
      long av = rng.range(-9, 9), bv = rng.range(-9, 9);
      ac.push_back(NcPoly::constant(alg, av));
      bc.push_back(NcPoly::constant(alg, bv));
      ai.emplace_back(av);
      bi.emplace_back(bv);
    }
    WittCoords a{ac}, b{bc};
    WittCoords sum = witt_add(a, b, set);
    WittCoords diff = witt_sub(a, b, set);
    auto osum = oracle::classical_witt_vec(ai, bi, 3, false);
    auto odiff = oracle::classical_witt_vec(ai, bi, 3, true);
    for (unsigned n = 0; n <= 2; ++n) {
      CHECK(constant_of(sum[n]) == osum[n]);
      CHECK(constant_of(diff[n]) == odiff[n]);
    }
    CHECK(witt_sub(sum, b, set) == a);
  }

  // The standard first carry: <1> + <1> at p = 3.
  WittPolySet n1 = make_witt_poly_set(3, 1);
  std::vector<NcPoly> one{NcPoly::one(alg), NcPoly::zero(alg)};
  WittCoords s = witt_add(WittCoords{one}, WittCoords{one}, n1);
  CHECK(constant_of(s[0]) == 2);
  CHECK(constant_of(s[1]) == -2);
}

TEST_CASE("single-lift correction polynomials verify on random pairs") {
  auto alg = xy();
  WittPolySet set = make_witt_poly_set(3, 2);
  WittContext ctx(3, 2, alg);
  DetRng rng(44);
  for (int i = 0; i < 20; ++i) {
    NcPoly x = random_poly(rng, alg, 1, 2);
    NcPoly y = random_poly(rng, alg, 1, 2);
    CHECK(verify_witt_relation(x, y, set, ctx));
  }
}

TEST_CASE("a tampered set fails verification") {
  auto alg = xy();
  WittPolySet set = make_witt_poly_set(3, 1);
  WittContext ctx(3, 1, alg);
  NcPoly x = NcPoly::variable(alg, VarId{0});
  NcPoly y = NcPoly::variable(alg, VarId{1});
  REQUIRE(verify_witt_relation(x, y, set, ctx));

  WittPolySet bad = set;
  bad.r[1] += NcPoly::one(bad.pair_alg);
  CHECK_FALSE(verify_witt_relation(x, y, bad, ctx));

  WittPolySet bad2 = set;
  bad2.e[1] = -bad2.e[1];
  CHECK_FALSE(verify_witt_relation(x, y, bad2, ctx));

  WittContext p5(5, 1, alg);
  CHECK_THROWS_AS(verify_witt_relation(x, y, set, p5), usage_error);
  WittContext deep(3, 2, alg);
  CHECK_THROWS_AS(verify_witt_relation(x, y, set, deep), usage_error);
}

TEST_CASE("coordinate-law inputs are validated") {
  auto alg = xy();
  WittPolySet set = make_witt_poly_set(3, 1);
  WittContext ctx1(3, 1, alg);
  WittContext ctx2(3, 2, alg);
  WittCoords a = WittCoords::zero(ctx1);
  WittCoords b = WittCoords::zero(ctx2);
  CHECK_THROWS_AS(witt_add(a, b, set), usage_error);
  CHECK_THROWS_AS(witt_add(b, b, set), usage_error);
  CHECK_THROWS_AS(make_witt_poly_set(6, 1), usage_error);
  CHECK_THROWS_AS(make_witt_poly_set(3, 2, {}, 10), resource_limit_error);
}

TEST_CASE("custom precedence steers rotation and lift tie-breaking") {
  WittPolySet set = make_witt_poly_set(3, 1, {"Y0", "X0", "Y1", "X1"});
  CHECK(set.variable_order == std::vector<std::string>{"Y0", "X0", "Y1", "X1"});
  // Canonical representatives follow the Y-first precedence; the printed
  // term order still follows the fixed (X, Y) pair alphabet.
  CHECK(to_string(set.r[1]) == "-Y*X*X - Y*Y*X");
  CHECK(commutative_image(set.s[1]) == reindexed(make_witt_poly_set(3, 1).s_comm[1],
                                                 set.lifted_alg));

  CHECK_THROWS_WITH_AS(make_witt_poly_set(3, 1, {"X0", "Y0"}),
                       doctest::Contains("permute"), usage_error);
  CHECK_THROWS_AS(make_witt_poly_set(3, 1, {"X0", "X0", "Y1", "X1"}), usage_error);
  CHECK_THROWS_AS(make_witt_poly_set(3, 1, {"A", "B", "C", "D"}), usage_error);
}

TEST_CASE("the even prime generates but is quarantined behind its flag") {
  WittPolySet set = make_witt_poly_set(2, 2);
  CHECK(to_string(set.s_comm[1]) == "X1 + Y1 - X0*Y0");
  CHECK(commutative_image(set.s[2]) == set.s_comm[2]);
  auto alg = xy();
  WittContext ctx(2, 1, alg, true);
  NcPoly x = NcPoly::variable(alg, VarId{0});
  NcPoly y = NcPoly::variable(alg, VarId{1});
  CHECK(verify_witt_relation(x, y, set, ctx));
}

TEST_CASE("serialization round-trips and is derivation-checked") {
  WittPolySet set = make_witt_poly_set(3, 2);
  auto j = to_json(set);
  CHECK(j.at("schema") == "witt-polyset");
  CHECK(j.at("version") == 1);
  CHECK(j.at("p") == 3);
  CHECK(j.at("N") == 2);

  WittPolySet back = witt_poly_set_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.s == set.s);
  CHECK(back.d == set.d);
  CHECK(back.r == set.r);
  CHECK(back.e == set.e);
  CHECK(back.variable_order == set.variable_order);

  // Serialization is deterministic down to the byte.
  CHECK(to_json(make_witt_poly_set(3, 2)).dump(2) == j.dump(2));

  nlohmann::json tampered = nlohmann::json::parse(j.dump());
  tampered["r"][1] = "-X*X*Y - X*Y*X";
  CHECK_THROWS_WITH_AS(witt_poly_set_from_json(tampered),
                       doctest::Contains("disagrees"), usage_error);

  nlohmann::json missing = nlohmann::json::parse(j.dump());
  missing.erase("d");
  CHECK_THROWS_WITH_AS(witt_poly_set_from_json(missing),
                       doctest::Contains("missing field"), usage_error);

  nlohmann::json vers = nlohmann::json::parse(j.dump());
  vers["version"] = 2;
  CHECK_THROWS_WITH_AS(witt_poly_set_from_json(vers),
                       doctest::Contains("unsupported version"), usage_error);

  nlohmann::json schema = nlohmann::json::parse(j.dump());
  schema["schema"] = "something-else";
  CHECK_THROWS_AS(witt_poly_set_from_json(schema), usage_error);
}

TEST_CASE("the checked-in law file matches a fresh derivation") {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/wittpolys_p3_l2.json");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == to_json(make_witt_poly_set(3, 2)).dump(2) + "\n");
  WittPolySet set = witt_poly_set_from_json(nlohmann::json::parse(buf.str()));
  CHECK(set.p == 3);
  CHECK(set.level == 2);
}
