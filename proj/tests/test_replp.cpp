#include <doctest.h>

#include <random>
#include <set>

#include "netrep/network.hpp"
#include "netrep/replp.hpp"

using namespace netrep;

TEST_CASE("dom_closure: singleton and saturation oracle") {
  // Single finite point: the sigma image alone is closed.
  CostFunction f = CostFunction::constant({"0", "1"}, 2, ExtRat::infinity());
  f.at({1, 0}) = ExtRat(0);
  const auto enc = Encoding::standard("star1");
  const auto dom = dom_closure(f, enc);
  CHECK(dom == std::vector<std::uint64_t>{enc.encode_tuple({1, 0})});

  // Finite everywhere under star1, n = 2: closure reaches all 16 points.
  const auto and2 = builtin_function("and2");
  CHECK(dom_closure(and2, enc).size() == 16);

  // bisub3 under the pair encoding: closure of the 27 images is all 64.
  CHECK(dom_closure(builtin_function("bisub3"), Encoding::standard("pair")).size() == 64);

  // Independent worklist oracle on a random partial function.
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    CostFunction g = CostFunction::constant({"0", "1"}, 2, ExtRat(0));
    for (std::size_t i = 0; i < g.table_size(); ++i) {
      if (rng() % 3 == 0) g.at_index(i) = ExtRat::infinity();
    }
    std::set<std::uint64_t> oracle;
    for (const Point& x : g.finite_points()) oracle.insert(enc.encode_tuple(x));
    bool changed = true;
    while (changed) {
      changed = false;
      const std::vector<std::uint64_t> snap(oracle.begin(), oracle.end());
      for (auto u : snap) {
        changed |= oracle.insert(enc.retract_blocks(u, 2)).second;
        for (auto v : snap) {
          changed |= oracle.insert(u & v).second;
          changed |= oracle.insert(u | v).second;
        }
      }
    }
    const auto got = dom_closure(g, enc);
    CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == oracle);
  }
}

TEST_CASE("build_system row counts") {
  {
    const auto built = build_system(builtin_function("and2"), Encoding::standard("star1"));
    CHECK(built.stats.num_vars == 16);
    CHECK(built.stats.eq_rows == 4);
    CHECK(built.stats.pair_rows == 16 * 15 / 2);
    CHECK(built.stats.rho_rows == 16);
  }
  {
    const auto built = build_system(builtin_function("ksub2", 3), Encoding::standard("unary", 3));
    CHECK(built.stats.num_vars == 64);
    CHECK(built.stats.eq_rows == 16);
    CHECK(built.stats.pair_rows == 2016);
    CHECK(built.stats.rho_rows == 64);
  }
  {
    // All-inf function: empty variable set, vacuously feasible.
    const auto allinf = CostFunction::constant({"0", "1"}, 2, ExtRat::infinity());
    const auto built = build_system(allinf, Encoding::standard("star1"));
    CHECK(built.stats.num_vars == 0);
    const auto decision = decide_representable(allinf, Encoding::standard("star1"));
    CHECK(decision.feasible);
  }
}

TEST_CASE("decide: and2 under star1 is representable with g(1010) = 1") {
  const auto decision = decide_representable(builtin_function("and2"), Encoding::standard("star1"));
  REQUIRE(decision.feasible);
  REQUIRE(decision.witness.has_value());
  CHECK(decision.witness->at_index(bits_from_string("1010")) == ExtRat(1));
  CHECK(verify_witness(*decision.witness, builtin_function("and2"), Encoding::standard("star1")));
}

TEST_CASE("decide: and3 is not representable under star1 or star2") {
  const auto f = builtin_function("and3");
  for (const char* name : {"star1", "star2"}) {
    const auto decision = decide_representable(f, Encoding::standard(name));
    CHECK_FALSE(decision.feasible);
    REQUIRE(decision.farkas.has_value());
    const auto built = build_system(f, Encoding::standard(name));
    CHECK(verify_farkas(built.sys, *decision.farkas));
  }
}

TEST_CASE("decide: bisub3 under the pair encoding is not representable") {
  const auto f = builtin_function("bisub3");
  const auto enc = Encoding::standard("pair");
  const auto decision = decide_representable(f, enc);
  CHECK_FALSE(decision.feasible);
  CHECK(decision.stats.num_vars == 64);
  CHECK(decision.stats.pair_rows == 2016);
  REQUIRE(decision.farkas.has_value());
  CHECK(verify_farkas(build_system(f, enc).sys, *decision.farkas));
}

TEST_CASE("decide: ksub2(3) under unary(3) is not representable") {
  const auto decision =
      decide_representable(builtin_function("ksub2", 3), Encoding::standard("unary", 3));
  CHECK_FALSE(decision.feasible);
  REQUIRE(decision.farkas.has_value());
}

TEST_CASE("decide: diamond distance representability per k") {
  // The 2-diamond is the distributive lattice {0,1}^2 and its encoding is
  // an isomorphism with an identity retraction, so the Hasse distance is
  // representable there (as a sum of two exclusive-or terms). From k = 3
  // on the diamond is non-distributive and the distance stops being
  // representable.
  {
    const auto f = builtin_function("diamond_distance", 2);
    const auto enc = Encoding::standard("diamond", 2);
    const auto decision = decide_representable(f, enc);
    CHECK(decision.feasible);
    CHECK(decision.stats.num_vars == 16);
    REQUIRE(decision.witness.has_value());
    CHECK(verify_witness(*decision.witness, f, enc));
    for (std::uint32_t v = 0; v < 4; ++v) CHECK(enc.rho(v) == v);  // identity retraction
  }
  {
    const auto decision = decide_representable(builtin_function("diamond_distance", 3),
                                               Encoding::standard("diamond", 3));
    CHECK_FALSE(decision.feasible);
    REQUIRE(decision.farkas.has_value());
    CHECK(decision.stats.num_vars == 64);
    CHECK(verify_farkas(build_system(builtin_function("diamond_distance", 3),
                                     Encoding::standard("diamond", 3))
                            .sys,
                        *decision.farkas));
  }
}

TEST_CASE("decide: gadget cut values give verifying witnesses") {
  // g(v) := c_min(v) - kappa over the closure is a witness for the
  // function the gadget represents.
  for (const char* name : {"h0", "h1", "h2", "halfpair"}) {
    const auto g = gadget(name);
    const auto f = eval_representation(g.net, g.n, g.enc, g.kappa);
    const int kn = g.n * g.enc.k();
    CostFunction wit = CostFunction::constant({"0", "1"}, kn, ExtRat::infinity());
    for (const std::uint64_t v : dom_closure(f, g.enc)) {
      const ExtRat cm = c_min(g.net, g.n, g.enc.k(), v);
      wit.at_index(v) = cm.is_inf() ? cm : ExtRat(cm.value() - g.kappa);
    }
    CHECK(verify_witness(wit, f, g.enc));
    // And the decision procedure agrees.
    CHECK(decide_representable(f, g.enc).feasible);
  }
}

TEST_CASE("verify_witness rejects a perturbed witness") {
  const auto f = builtin_function("and2");
  const auto enc = Encoding::standard("star1");
  auto decision = decide_representable(f, enc);
  REQUIRE(decision.feasible);
  CostFunction g = *decision.witness;
  const std::uint64_t at = enc.encode_tuple({1, 1});
  g.at_index(at) = g.at_index(at) + ExtRat(1);
  CHECK_FALSE(verify_witness(g, f, enc));
}

TEST_CASE("minimal dom is equivalent to the full dom on fixtures") {
  struct Case {
    CostFunction f;
    Encoding enc;
  };
  const std::vector<Case> cases = {
      {builtin_function("and2"), Encoding::standard("star1")},
      {builtin_function("and3"), Encoding::standard("star1")},
      {builtin_function("h0"), Encoding::standard("identity")},
      {builtin_function("h1"), Encoding::standard("identity")},
      {builtin_function("h2"), Encoding::standard("identity")},
      {builtin_function("bisub3"), Encoding::standard("pair")},
      {builtin_function("diamond_distance", 2), Encoding::standard("diamond", 2)},
  };
  for (const auto& c : cases) {
    CHECK(decide_representable(c.f, c.enc).feasible ==
          decide_representable(c.f, c.enc, /*full_dom=*/true).feasible);
  }
}

TEST_CASE("dom conflict: closure forcing finiteness at an inf point") {
  // f finite exactly on {1, -1}: the meet of the two images retracts into
  // sigma(0), so no g can match f(0) = +inf.
  CostFunction f = CostFunction::constant({"0", "1", "-1"}, 1, ExtRat(0));
  f.at({0}) = ExtRat::infinity();
  const auto decision = decide_representable(f, Encoding::standard("pair"));
  CHECK_FALSE(decision.feasible);
  REQUIRE(decision.conflict.has_value());
  CHECK(decision.conflict->x == Point{0});
}

TEST_CASE("kn cap is enforced") {
  const auto f = CostFunction::constant({"0", "1"}, 6, ExtRat(0));
  CHECK_THROWS(decide_representable(f, Encoding::standard("star1")));  // kn = 12
}
