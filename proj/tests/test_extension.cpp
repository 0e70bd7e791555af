#include "doctest.h"
#include "support/builders.hpp"

using namespace dorroh;
using namespace testing_support;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("dual numbers as a unitization") {
  AlgebraExtension ext = extend_algebra(dualnum_pair(Q));
  const Algebra& t = ext.total;
  CHECK(t.basis == std::vector<std::string>{"(1,0)", "(0,m)"});
  CHECK(t.product(vec(Q, {0, 1}), vec(Q, {0, 1})).is_zero());
  REQUIRE(t.unit.has_value());
  CHECK(*t.unit == vec(Q, {1, 0}));
  CHECK(t.product(vec(Q, {1, 0}), vec(Q, {0, 1})) == vec(Q, {0, 1}));
}

TEST_CASE("x² = −2x unitization is kC2") {
  AlgebraExtension ext = extend_algebra(kc2_pair(Q).algebra_pair());
  CHECK(ext.total.product(vec(Q, {0, 1}), vec(Q, {0, 1})) == vec(Q, {0, -2}));
  // (α, βx) ↦ α + β(g − 1)
  Matrix iso = Matrix::from_ints(Q, {{1, -1}, {0, 1}});
  CHECK(iso.rank() == 2);
  CHECK(is_algebra_hom(iso, ext.total, kc2_hopf(Q).alg, true));
  CoalgebraExtension cext = extend_coalgebra(kc2_pair(Q).coalgebra_pair());
  CHECK(is_coalgebra_hom(iso, cext.total, kc2_hopf(Q).coalg, true));
}

TEST_CASE("product formula on k ⋉ (k × U)") {
  AlgebraExtension ext = extend_algebra(ex42_pair(Q));
  // (α, (β, u))(α', (β', u')) = (αα', (αβ' + βα' + ββ', αu' + uα'))
  for (long a : {0, 1, -2})
    for (long b : {1, 3})
      for (long u : {0, 5}) {
        long a2 = 2, b2 = -1, u2 = 7;
        Matrix lhs = ext.total.product(vec(Q, {a, b, u}), vec(Q, {a2, b2, u2}));
        CHECK(lhs == vec(Q, {a * a2, a * b2 + b * a2 + b * b2, a * u2 + u * a2}));
      }
}

TEST_CASE("coalgebra extensions") {
  SUBCASE("P = 0") {
    Coalgebra p(Q, {});
    CoalgebraExtension ext = extend_coalgebra(CoalgebraPair{kc2_hopf(Q).coalg, p, zero_coaction(Q, 2, 0)});
    CHECK(ext.total.comult == kc2_hopf(Q).coalg.comult);
  }
  SUBCASE("grouplike x, trivial coactions") {
    CoalgebraExtension ext = extend_coalgebra(counit_pair(Q, 1));
    Matrix d = ext.total.comult * vec(Q, {0, 1});
    // (1,0)⊗(0,x) + (0,x)⊗(1,0) + (0,x)⊗(0,x)
    CHECK(d == vec(Q, {0, 1, 1, 1}));
    REQUIRE(ext.total.counit.has_value());
    CHECK(*ext.total.counit == Matrix::from_ints(Q, {{1, 0}}));
  }
}

TEST_CASE("canonical maps") {
  CanonicalMaps m = canonical_maps(Q, 2, 3);
  CHECK(m.pi_h * m.tau_h == Matrix::identity(Q, 2));
  CHECK(m.pi_i * m.tau_i == Matrix::identity(Q, 3));
  CHECK((m.pi_h * m.tau_i).is_zero());
  CHECK((m.pi_i * m.tau_h).is_zero());
  CHECK(m.tau_h * m.pi_h + m.tau_i * m.pi_i == Matrix::identity(Q, 5));
}

TEST_CASE("τ and π as homomorphisms") {
  AlgebraExtension ext = extend_algebra(dualnum_pair(Q));
  CHECK(is_algebra_hom(ext.maps.tau_h, ext.pair.h, ext.total, true));
  CHECK(is_algebra_hom(ext.maps.pi_h, ext.total, ext.pair.h, true));
  // (1,0)(0,m) = (0,m) but π_I(1,0)·π_I(0,m) = 0
  CHECK_FALSE(is_algebra_hom(ext.maps.pi_i, ext.total, ext.pair.i));

  BialgebraPair sp = split_bialgebra_extension(sweedler(Q), Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}}),
                                               Matrix::from_ints(Q, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CoalgebraExtension cext = extend_coalgebra(sp.coalgebra_pair());
  CHECK(is_coalgebra_hom(cext.maps.tau_h, cext.pair.h, cext.total, true));
  CHECK(is_coalgebra_hom(cext.maps.pi_h, cext.total, cext.pair.h, true));
  CHECK(is_coalgebra_hom(cext.maps.pi_i, cext.total, cext.pair.i));
}

TEST_CASE("invalid pairs are refused") {
  Algebra i(Q, {"x"});
  i.add(0, 0, 0, Q.one());
  BimoduleAction act{Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{1}})};
  try {
    extend_algebra(AlgebraPair{ground(Q).alg, i, act});
    FAIL("expected InvalidPair");
  } catch (const InvalidPair& e) {
    CHECK_FALSE(e.report().passed("dpa.2"));
  }
}

TEST_CASE("split kC2 along k·1 ⊕ k(g − 1)") {
  Bialgebra a = kc2_hopf(Q);
  BialgebraPair p = split_bialgebra_extension(a, Matrix::from_ints(Q, {{1, 0}}), Matrix::from_ints(Q, {{-1, 1}}),
                                              {"1"}, {"y"});
  CHECK(p.i_coalg.comult == Matrix::from_ints(Q, {{1}}));
  CHECK(p.coact.left == Matrix::from_ints(Q, {{1}}));
  CHECK(p.coact.right == Matrix::from_ints(Q, {{1}}));
  CHECK(p.i_alg.mult == Matrix::from_ints(Q, {{-2}}));
  REQUIRE(p.h.antipode.has_value());
  CHECK(*p.h.antipode == Matrix::from_ints(Q, {{1}}));
}

TEST_CASE("split Sweedler along span{1,g} ⊕ span{x,gx}") {
  Bialgebra a = sweedler(Q);
  Matrix hr = Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  Matrix ir = Matrix::from_ints(Q, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  BialgebraPair p = split_bialgebra_extension(a, hr, ir, {"1", "g"}, {"x", "gx"});
  BialgebraExtension ext = extend_bialgebra(p);
  Matrix iso = reconstruction_map(hr, ir);
  CHECK(is_algebra_hom(iso, ext.total.alg, a.alg, true));
  CHECK(is_coalgebra_hom(iso, ext.total.coalg, a.coalg, true));
  // ρ_l(x) = g⊗x, ρ_r(x) = x⊗1 from Δx = x⊗1 + g⊗x
  CHECK(p.coact.left * vec(Q, {1, 0}) == vec(Q, {0, 0, 1, 0}));
  CHECK(p.coact.right * vec(Q, {1, 0}) == vec(Q, {1, 0, 0, 0}));
  CHECK(p.i_coalg.comult.is_zero());

  SUBCASE("a skew complement gives an isomorphic reconstruction") {
    Matrix ir2 = Matrix::from_ints(Q, {{0, 0, 1, 1}, {0, 0, 1, -1}});
    BialgebraPair p2 = split_bialgebra_extension(a, hr, ir2);
    BialgebraExtension e2 = extend_bialgebra(p2);
    Matrix iso2 = reconstruction_map(hr, ir2);
    CHECK(is_algebra_hom(iso2, e2.total.alg, a.alg, true));
    CHECK(is_coalgebra_hom(iso2, e2.total.coalg, a.coalg, true));
  }
}

TEST_CASE("split errors") {
  Bialgebra a = kc2_hopf(Q);
  SUBCASE("span{g} misses the unit") {
    try {
      split_bialgebra_extension(a, Matrix::from_ints(Q, {{0, 1}}), Matrix::from_ints(Q, {{-1, 1}}));
      FAIL("expected SplitError");
    } catch (const SplitError& e) {
      CHECK(e.kind() == SplitError::Kind::NotSubstructure);
      CHECK(std::string(e.what()).find("unit") != std::string::npos);
    }
  }
  SUBCASE("not a direct sum") {
    CHECK_THROWS_AS(split_bialgebra_extension(a, Matrix::from_ints(Q, {{1, 0}}), Matrix::from_ints(Q, {{2, 0}})),
                    SplitError);
  }
  SUBCASE("complement is not an ideal") {
    Bialgebra s = sweedler(Q);
    try {
      split_bialgebra_extension(s, Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}}),
                                Matrix::from_ints(Q, {{0, 0, 1, 0}, {0, 1, 0, 1}}));
      FAIL("expected SplitError");
    } catch (const SplitError& e) {
      CHECK(e.kind() == SplitError::Kind::NotIdeal);
    }
  }
}

TEST_CASE("extend then split round trip") {
  for (FieldSpec f : {Q, FieldSpec::prime(3)}) {
    BialgebraPair p = kc2_pair(f);
    BialgebraExtension ext = extend_bialgebra(p);
    Bialgebra total(ext.total.alg, ext.total.coalg);
    BialgebraPair back = split_bialgebra_extension(total, ext.maps.pi_h, ext.maps.pi_i, p.h.basis(), p.i_alg.basis);
    CHECK(back.h.alg.mult == p.h.alg.mult);
    CHECK(back.h.coalg.comult == p.h.coalg.comult);
    CHECK(back.i_alg.mult == p.i_alg.mult);
    CHECK(back.i_coalg.comult == p.i_coalg.comult);
    CHECK(back.act.left == p.act.left);
    CHECK(back.act.right == p.act.right);
    CHECK(back.coact.left == p.coact.left);
    CHECK(back.coact.right == p.coact.right);
    CHECK(*back.h.alg.unit == *p.h.alg.unit);
    CHECK(*back.h.coalg.counit == *p.h.coalg.counit);
  }
}
