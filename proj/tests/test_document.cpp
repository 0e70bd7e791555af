#include "doctest.h"
#include "dorroh/gallery.hpp"
#include "support/builders.hpp"
#include "support/random_pairs.hpp"

#include <fstream>
#include <sstream>

using namespace dorroh;
using namespace testing_support;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

ParseError parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

StructureDocument pair_document(const BialgebraPair& p) {
  StructureDocument d;
  d.field = p.field();
  d.put_algebra("H", p.h.alg);
  d.put_coalgebra("H", p.h.coalg);
  if (p.h.antipode) d.put_antipode("H", *p.h.antipode);
  d.put_algebra("I", p.i_alg);
  d.put_coalgebra("I", p.i_coalg);
  d.put_pair("H", "I", p.act, p.coact);
  return d;
}
}  // namespace

TEST_CASE("minimal document gives the I of the kC2 fixture") {
  StructureDocument d = parse_document("field Q\nspace I 1 [x]\nmult I (0,0,0) = -2\n");
  Algebra i = d.algebra("I");
  CHECK(i.mult == kc2_pair(Q).i_alg.mult);
  CHECK(i.basis == std::vector<std::string>{"x"});
  CHECK_FALSE(i.unit);
  CHECK_FALSE(d.space("I").has_coalgebra());
}

TEST_CASE("scalars") {
  StructureDocument d = parse_document("field GF 2\nspace I 1 [x]\nmult I (0,0,0) = 1/1\n");
  CHECK(d.algebra("I").mult(0, 0) == F2.one());
  ParseError e = parse_failure("field GF 2\nspace I 1 [x]\nmult I (0,0,0) = 1/0\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 18);
  // denominators divisible by p have no image
  e = parse_failure("field GF 3\nspace I 1 [x]\nmult I (0,0,0) = 2/3\n");
  CHECK(e.line() == 3);
  StructureDocument q = parse_document("field Q\nspace I 1 [x]\nmult I (0,0,0) = -6/4\n");
  CHECK(q.algebra("I").mult(0, 0).to_string() == "-3/2");
  StructureDocument f3 = parse_document("field GF 3\nspace I 1 [x]\nmult I (0,0,0) = 1/2\n");
  CHECK(f3.algebra("I").mult(0, 0) == F3.from_int(2));
  CHECK(parse_document("field GF 5\nspace I 1\nmult I (0,0,0) = -1\n").algebra("I").mult(0, 0) == FieldSpec::prime(5).from_int(4));
}

TEST_CASE("empty tables are zero tensors") {
  StructureDocument d = parse_document("field Q\nspace I 2 [a,b]\nmult I\ncomult I\n");
  CHECK(d.algebra("I").mult.is_zero());
  CHECK(d.coalgebra("I").comult.is_zero());
  CHECK(d.space("I").has_algebra());
  CHECK(validate_algebra(d.algebra("I")).passed());
  CHECK(d.space("I").labels == std::vector<std::string>{"a", "b"});
  StructureDocument e = parse_document("field Q\nspace V 3\n");
  CHECK(e.space("V").labels == std::vector<std::string>{"e0", "e1", "e2"});
}

TEST_CASE("parse errors carry line and column") {
  struct Bad {
    const char* text;
    std::size_t line;
    std::size_t column;
  };
  std::vector<Bad> bad = {
      {"space I 1\n", 1, 1},                                         // field first
      {"field Q\nfield Q\n", 2, 7},                                  // twice
      {"field GF 4\n", 1, 10},                                       // not prime
      {"field R\n", 1, 7},                                           // unknown field
      {"field Q\nfrob I\n", 2, 1},                                   // unknown keyword
      {"field Q\nspace I 1 [x]\nmult J (0,0,0) = 1\n", 3, 6},        // unknown space
      {"field Q\nspace I 1 [x]\nmult I (0,0) = 1\n", 3, 12},         // arity
      {"field Q\nspace I 1 [x]\nmult I (0,0,0) = 1\nmult I (0,0,0) = 2\n", 4, 18},
      {"field Q\nspace I 2 [x]\n", 2, 14},                           // label count
      {"field Q\nspace I 2 [x,x]\n", 2, 14},                         // duplicate label
      {"field Q\nspace I 1 [x]\nmult I (0,0,0) = 1 junk\n", 3, 20},  // trailing text
      {"field Q\nspace I 1 [x]\nmult I (0,0,0) = x\n", 3, 18},       // bad scalar
      {"field Q\nspace I 1 [x]\nactL (0,0,0) = 1\n", 3, 6},          // no pair
      {"field Q\nspace H 1\nspace I 1\npair H I\nsub K = [(1)]\n", 5, 10},
      {"field Q\nspace H 1\nsub K = []\n", 3, 5},
      {"field Q\nspace H 1\nspace I 1\npair H I\nactL (1,0,0) = 1\n", 5, 7},
      {"field Q\nspace H 1\ndeg H [0,1]\n", 3, 12},
      {"", 1, 1},
  };
  for (const auto& b : bad) {
    CAPTURE(b.text);
    ParseError e = parse_failure(b.text);
    CHECK(e.line() == b.line);
    CHECK(e.column() == b.column);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  StructureDocument d = parse_document("# header\n\nfield Q  # trailing\n  space I 1 [x]   \nmult I (0, 0, 0) = 3 # c\n");
  CHECK(d.algebra("I").mult(0, 0) == Q.from_int(3));
}

TEST_CASE("pair tensors follow the matrix conventions") {
  StructureDocument d = gallery("sweedler");
  BialgebraPair split =
      split_bialgebra_extension(sweedler(Q), Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}}),
                                Matrix::from_ints(Q, {{0, 0, 1, 0}, {0, 0, 0, 1}}), {"1", "g"}, {"x", "gx"});
  BialgebraPair p = d.bialgebra_pair();
  CHECK(p.act.left == split.act.left);
  CHECK(p.act.right == split.act.right);
  CHECK(p.coact.left == split.coact.left);
  CHECK(p.coact.right == split.coact.right);
  CHECK(p.i_alg.mult == split.i_alg.mult);
  CHECK(p.i_coalg.comult == split.i_coalg.comult);
  CHECK(p.h.alg.mult == split.h.alg.mult);
  CHECK(p.h.coalg.comult == split.h.coalg.comult);
  CHECK(*p.h.antipode == *split.h.antipode);

  Bialgebra a = d.bialgebra("A");
  Bialgebra ref = sweedler(Q);
  CHECK(a.alg.mult == ref.alg.mult);
  CHECK(a.coalg.comult == ref.coalg.comult);
  CHECK(*a.antipode == *ref.antipode);
  CHECK(*a.coalg.counit == *ref.coalg.counit);
  CHECK(*d.space("A").degrees == std::vector<unsigned>{0, 0, 1, 1});
}

TEST_CASE("gallery fixtures match the hand-entered builders") {
  BialgebraPair kc2 = gallery("kc2").bialgebra_pair();
  BialgebraPair ref = kc2_pair(Q);
  CHECK(kc2.i_alg.mult == ref.i_alg.mult);
  CHECK(kc2.i_coalg.comult == ref.i_coalg.comult);
  CHECK(kc2.act.left == ref.act.left);
  CHECK(kc2.coact.right == ref.coact.right);
  CHECK(gallery("kc2-broken-delta").bialgebra_pair().i_coalg.comult == kc2_broken_pair(Q).i_coalg.comult);
  AlgebraPair ex = gallery("ex42").algebra_pair();
  CHECK(ex.i.mult == ex42_pair(Q).i.mult);
  CHECK(ex.act.right == ex42_pair(Q).act.right);
  CHECK(gallery("ex42").subspace("K") == span(Q, {{1, -1, 0}, {0, 0, 1}}));
  CHECK(gallery("dualnum").algebra_pair().i.mult == dualnum_pair(Q).i.mult);
  CoalgebraPair cg = gallery("counit-grouplike").coalgebra_pair();
  CHECK(cg.i.comult == counit_pair(Q, 1).i.comult);
  CHECK(cg.coact.left == counit_pair(Q, 1).coact.left);
}

TEST_CASE("gallery field changes") {
  StructureDocument d = gallery("kc2", F3);
  CHECK(d.field == F3);
  CHECK(d.algebra("I").mult(0, 0) == F3.one());  // -2 = 1 mod 3
  CHECK_THROWS_AS(gallery("kc2", F2), std::invalid_argument);
  CHECK_THROWS_AS(gallery("sweedler", F2), std::invalid_argument);
  CHECK_THROWS_AS(gallery("nope"), std::invalid_argument);
  CHECK(gallery("trivext-zt-fail", F2).field == F2);
  CHECK(gallery("dualnum", Q) == gallery("dualnum"));
}

TEST_CASE("round trip on every fixture") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    StructureDocument d = gallery(name);
    std::string text = serialize_document(d);
    StructureDocument back = parse_document(text);
    CHECK(back == d);
    CHECK(serialize_document(back) == text);
    if (name != "kc2" && name != "sweedler") CHECK(parse_document(serialize_document(gallery(name, F3))) == gallery(name, F3));
  }
}

TEST_CASE("round trip on random pairs") {
  for (FieldSpec f : {F2, F3}) {
    PairSampler sampler(f, 0xd0c + f.characteristic());
    for (int k = 0; k < 60; ++k) {
      BialgebraPair p = sampler.candidate();
      StructureDocument d = pair_document(p);
      d.put_sub("K", Subspace::span_rows(sampler.random_matrix(2, p.dim_h() + p.dim_i(), 0.5)));
      StructureDocument back = parse_document(serialize_document(d));
      REQUIRE(back == d);
      BialgebraPair q = back.bialgebra_pair();
      CHECK(q.h.alg.mult == p.h.alg.mult);
      CHECK(q.h.coalg.comult == p.h.coalg.comult);
      CHECK(q.i_alg.mult == p.i_alg.mult);
      CHECK(q.i_coalg.comult == p.i_coalg.comult);
      CHECK(q.act.left == p.act.left);
      CHECK(q.act.right == p.act.right);
      CHECK(q.coact.left == p.coact.left);
      CHECK(q.coact.right == p.coact.right);
      CHECK(back.subspace("K") == d.subspace("K"));
    }
  }
}

TEST_CASE("shipped fixture files equal the gallery") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    std::ifstream in(std::string(DORROH_FIXTURE_DIR) + "/" + name + ".dorroh");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(parse_document(buf.str()) == gallery(name));
  }
}
