#include <doctest.h>

#include "gralg/specfile.hpp"

using namespace gralg;

TEST_CASE("group declarations") {
  CHECK(parse_spec("group Z").group == FgAbelianGroup(1, {}));
  CHECK(parse_spec("group Z^2 x Z/2 x Z/4").group == FgAbelianGroup(2, {2, 4}));
  CHECK_THROWS_AS(parse_spec("algebra A matrix 2"), parse_error);  // no group yet
  CHECK_THROWS_AS(parse_spec("group Z\ngroup Z"), parse_error);
  CHECK_THROWS_AS(parse_spec("group Z/1"), parse_error);
  CHECK_THROWS_AS(parse_spec(""), parse_error);
}

TEST_CASE("errors carry line and column") {
  try {
    parse_spec("group Z/2\nalgebra A ut blocks=(1,1) tuple=([0],[1],[0])");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }
}

TEST_CASE("ut and matrix stanzas build elementary algebras") {
  SpecFile sf = parse_spec(
      "group Z/2\n"
      "algebra A ut blocks=(1,1) tuple=([0],[1])\n"
      "algebra M matrix 2\n"
      "algebra N matrix 2 tuple=([0],[1])\n");
  CHECK(sf.algebra("A").dim() == 3);
  CHECK(sf.algebra("M").dim() == 4);
  CHECK(sf.algebra("N").dim() == 4);
  CHECK(sf.elementary.at("N").tuple[1] == GroupElement(FgAbelianGroup(0, {2}), {1}));
  for (int i = 0; i < 4; ++i) CHECK(sf.algebra("M").degree(i).is_identity());
  CHECK_FALSE(sf.algebra("N").degree(1).is_identity());
}

TEST_CASE("pauli stanzas embed their support") {
  SpecFile sf = parse_spec(
      "group Z/2 x Z/2 x Z/2\n"
      "algebra D pauli pairs=(2) embed=([0,1,0],[0,0,1])\n");
  const GradedAlgebra& d = sf.algebra("D");
  CHECK(d.dim() == 4);
  CHECK(d.group() == sf.group);
  CHECK(sf.division.at("D").spec.pairs == std::vector<long long>{2});
  // missing embed with a mismatched group is an error
  CHECK_THROWS_AS(parse_spec("group Z/2\nalgebra D pauli pairs=(2)"), parse_error);
  // non-injective embeds are rejected
  CHECK_THROWS_AS(parse_spec("group Z/2 x Z/2 x Z/2\n"
                             "algebra D pauli pairs=(2) embed=([0,1,0],[0,1,0])"),
                  parse_error);
  // when the support group equals the file group, embed may be omitted
  CHECK(parse_spec("group Z/2 x Z/2\nalgebra D pauli pairs=(2)").algebra("D").dim() == 4);
}

TEST_CASE("composite stanzas") {
  SpecFile sf = parse_spec(
      "group Z/2 x Z/2 x Z/2\n"
      "subgroup H = ([0,1,0],[0,0,1])\n"
      "algebra A ut blocks=(1,1) tuple=([0,0,0],[1,0,0])\n"
      "algebra D pauli pairs=(2) embed=([0,1,0],[0,0,1])\n"
      "algebra R tensor A D\n"
      "algebra S dsum A A\n"
      "algebra Q coarsen R by H\n");
  CHECK(sf.algebra("R").dim() == 12);
  CHECK(sf.algebra("S").dim() == 6);
  CHECK(sf.algebra("Q").dim() == 12);
  CHECK(sf.algebra("Q").group().order() == 2);
  CHECK(sf.subgroups.at("H").elements().size() == 4);
  CHECK_THROWS_AS(parse_spec("group Z\nalgebra T tensor A B"), parse_error);
}

TEST_CASE("polynomial grammar") {
  SpecFile sf = parse_spec(
      "group Z/2\n"
      "poly comm = x1^[1] x2 - x2 x1^[1]\n"
      "poly half = 1/2 x1 x2 + (1/2) x2 x1\n"
      "poly tw = zeta(4) x1 x2 - zeta(4)^3 x2 x1\n"
      "poly cap = capelli(2)\n"
      "poly cen = central(2)\n");
  const GradedPolynomial& comm = sf.poly("comm");
  CHECK(comm.nvars() == 2);
  REQUIRE(comm.vars()[comm.find_var("x1")].degree.has_value());
  CHECK(comm.vars()[comm.find_var("x1")].degree->coords() == IntVec{1});
  CHECK_FALSE(comm.vars()[comm.find_var("x2")].degree.has_value());
  CHECK(sf.poly("half").terms()[0].coeff == CycScalar::from_rational(Rational(1, 2)));
  CHECK(sf.poly("tw").terms()[1].coeff == -CycScalar::root_of_unity(4, 3));
  CHECK(sf.poly("cap").nvars() == 5);
  CHECK(sf.poly("cen").terms().size() == 16);
  // mismatched variable sets across terms violate multilinearity
  CHECK_THROWS_AS(parse_spec("group Z\npoly p = x1 x2 + x1 x3"), parse_error);
  // a repeated variable in one term is not multilinear either
  CHECK_THROWS_AS(parse_spec("group Z\npoly p = x1 x1"), parse_error);
}

TEST_CASE("serialization round-trips") {
  std::string text =
      "group Z x Z/2 x Z/2\n"
      "subgroup H = ([0,1,0],[0,0,1])\n"
      "algebra A ut blocks=(2,1) tuple=([0,0,0],[1,0,0],[0,0,0])\n"
      "algebra D pauli pairs=(2) embed=([0,1,0],[0,0,1])\n"
      "algebra R tensor A D\n"
      "algebra Q coarsen R by H\n"
      "algebra M matrix 2\n"
      "poly p = 1/2 x1^[1,0,0] x2 - zeta(4) x2 x1^[1,0,0]\n";
  SpecFile sf = parse_spec(text);
  SpecFile again = parse_spec(sf.to_text());
  CHECK(sf.same_declarations(again));
  CHECK(again.same_declarations(sf));
  // and the round-trip is stable
  CHECK(again.to_text() == sf.to_text());
}

TEST_CASE("declaration comparison is semantic for polynomials") {
  SpecFile a = parse_spec("group Z\npoly p = x1 x2 - x2 x1\n");
  SpecFile b = parse_spec("group Z\npoly p = - x2 x1 + x1 x2\n");
  SpecFile c = parse_spec("group Z\npoly p = x1 x2 + x2 x1\n");
  CHECK(a.same_declarations(b));
  CHECK_FALSE(a.same_declarations(c));
}

TEST_CASE("comments and duplicate names") {
  SpecFile sf = parse_spec("# header\ngroup Z # trailing\n\n# more\n");
  CHECK(sf.group == FgAbelianGroup(1, {}));
  CHECK_THROWS_AS(parse_spec("group Z\nalgebra A matrix 1\nalgebra A matrix 2"),
                  parse_error);
  CHECK_THROWS_AS(parse_spec("group Z\nwhatever A"), parse_error);
}
