#include <doctest.h>

#include "gralg/polynomial.hpp"

using namespace gralg;

namespace {

FgAbelianGroup z2(0, {2});

SparseVec unit(int i) { return {{i, CycScalar::one()}}; }

// two-variable commutator [x1, x2]
GradedPolynomial commutator() {
  return GradedPolynomial({{"x1", std::nullopt}, {"x2", std::nullopt}},
                          {{CycScalar::one(), {0, 1}},
                           {-CycScalar::one(), {1, 0}}});
}

}  // namespace

TEST_CASE("constructor validates terms") {
  CHECK_THROWS_AS(GradedPolynomial({{"x", std::nullopt}, {"x", std::nullopt}}, {}),
                  error);
  CHECK_THROWS_AS(
      GradedPolynomial({{"x1", std::nullopt}, {"x2", std::nullopt}},
                       {{CycScalar::one(), {0, 0}}}),
      error);
}

TEST_CASE("capelli polynomial shape") {
  GradedPolynomial c2 = capelli(2);
  CHECK(c2.nvars() == 5);  // x1 x2 y1 y2 y3
  CHECK(c2.terms().size() == 2);
  GradedPolynomial c3 = capelli(3);
  CHECK(c3.nvars() == 7);
  CHECK(c3.terms().size() == 6);
  // the identity permutation carries +1, a transposition carries -1
  for (const auto& t : c3.terms()) {
    std::vector<int> xs;
    for (int v : t.order)
      if (v < 3) xs.push_back(v);
    int inv = 0;
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = i + 1; j < xs.size(); ++j)
        if (xs[i] > xs[j]) ++inv;
    CHECK(t.coeff == (inv % 2 ? -CycScalar::one() : CycScalar::one()));
  }
}

TEST_CASE("capelli evaluation alternates in the x variables") {
  GradedAlgebra m = matrix_algebra(2, z2);
  GradedPolynomial c2 = capelli(2);
  int x1 = c2.find_var("x1"), x2 = c2.find_var("x2");
  int y1 = c2.find_var("y1"), y2 = c2.find_var("y2"), y3 = c2.find_var("y3");
  std::vector<SparseVec> vals(5);
  vals[y1] = vals[y2] = vals[y3] = *m.unity();
  // equal x values: the alternating sum vanishes
  vals[x1] = vals[x2] = unit(0);
  CHECK(sparse_is_zero(evaluate(m, c2, vals)));
  // swap two distinct values: sign flips
  vals[x1] = unit(0);
  vals[x2] = unit(1);
  SparseVec v12 = evaluate(m, c2, vals);
  std::swap(vals[x1], vals[x2]);
  SparseVec v21 = evaluate(m, c2, vals);
  CHECK(sparse_equal(v12, sparse_scale(-CycScalar::one(), v21)));
  CHECK_FALSE(sparse_is_zero(v12));
}

TEST_CASE("evaluation is exact on a hand-checked product") {
  // [e11, e12] = e12 in UT or M_2
  GradedAlgebra m = matrix_algebra(2, z2);
  GradedPolynomial c = commutator();
  int e11 = -1, e12 = -1;
  for (int i = 0; i < 4; ++i) {
    if (m.labels()[i] == "e(1,1)") e11 = i;
    if (m.labels()[i] == "e(1,2)") e12 = i;
  }
  SparseVec v = evaluate(m, c, {unit(e11), unit(e12)});
  CHECK(sparse_equal(v, unit(e12)));
}

TEST_CASE("admissibility checking rejects off-degree values") {
  FgAbelianGroup g = z2;
  GradedAlgebra a = build_ut_elementary(
      ElementarySpec{g, {1, 1}, {identity_of(g), GroupElement(g, {1})}});
  GradedPolynomial p({{"x", GroupElement(g, {1})}}, {{CycScalar::one(), {0}}});
  // e(1,2) has degree [1]: admissible; e(1,1) has degree e: rejected
  CHECK_FALSE(sparse_is_zero(evaluate(a, p, {unit(1)})));
  CHECK_THROWS_AS(evaluate(a, p, {unit(0)}), error);
  CHECK_FALSE(sparse_is_zero(evaluate(a, p, {unit(0)}, false)));
}

TEST_CASE("retyping and renaming") {
  GradedPolynomial c2 = capelli(2);
  GroupElement g(z2, {1});
  GradedPolynomial t = with_degree(c2, "x1", g);
  CHECK(t.vars()[t.find_var("x1")].degree == g);
  CHECK_FALSE(t.vars()[t.find_var("x2")].degree.has_value());
  GradedPolynomial all = with_degree_all(c2, g);
  for (const auto& v : all.vars()) CHECK(v.degree == g);
  GradedPolynomial r = rename_with_prefix(c2, "p_");
  CHECK(r.find_var("p_x1") >= 0);
  CHECK(r.find_var("x1") == -1);
  CHECK(r.terms().size() == c2.terms().size());
}

TEST_CASE("append and multiply build longer multilinear polynomials") {
  GradedPolynomial c = commutator();
  GradedPolynomial ext = append_right_factor(c, {"z", std::nullopt});
  CHECK(ext.nvars() == 3);
  for (const auto& t : ext.terms()) CHECK(t.order.back() == ext.find_var("z"));
  GradedPolynomial prod = multiply(c, rename_with_prefix(c, "q_"));
  CHECK(prod.nvars() == 4);
  CHECK(prod.terms().size() == 4);
  CHECK_THROWS_AS(multiply(c, c), error);  // name collision
}

TEST_CASE("central polynomial for M_2") {
  GradedPolynomial f = central_poly(2);
  CHECK(f.nvars() == 4);
  CHECK(f.terms().size() == 16);
  CHECK(central_poly(1).nvars() == 1);
  CHECK_THROWS_AS(central_poly(3), error);

  // oracle: f is the multilinearization of [x1,x2]^2 in both variables, so
  // substituting x3 = x1, x4 = x2 gives 4 [x1,x2]^2; check on units of M_2
  GradedAlgebra m = matrix_algebra(2, z2);
  GradedPolynomial c = commutator();
  bool nonzero_seen = false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      SparseVec comm = evaluate(m, c, {unit(i), unit(j)});
      SparseVec sq = m.multiply(comm, comm);
      SparseVec lin = evaluate(m, f, {unit(i), unit(j), unit(i), unit(j)});
      CHECK(sparse_equal(lin, sparse_scale(CycScalar::integer(4), sq)));
      nonzero_seen = nonzero_seen || !sparse_is_zero(sq);
    }
  CHECK(nonzero_seen);
}

TEST_CASE("transfer composition has the expected shape") {
  FgAbelianGroup g = z2;
  GroupElement h(g, {1});
  // g(x1^h x2^h) with both slots of degree h
  GradedPolynomial gp({{"x1", h}, {"x2", h}}, {{CycScalar::one(), {0, 1}}});
  GradedPolynomial f = central_poly(2);
  GradedPolynomial out = compose_transfer(gp, f, 3);
  // two copies of f (4 vars each) + Cap_2 (5 vars)
  CHECK(out.nvars() == 2 * 4 + 5);
  // first variable of each copy carries the original degree, the rest are
  // neutral
  int first = out.find_var("s1_x1");
  REQUIRE(first >= 0);
  CHECK(out.vars()[first].degree == h);
  int second = out.find_var("s1_x2");
  REQUIRE(second >= 0);
  REQUIRE(out.vars()[second].degree.has_value());
  CHECK(out.vars()[second].degree->is_identity());
}
