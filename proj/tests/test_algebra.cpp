#include <doctest.h>

#include <set>

#include "gralg/algebra.hpp"

using namespace gralg;

namespace {

FgAbelianGroup z2(0, {2});
FgAbelianGroup z2z2(0, {2, 2});

GroupElement el(const FgAbelianGroup& g, IntVec v) { return GroupElement(g, std::move(v)); }

ElementarySpec ut11() {
  return {z2, {1, 1}, {identity_of(z2), el(z2, {1})}};
}

SparseVec unit(int i) { return {{i, CycScalar::one()}}; }

}  // namespace

TEST_CASE("elementary grading on UT(1,1)") {
  GradedAlgebra a = build_ut_elementary(ut11());
  REQUIRE(a.dim() == 3);  // e11, e12, e22
  CHECK(a.labels() == std::vector<std::string>{"e(1,1)", "e(1,2)", "e(2,2)"});
  CHECK(a.degree(0).is_identity());
  CHECK(a.degree(1) == el(z2, {1}));  // g_1 g_2^{-1}
  CHECK(a.degree(2).is_identity());
  // matrix unit relations
  CHECK(sparse_equal(a.product(0, 1), unit(1)));  // e11 e12 = e12
  CHECK(sparse_equal(a.product(1, 2), unit(1)));  // e12 e22 = e12
  CHECK(a.product(1, 1).empty());                 // e12 e12 = 0
  CHECK(a.product(2, 0).empty());                 // e22 e11 = 0
  CHECK(a.verify_grading());
  CHECK(a.check_associativity());
  REQUIRE(a.unity().has_value());
  for (int i = 0; i < a.dim(); ++i) {
    CHECK(sparse_equal(a.multiply(*a.unity(), unit(i)), unit(i)));
    CHECK(sparse_equal(a.multiply(unit(i), *a.unity()), unit(i)));
  }
}

TEST_CASE("UT(2,1) has the block-triangular basis") {
  ElementarySpec spec{z2, {2, 1}, {identity_of(z2), el(z2, {1}), identity_of(z2)}};
  GradedAlgebra a = build_ut_elementary(spec);
  CHECK(a.dim() == 7);  // full 2x2 block + 2x1 strip + 1x1 block
  CHECK(a.verify_grading());
  CHECK(a.check_associativity());
  std::set<std::string> labels(a.labels().begin(), a.labels().end());
  CHECK(labels.count("e(2,1)") == 1);   // inside the first block
  CHECK(labels.count("e(3,1)") == 0);   // below the block diagonal
  CHECK(labels.count("e(1,3)") == 1);
}

TEST_CASE("pauli division algebra for one 2x2 pair") {
  DivisionSpec spec{{2}};
  CHECK(spec.pi_degree() == 2);
  CHECK(spec.support_group() == z2z2);
  PauliAlgebra pa = build_pauli_division(spec);
  const GradedAlgebra& d = pa.algebra;
  REQUIRE(d.dim() == 4);
  CHECK(d.verify_grading());
  CHECK(d.check_associativity());
  // every homogeneous basis element is invertible: u u^{-degree} is a nonzero
  // multiple of the unity component
  for (int i = 0; i < 4; ++i) {
    bool invertible = false;
    for (int j = 0; j < 4; ++j)
      if (compose(d.degree(i), d.degree(j)).is_identity() && !d.product(i, j).empty())
        invertible = true;
    CHECK(invertible);
  }

  // bicharacter oracle: beta((z,x),(z',x')) = (-1)^{z x' - z' x}
  const Bicharacter& b = pa.bicharacter;
  CHECK(b.is_alternating());
  CHECK(b.is_bimultiplicative());
  for (const auto& p : all_elements(z2z2))
    for (const auto& q : all_elements(z2z2)) {
      long long e = p.coords()[0] * q.coords()[1] - q.coords()[0] * p.coords()[1];
      CHECK(b.value(p, q) == CycScalar::root_of_unity(2, e));
    }
}

TEST_CASE("pauli pair of order 3 twists by cube roots") {
  PauliAlgebra pa = build_pauli_division(DivisionSpec{{3}});
  CHECK(pa.algebra.dim() == 9);
  CHECK(pa.algebra.verify_grading());
  CHECK(pa.algebra.check_associativity());
  FgAbelianGroup g = DivisionSpec{{3}}.support_group();
  GroupElement a(g, {1, 0}), b(g, {0, 1});
  // a perfect pairing of order 3 on the two generators, antisymmetric
  CHECK(pa.bicharacter.value(a, b) == CycScalar::root_of_unity(3, 2));
  CHECK(pa.bicharacter.value(b, a) == CycScalar::root_of_unity(3, 1));
  CHECK(pa.bicharacter.is_alternating());
  CHECK(pa.bicharacter.is_bimultiplicative());
}

TEST_CASE("pairs of size 1 contribute nothing to the support") {
  DivisionSpec spec{{1, 2, 1}};
  CHECK(spec.pi_degree() == 2);
  CHECK(spec.support_group() == z2z2);
  CHECK(build_pauli_division(spec).algebra.dim() == 4);
}

TEST_CASE("tensor product multiplies dimensions and degrees") {
  GradedAlgebra a = build_ut_elementary(ut11());
  GradedAlgebra m = matrix_algebra(2, z2);
  GradedAlgebra t = tensor(a, m);
  CHECK(t.dim() == 12);
  CHECK(t.verify_grading());
  CHECK(t.check_associativity());
  REQUIRE(t.unity().has_value());
  // degrees compose
  std::multiset<std::string> degs;
  for (int i = 0; i < t.dim(); ++i) degs.insert(t.degree(i).to_string());
  CHECK(degs.count("[1]") == 4);  // e12 tensor the four units of M_2
}

TEST_CASE("coarsening composes the degree map") {
  GradedAlgebra a = build_ut_elementary(ut11());
  GradedAlgebra c = coarsen(a, GroupHom::trivial(z2, z2z2));
  CHECK(c.dim() == a.dim());
  for (int i = 0; i < c.dim(); ++i) CHECK(c.degree(i).is_identity());
  CHECK(c.verify_grading());
}

TEST_CASE("direct sum has componentwise products") {
  GradedAlgebra a = build_ut_elementary(ut11());
  GradedAlgebra s = direct_sum(a, a);
  CHECK(s.dim() == 6);
  CHECK(s.verify_grading());
  CHECK(s.check_associativity());
  // cross terms vanish
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) {
      CHECK(s.product(i, j).empty());
      CHECK(s.product(j, i).empty());
    }
  REQUIRE(s.unity().has_value());
  CHECK(s.unity()->size() == 4);  // e11 + e22 on both sides
}

TEST_CASE("subalgebra extraction") {
  GradedAlgebra m = matrix_algebra(2, z2);
  // diagonal span is a subalgebra
  std::vector<int> diag;
  for (int i = 0; i < 4; ++i)
    if (m.labels()[i] == "e(1,1)" || m.labels()[i] == "e(2,2)") diag.push_back(i);
  GradedAlgebra d = m.subalgebra(diag);
  CHECK(d.dim() == 2);
  CHECK(d.unity().has_value());
  CHECK(d.check_associativity());
  // {e11, e12, e21} is not closed: e21 e12 = e22 escapes the span
  std::vector<int> bad;
  for (int i = 0; i < 4; ++i)
    if (m.labels()[i] != "e(2,2)") bad.push_back(i);
  CHECK_THROWS_AS(m.subalgebra(bad), error);
}

TEST_CASE("neutral component and decomposition of UT(1,1)(e,a)") {
  GradedAlgebra a = build_ut_elementary(ut11());
  GradedAlgebra n = neutral_component(a);
  CHECK(n.dim() == 2);
  auto ideals = decompose_neutral(ut11());
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].basis_indices.size() == 1);
  CHECK(ideals[1].basis_indices.size() == 1);
  CHECK(ideals[0].shape == std::vector<int>{1});
  // the two ideals multiply to zero inside the full algebra
  for (int i : ideals[0].basis_indices)
    for (int j : ideals[1].basis_indices) {
      CHECK(a.product(i, j).empty());
      CHECK(a.product(j, i).empty());
    }
}

TEST_CASE("radical powers of UT(1,1)") {
  ElementarySpec spec = ut11();
  auto j0 = radical_power(spec, 0);
  auto j1 = radical_power(spec, 1);
  auto j2 = radical_power(spec, 2);
  CHECK(j0.size() == 3);
  CHECK(j1 == std::vector<int>{1});  // the strictly upper unit e(1,2)
  CHECK(j2.empty());
  // oracle: J^1 is nilpotent of the predicted index
  GradedAlgebra a = build_ut_elementary(spec);
  CHECK(a.product(1, 1).empty());
}

TEST_CASE("centers of matrix and triangular algebras") {
  GradedAlgebra m = matrix_algebra(2, z2);
  auto zm = center_of(m);
  REQUIRE(zm.size() == 1);
  CHECK(sparse_equal(zm[0].coeffs, *m.unity()));
  GradedAlgebra a = build_ut_elementary(ut11());
  CHECK(center_of(a).size() == 1);
  // direct sum of two copies has a two-dimensional center
  CHECK(center_of(direct_sum(m, m)).size() == 2);
}

TEST_CASE("grading transport along an injective-on-support map") {
  // regrade the Z/2 algebra along Z/2 -> Z/4, x -> 2x
  GradedAlgebra a = build_ut_elementary(ut11());
  FgAbelianGroup z4(0, {4});
  GroupHom phi(z2, z4, {el(z4, {2})});
  GradedAlgebra b = transport_grading(coarsen(a, phi), GroupHom(z2, z4, {el(z4, {2})}),
                                      all_elements(z2));
  CHECK(b.group() == z2);
  for (int i = 0; i < b.dim(); ++i) CHECK(b.degree(i) == a.degree(i));
  CHECK(b.verify_grading());
}

TEST_CASE("transport rejects maps that merge needed degrees") {
  GradedAlgebra a = build_ut_elementary(ut11());
  GradedAlgebra c = coarsen(a, GroupHom::trivial(z2, z2));  // supp = {e} only
  CHECK_THROWS_AS(
      transport_grading(c, GroupHom::trivial(z2, z2), all_elements(z2)), error);
}

TEST_CASE("normalized representatives are constant on cosets") {
  FgAbelianGroup g(0, {4});
  Subgroup h = subgroup_generated(g, {el(g, {2})});
  ElementarySpec spec{g, {1, 1, 1}, {el(g, {1}), el(g, {3}), el(g, {0})}};
  ElementarySpec norm = normalize_representatives(spec, h);
  // 1 and 3 lie in the same coset of <2>: they get the same representative
  CHECK(norm.tuple[0] == norm.tuple[1]);
  for (int i = 0; i < 3; ++i)
    CHECK(h.contains(compose(norm.tuple[i], inverse(spec.tuple[i]))));
}

TEST_CASE("multiplicity map and invariance subgroup") {
  auto e = identity_of(z2);
  auto a = el(z2, {1});
  // the multiset {e, a} is invariant under translation by a
  OmegaInvariance full = omega_and_invariance(z2, {e, a});
  CHECK(full.omega.at(e) == 1);
  CHECK(full.omega.at(a) == 1);
  CHECK_FALSE(full.invariance.is_trivial());
  CHECK(full.invariance.contains(a));
  // the multiset {e, e} is not
  OmegaInvariance none = omega_and_invariance(z2, {e, e});
  CHECK(none.omega.at(e) == 2);
  CHECK(none.invariance.is_trivial());
}
