#include <doctest.h>

#include "gralg/isomorphism.hpp"

using namespace gralg;

namespace {

FgAbelianGroup z2(0, {2});
FgAbelianGroup g3(0, {2, 2, 2});

GroupElement el(const FgAbelianGroup& g, IntVec v) { return GroupElement(g, std::move(v)); }

GradedFactor trivial_factor(const FgAbelianGroup& g) {
  DivisionSpec spec{{1}};
  return {spec, GroupHom::trivial(spec.support_group(), g)};
}

GradedFactor pauli2_factor() {
  DivisionSpec spec{{2}};
  GroupHom embed(spec.support_group(), g3, {el(g3, {0, 1, 0}), el(g3, {0, 0, 1})});
  return {spec, embed};
}

}  // namespace

TEST_CASE("division factors compare by bicharacter") {
  Bicharacter b2 = build_pauli_division(DivisionSpec{{2}}).bicharacter;
  Bicharacter b3 = build_pauli_division(DivisionSpec{{3}}).bicharacter;
  CHECK(division_iso(b2, b2));
  CHECK_FALSE(division_iso(b2, b3));
  // embedding into a larger group preserves the comparison
  GroupHom phi(DivisionSpec{{2}}.support_group(), g3,
               {el(g3, {0, 1, 0}), el(g3, {0, 0, 1})});
  CHECK(division_iso(b2.mapped(phi), b2.mapped(phi)));
  // different embeddings of the same factor give different G-graded divisions
  GroupHom psi(DivisionSpec{{2}}.support_group(), g3,
               {el(g3, {1, 1, 0}), el(g3, {0, 0, 1})});
  CHECK_FALSE(division_iso(b2.mapped(phi), b2.mapped(psi)));
}

TEST_CASE("witness verification checks the defining equation") {
  ElementarySpec a{z2, {1, 1}, {identity_of(z2), el(z2, {1})}};
  ElementarySpec ap{z2, {1, 1}, {el(z2, {1}), identity_of(z2)}};
  std::vector<GroupElement> supp{identity_of(z2)};
  IsoWitness good{el(z2, {1}),
                  {identity_of(z2), identity_of(z2)},
                  {0, 1}};
  CHECK(good.verify(a, ap, supp));
  IsoWitness bad = good;
  bad.shift = identity_of(z2);
  CHECK_FALSE(bad.verify(a, ap, supp));
  IsoWitness nonperm = good;
  nonperm.sigma = {0, 0};
  CHECK_FALSE(nonperm.verify(a, ap, supp));
}

TEST_CASE("search finds shift witnesses and rejects distinct gradings") {
  ElementarySpec a{z2, {1, 1}, {identity_of(z2), el(z2, {1})}};
  ElementarySpec shifted{z2, {1, 1}, {el(z2, {1}), identity_of(z2)}};
  std::vector<GroupElement> triv{identity_of(z2)};
  auto w = elementary_iso_search(a, shifted, triv);
  REQUIRE(w.has_value());
  CHECK(w->verify(a, shifted, triv));
  ElementarySpec constant{z2, {1, 1}, {identity_of(z2), identity_of(z2)}};
  CHECK_FALSE(elementary_iso_search(a, constant, triv).has_value());
}

TEST_CASE("corrections from the division support widen the orbit") {
  // over Z/2 x Z/2 x Z/2 with supp B = <[0,1,0],[0,0,1]>: tuples differing by
  // support elements entry-wise are isomorphic even without a common shift
  ElementarySpec a{g3, {1, 1}, {identity_of(g3), el(g3, {1, 0, 0})}};
  ElementarySpec b{g3, {1, 1}, {el(g3, {0, 1, 0}), el(g3, {1, 0, 1})}};
  std::vector<GroupElement> supp;
  for (const auto& s : all_elements(FgAbelianGroup(0, {2, 2})))
    supp.push_back(el(g3, {0, s.coords()[0], s.coords()[1]}));
  auto w = elementary_iso_search(a, b, supp);
  REQUIRE(w.has_value());
  CHECK(w->verify(a, b, supp));
  // without the corrections the same pair fails
  CHECK_FALSE(elementary_iso_search(a, b, {identity_of(g3)}).has_value());
}

TEST_CASE("permutations act within blocks") {
  FgAbelianGroup z(1, {});
  std::vector<GroupElement> triv{identity_of(z)};
  // inside a full matrix block the tuple order is immaterial
  ElementarySpec a{z, {2}, {el(z, {0}), el(z, {5})}};
  ElementarySpec b{z, {2}, {el(z, {5}), el(z, {0})}};
  auto w = elementary_iso_search(a, b, triv);
  REQUIRE(w.has_value());
  CHECK(w->verify(a, b, triv));
  // across triangular blocks it is not: the supports differ
  ElementarySpec at{z, {1, 1}, {el(z, {0}), el(z, {5})}};
  ElementarySpec bt{z, {1, 1}, {el(z, {5}), el(z, {0})}};
  CHECK_FALSE(elementary_iso_search(at, bt, triv).has_value());
}

TEST_CASE("tensor isomorphism rejects mismatched factors") {
  ElementarySpec a{g3, {1, 1}, {identity_of(g3), el(g3, {1, 0, 0})}};
  Bicharacter b2 = build_pauli_division(DivisionSpec{{2}}).bicharacter;
  GroupHom phi(DivisionSpec{{2}}.support_group(), g3,
               {el(g3, {0, 1, 0}), el(g3, {0, 0, 1})});
  GroupHom psi(DivisionSpec{{2}}.support_group(), g3,
               {el(g3, {1, 1, 0}), el(g3, {0, 0, 1})});
  CHECK(elementary_tensor_iso(a, b2.mapped(phi), a, b2.mapped(phi)).has_value());
  CHECK_FALSE(elementary_tensor_iso(a, b2.mapped(phi), a, b2.mapped(psi)).has_value());
  ElementarySpec other_blocks{g3, {2}, {identity_of(g3), el(g3, {1, 0, 0})}};
  CHECK_FALSE(
      elementary_tensor_iso(a, b2.mapped(phi), other_blocks, b2.mapped(phi)).has_value());
}

TEST_CASE("coarse elementary model shape") {
  ElementarySpec a{g3, {1, 1}, {identity_of(g3), el(g3, {1, 0, 0})}};
  Subgroup h = subgroup_generated(g3, {el(g3, {0, 1, 0}), el(g3, {0, 0, 1})});
  ElementarySpec u = build_coarse_elementary(a, h, 2);
  CHECK(u.blocks == std::vector<int>{2, 2});
  CHECK(u.tuple.size() == 4);
  CHECK(u.group.order() == 2);  // G/H = Z/2
  CHECK(u.tuple[0] == u.tuple[1]);
  CHECK(u.tuple[2] == u.tuple[3]);
  CHECK_FALSE(u.tuple[0] == u.tuple[2]);
  u.validate();
}

TEST_CASE("sufficient condition: two blocks or a trivially invariant block") {
  ElementarySpec two{z2, {1, 1}, {identity_of(z2), el(z2, {1})}};
  CHECK(ds_condition(two).holds);
  // three blocks whose entries are all invariant multisets fail the condition
  ElementarySpec stuck{z2, {2, 2, 2},
                       {identity_of(z2), el(z2, {1}), identity_of(z2), el(z2, {1}),
                        identity_of(z2), el(z2, {1})}};
  CHECK_FALSE(ds_condition(stuck).holds);
  // one rigid block restores it
  ElementarySpec rigid{z2, {2, 2, 1},
                       {identity_of(z2), el(z2, {1}), identity_of(z2), el(z2, {1}),
                        identity_of(z2)}};
  CHECK(ds_condition(rigid).holds);
}

TEST_CASE("pipeline: identical inputs are isomorphic with identity data") {
  ElementarySpec a{g3, {1, 1}, {identity_of(g3), el(g3, {1, 0, 0})}};
  GradedFactor d = pauli2_factor();
  PipelineVerdict v = pipeline(a, d, a, d);
  CHECK(v.final == "isomorphic");
  REQUIRE(v.witness.has_value());
  CHECK(v.support_match_a);
  CHECK(v.support_match_b);
  CHECK(v.supports_equal);
  CHECK(v.division_ok);
  CHECK(v.coarse_model_ok_a);
  CHECK(v.coarse_witness_found);
}

TEST_CASE("pipeline: different division embeddings are not isomorphic") {
  ElementarySpec a{g3, {1, 1}, {identity_of(g3), el(g3, {1, 0, 0})}};
  GradedFactor d = pauli2_factor();
  DivisionSpec spec{{2}};
  GradedFactor skew{spec, GroupHom(spec.support_group(), g3,
                                   {el(g3, {1, 1, 0}), el(g3, {0, 0, 1})})};
  PipelineVerdict v = pipeline(a, d, a, skew);
  CHECK(v.final == "not-isomorphic");
  CHECK_FALSE(v.supports_equal);
}

TEST_CASE("pipeline: trivial division, distinct tuples over Z") {
  FgAbelianGroup z(1, {});
  ElementarySpec a{z, {1, 1}, {el(z, {0}), el(z, {1})}};
  ElementarySpec b{z, {1, 1}, {el(z, {0}), el(z, {0})}};
  PipelineOptions opt;
  opt.max_degree = 2;
  PipelineVerdict v = pipeline(a, trivial_factor(z), b, trivial_factor(z), opt);
  CHECK(v.final == "not-isomorphic");
  REQUIRE(v.distinguishing_signature.has_value());
  CHECK(v.distinguishing_signature->size() <= 2);
}

TEST_CASE("pipeline: shifted tuples over Z are isomorphic") {
  FgAbelianGroup z(1, {});
  ElementarySpec a{z, {1, 1}, {el(z, {0}), el(z, {1})}};
  ElementarySpec b{z, {1, 1}, {el(z, {7}), el(z, {8})}};
  PipelineVerdict v = pipeline(a, trivial_factor(z), b, trivial_factor(z));
  CHECK(v.final == "isomorphic");
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->verify(a, b, {identity_of(z)}));
}
