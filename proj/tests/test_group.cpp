#include <doctest.h>

#include <algorithm>
#include <set>

#include "gralg/group.hpp"

using namespace gralg;

namespace {

// brute-force closure of a generating set in a finite group
std::set<GroupElement> closure(const FgAbelianGroup& g,
                               const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{identity_of(g)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> cur(seen.begin(), seen.end());
    for (const auto& a : cur)
      for (const auto& b : gens) {
        if (seen.insert(compose(a, b)).second) grew = true;
        if (seen.insert(compose(a, inverse(b))).second) grew = true;
      }
  }
  return seen;
}

}  // namespace

TEST_CASE("canonicalization and arithmetic") {
  FgAbelianGroup g(1, {2, 4});
  GroupElement a(g, {3, 5, -1});
  CHECK(a.coords() == IntVec{3, 1, 3});
  GroupElement b(g, {-3, 1, 1});
  CHECK(compose(a, b).is_identity());
  CHECK(inverse(a) == b);
  CHECK(scale(4, GroupElement(g, {0, 1, 1})) == GroupElement(g, {0, 0, 0}));
  CHECK(a.to_string() == "[3,1,3]");
}

TEST_CASE("all_elements is exhaustive and lex sorted") {
  FgAbelianGroup g(0, {2, 3});
  auto elems = all_elements(g);
  CHECK((long long)elems.size() == g.order());
  CHECK(g.order() == 6);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(std::set<GroupElement>(elems.begin(), elems.end()).size() == 6);
}

TEST_CASE("homomorphisms respect torsion relations") {
  FgAbelianGroup z2(0, {2});
  FgAbelianGroup z4(0, {4});
  // Z/2 -> Z/4 sending the generator to an order-4 element is not well defined
  CHECK_THROWS_AS(GroupHom(z2, z4, {GroupElement(z4, {1})}), error);
  GroupHom ok(z2, z4, {GroupElement(z4, {2})});
  CHECK(ok.apply(GroupElement(z2, {1})) == GroupElement(z4, {2}));
  CHECK(GroupHom::identity(z4).apply(GroupElement(z4, {3})) == GroupElement(z4, {3}));
}

TEST_CASE("subgroup membership matches brute-force closure") {
  FgAbelianGroup g(0, {4, 6});
  std::vector<GroupElement> gens{GroupElement(g, {2, 3}), GroupElement(g, {0, 2})};
  Subgroup h = subgroup_generated(g, gens);
  auto truth = closure(g, gens);
  for (const auto& x : all_elements(g))
    CHECK(h.contains(x) == (truth.count(x) > 0));
  auto listed = h.elements();
  CHECK(listed.size() == truth.size());
  for (const auto& x : listed) CHECK(truth.count(x) == 1);
}

TEST_CASE("coset representatives are canonical") {
  FgAbelianGroup g(0, {4, 4});
  Subgroup h = subgroup_generated(g, {GroupElement(g, {2, 2})});
  std::set<GroupElement> reps;
  for (const auto& x : all_elements(g)) {
    GroupElement r = h.coset_representative(x);
    CHECK(h.contains(compose(x, inverse(r))));  // same coset
    reps.insert(r);
    // all elements of the coset map to the same representative
    for (const auto& k : h.elements())
      CHECK(h.coset_representative(compose(x, k)) == r);
  }
  CHECK((long long)reps.size() == g.order() / (long long)h.elements().size());
}

TEST_CASE("quotient has the right order and kernel") {
  FgAbelianGroup g(0, {4, 6});
  Subgroup h = subgroup_generated(g, {GroupElement(g, {2, 0}), GroupElement(g, {0, 3})});
  auto [q, proj] = quotient(g, h);
  CHECK(q.order() == g.order() / (long long)h.elements().size());
  std::set<GroupElement> image;
  for (const auto& x : all_elements(g)) {
    CHECK(proj.apply(x).is_identity() == h.contains(x));
    image.insert(proj.apply(x));
  }
  CHECK((long long)image.size() == q.order());  // surjective
}

TEST_CASE("quotient of Z by 2Z") {
  FgAbelianGroup z(1, {});
  Subgroup h = subgroup_generated(z, {GroupElement(z, {2})});
  auto [q, proj] = quotient(z, h);
  CHECK(q == FgAbelianGroup(0, {2}));
  CHECK(proj.apply(GroupElement(z, {5})) == GroupElement(q, {1}));
  CHECK(proj.apply(GroupElement(z, {-4})).is_identity());
}

TEST_CASE("finite reduction picks the minimal modulus") {
  FgAbelianGroup z(1, {});
  std::vector<GroupElement> s{GroupElement(z, {0}), GroupElement(z, {1}),
                              GroupElement(z, {3})};
  FiniteReduction fr = finite_reduction(z, s);
  // oracle: least m such that x mod m is injective on S u (S+S) = {0..6 minus 5}
  std::vector<long long> su{0, 1, 2, 3, 4, 6};
  long long expect = 0;
  for (long long m = 1;; ++m) {
    std::set<long long> seen;
    bool ok = true;
    for (long long v : su) ok = ok && seen.insert(((v % m) + m) % m).second;
    if (ok) {
      expect = m;
      break;
    }
  }
  CHECK(fr.modulus == expect);
  std::set<GroupElement> images;
  for (long long v : su)
    CHECK(images.insert(fr.phi.apply(GroupElement(z, {v}))).second);
}

TEST_CASE("finite reduction on a finite group is trivial") {
  FgAbelianGroup g(0, {2, 2});
  FiniteReduction fr = finite_reduction(g, all_elements(g));
  CHECK(fr.modulus == 1);
  CHECK(fr.phi.target() == g);
}

TEST_CASE("direct product inclusions") {
  FgAbelianGroup a(0, {2});
  FgAbelianGroup b(1, {3});
  ProductGroup p = direct_product(a, b);
  CHECK(p.group.rank() == 3);
  GroupElement x = p.left.apply(GroupElement(a, {1}));
  GroupElement y = p.right.apply(GroupElement(b, {2, 1}));
  CHECK(compose(x, y) == compose(y, x));
  CHECK_FALSE(compose(x, y).is_identity());
}
