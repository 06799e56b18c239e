// Finitely generated abelian groups in invariant-factor normal form
// Z^p x Z_{n_1} x ... x Z_{n_q}, their elements, homomorphisms, subgroups and
// quotients.  Elements are integer coordinate vectors with torsion
// coordinates kept reduced into [0, n_i).
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gralg/intmat.hpp"

namespace gralg {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(int free_rank, std::vector<long long> torsion_moduli);

  int free_rank() const { return free_rank_; }
  const std::vector<long long>& torsion_moduli() const { return moduli_; }
  int rank() const { return free_rank_ + (int)moduli_.size(); }
  bool is_trivial() const { return rank() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  long long order() const;  // requires finite

  bool operator==(const FgAbelianGroup& o) const = default;

  // reduce torsion coordinates of a raw coordinate vector
  IntVec canonicalize(IntVec coords) const;

  std::string to_string() const;  // e.g. "Z^2 x Z/2 x Z/4"

 private:
  int free_rank_ = 0;
  std::vector<long long> moduli_;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FgAbelianGroup group, IntVec coords);

  const FgAbelianGroup& group() const { return group_; }
  const IntVec& coords() const { return coords_; }
  bool is_identity() const;

  bool operator==(const GroupElement& o) const = default;
  // lexicographic on coordinate vectors; the tie-break order used everywhere
  bool operator<(const GroupElement& o) const;

  std::string to_string() const;  // "[a,b,c]"

 private:
  FgAbelianGroup group_;
  IntVec coords_;
};

GroupElement identity_of(const FgAbelianGroup& g);
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement scale(long long n, const GroupElement& a);

// all elements of a finite group, in lexicographic coordinate order
std::vector<GroupElement> all_elements(const FgAbelianGroup& g);

class GroupHom {
 public:
  GroupHom() = default;
  // images of the p+q standard generators; well-definedness on torsion
  // relations is checked at construction
  GroupHom(FgAbelianGroup source, FgAbelianGroup target,
           std::vector<GroupElement> images);

  static GroupHom identity(const FgAbelianGroup& g);
  static GroupHom trivial(const FgAbelianGroup& source,
                          const FgAbelianGroup& target);

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const std::vector<GroupElement>& images() const { return images_; }

  GroupElement apply(const GroupElement& x) const;

 private:
  FgAbelianGroup source_;
  FgAbelianGroup target_;
  std::vector<GroupElement> images_;
};

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(FgAbelianGroup parent, std::vector<GroupElement> generators);

  const FgAbelianGroup& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  // canonical HNF of the coordinate lattice (generators + parent relations)
  const IntMat& lattice_hnf() const { return hnf_; }

  bool contains(const GroupElement& x) const;
  // canonical coset representative of x + H
  GroupElement coset_representative(const GroupElement& x) const;
  bool is_trivial() const;

  // all subgroup elements; requires the subgroup to be finite
  std::vector<GroupElement> elements() const;

  // equality as subgroups of the same parent
  bool operator==(const Subgroup& o) const;

 private:
  FgAbelianGroup parent_;
  std::vector<GroupElement> gens_;
  IntMat hnf_;
};

Subgroup subgroup_generated(const FgAbelianGroup& g,
                            const std::vector<GroupElement>& gens);

// quotient G/H in invariant-factor normal form together with the canonical
// projection; the projection is surjective with kernel exactly H
std::pair<FgAbelianGroup, GroupHom> quotient(const FgAbelianGroup& g,
                                             const Subgroup& h);

struct FiniteReduction {
  long long modulus;  // minimal m making phi injective on S u (S+S)
  GroupHom phi;       // G -> (Z_m)^p x torsion(G)
};

// Reduction of the free part mod m, with m the least modulus whose induced
// map is injective on S u (S+S).  For finite G this is m = 1 and the
// identity map.
FiniteReduction finite_reduction(const FgAbelianGroup& g,
                                 const std::vector<GroupElement>& s);

// direct product, with the two coordinate inclusions
struct ProductGroup {
  FgAbelianGroup group;
  GroupHom left;   // a -> group
  GroupHom right;  // b -> group
};
ProductGroup direct_product(const FgAbelianGroup& a, const FgAbelianGroup& b);

}  // namespace gralg
