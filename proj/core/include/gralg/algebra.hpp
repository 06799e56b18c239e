// Finite-dimensional group-graded algebras with explicit homogeneous bases
// and sparse structure constants, together with the constructions used
// throughout: elementary gradings on upper block-triangular matrix algebras,
// Pauli-type division gradings, tensor products, coarsenings, direct sums,
// and the structural helpers (neutral component decomposition, radical
// powers, centers, invariance subgroups).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gralg/cyclotomic.hpp"
#include "gralg/group.hpp"
#include "gralg/linalg.hpp"

namespace gralg {

struct SparseTerm {
  int index;
  CycScalar coeff;
};
// sparse vector over the basis, sorted by index, no zero coefficients
using SparseVec = std::vector<SparseTerm>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const CycScalar& c, const SparseVec& a);
bool sparse_is_zero(const SparseVec& a);
bool sparse_equal(const SparseVec& a, const SparseVec& b);

struct AlgebraElement {
  SparseVec coeffs;

  static AlgebraElement basis(int index) {
    return {{{index, CycScalar::one()}}};
  }
  bool is_zero() const { return sparse_is_zero(coeffs); }
};

// elementary grading data: UT(d_1,...,d_m) with degree tuple (g_1,...,g_n)
struct ElementarySpec {
  FgAbelianGroup group;
  std::vector<int> blocks;          // d_1,...,d_m, each >= 1
  std::vector<GroupElement> tuple;  // length n = sum d_i

  int n() const;
  int block_of(int i) const;   // 0-based matrix index -> block number
  void validate() const;
};

// Pauli-type division grading data: each pair n_i contributes a clock/shift
// pair on M_{n_i}, support factor Z_{n_i} x Z_{n_i}, p.i. degree factor n_i
struct DivisionSpec {
  std::vector<long long> pairs;  // each >= 1

  long long pi_degree() const;   // t = prod n_i
  FgAbelianGroup support_group() const;  // prod over n_i >= 2 of (Z_n)^2
};

// alternating bicharacter on a finite subgroup, stored as a full value table
// over the listed support elements
class Bicharacter {
 public:
  Bicharacter() = default;
  Bicharacter(std::vector<GroupElement> support, ScalarMat table);

  const std::vector<GroupElement>& support() const { return support_; }
  const CycScalar& value(const GroupElement& g, const GroupElement& h) const;

  bool is_alternating() const;
  bool is_bimultiplicative() const;

  // pushforward along an injective map of the support
  Bicharacter mapped(const GroupHom& phi) const;

  bool operator==(const Bicharacter& o) const;

 private:
  std::vector<GroupElement> support_;  // sorted
  ScalarMat table_;                    // table_[i][j] = beta(support_[i], support_[j])
};

class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(FgAbelianGroup group, std::vector<std::string> labels,
                std::vector<GroupElement> degrees,
                std::map<std::pair<int, int>, SparseVec> products,
                std::optional<SparseVec> unity);

  int dim() const { return (int)labels_.size(); }
  const FgAbelianGroup& group() const { return group_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const GroupElement& degree(int i) const { return degrees_[i]; }
  const std::optional<SparseVec>& unity() const { return unity_; }

  // product of basis elements i, j
  const SparseVec& product(int i, int j) const { return prod_[i * dim() + j]; }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;

  // distinct degrees with nonzero component, sorted
  std::vector<GroupElement> support() const;
  std::vector<int> component(const GroupElement& g) const;
  std::vector<int> neutral_indices() const;

  // grading axiom A_g A_h <= A_{gh}, checked over all basis pairs; on
  // failure returns the offending pair of basis indices
  bool verify_grading(std::pair<int, int>* offending = nullptr) const;
  bool check_associativity() const;

  // subalgebra spanned by a subset of basis elements; throws if the span is
  // not closed under the product
  GradedAlgebra subalgebra(const std::vector<int>& indices) const;

 private:
  FgAbelianGroup group_;
  std::vector<std::string> labels_;
  std::vector<GroupElement> degrees_;
  std::vector<SparseVec> prod_;  // dense dim x dim table of sparse products
  std::optional<SparseVec> unity_;
};

// ---- constructors ----

GradedAlgebra build_ut_elementary(const ElementarySpec& spec);

struct PauliAlgebra {
  GradedAlgebra algebra;  // graded by spec.support_group()
  Bicharacter bicharacter;
};
PauliAlgebra build_pauli_division(const DivisionSpec& spec);

// tensor product; groups must coincide (use tensor_embedded otherwise)
GradedAlgebra tensor(const GradedAlgebra& a, const GradedAlgebra& b);

struct EmbeddedTensor {
  GradedAlgebra algebra;  // over the product group
  ProductGroup product;
};
EmbeddedTensor tensor_embedded(const GradedAlgebra& a, const GradedAlgebra& b);

// regrade along a homomorphism of the grading group
GradedAlgebra coarsen(const GradedAlgebra& a, const GroupHom& phi);

// direct sum with componentwise product (same grading group)
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);

// trivially graded full matrix algebra M_n over the given group
GradedAlgebra matrix_algebra(int n, const FgAbelianGroup& group);

// G-grading transported along phi: G -> H injective on S u (S+S), with
// supp B <= phi(S); throws with the offending pair on precondition failure
GradedAlgebra transport_grading(const GradedAlgebra& b, const GroupHom& phi,
                                const std::vector<GroupElement>& s);

// ---- structure of elementary gradings ----

GradedAlgebra neutral_component(const GradedAlgebra& a);

struct NeutralIdeal {
  std::vector<int> basis_indices;     // into the full algebra's basis
  std::vector<int> shape;             // upper block-triangular block sizes
  std::vector<std::vector<int>> index_sets;  // I_s n J_k per original block
  GradedAlgebra algebra;
};
// A_e = B_1 + ... + B_r as ideals, one per distinct tuple entry
std::vector<NeutralIdeal> decompose_neutral(const ElementarySpec& spec);

// basis indices of J(A)^k inside build_ut_elementary(spec); k = 0 gives the
// whole algebra
std::vector<int> radical_power(const ElementarySpec& spec, int k);

// basis of the center, as elements of the given algebra
std::vector<AlgebraElement> center_of(const GradedAlgebra& a);

// replace the tuple by coset representatives constant on equal cosets of H
ElementarySpec normalize_representatives(const ElementarySpec& spec,
                                         const Subgroup& h);

struct OmegaInvariance {
  std::map<GroupElement, long long> omega;  // multiplicity function
  Subgroup invariance;                      // H_A
};
// multiplicity map and invariance subgroup of an elementary grading tuple on
// a single matrix block
OmegaInvariance omega_and_invariance(const FgAbelianGroup& g,
                                     const std::vector<GroupElement>& tuple);

}  // namespace gralg
