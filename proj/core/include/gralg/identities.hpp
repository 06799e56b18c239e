// Decision procedures for graded polynomial identities of finite-dimensional
// graded algebras: identity checking over homogeneous basis substitutions
// (sufficient by multilinearity in characteristic zero), Capelli ranks,
// division-support recovery, multilinear identity spaces at fixed signature,
// bounded-degree identity comparison, and the division-identity transfer.
#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gralg/polynomial.hpp"

namespace gralg {

struct EngineOptions {
  int threads = 1;
  long long max_substitutions = 200'000'000;

  // reads GRALG_MAX_SUBSTITUTIONS if set
  static EngineOptions from_env();
};

struct IdentityResult {
  bool holds = false;
  // some required homogeneous component is zero: identically satisfied for
  // trivial reasons
  bool vacuous = false;
  // on a non-identity: one basis-index per variable, in variable order
  std::optional<std::vector<int>> witness;
  long long substitutions = 0;
};

// true iff the polynomial vanishes under every substitution of homogeneous
// basis elements matching the variable degrees (untyped variables range over
// the whole basis).  Alternating variable groups are detected and enumerated
// by strictly increasing tuples.
IdentityResult is_identity(const GradedPolynomial& p, const GradedAlgebra& a,
                           const EngineOptions& opt = {});

// Cap_t (untyped) on A, decided by a product-chain enumeration that only
// walks substitutions with a nonzero monomial value; equivalent to
// is_identity(capelli(t), a) but viable at larger dimensions
IdentityResult capelli_identity(const GradedAlgebra& a, int t,
                                const EngineOptions& opt = {});

struct CapelliRank {
  int t;                                  // minimal t with Cap_t an identity
  std::optional<std::vector<int>> witness;  // non-identity witness for Cap_{t-1}
};
CapelliRank capelli_rank(const GradedAlgebra& a, const EngineOptions& opt = {});

// streaming check that every value of Cap_t on A lies in the span of the
// given basis indices; on failure reports one offending substitution
bool capelli_values_in_span(const GradedAlgebra& a, int t,
                            const std::vector<int>& span_indices,
                            std::optional<std::vector<int>>* witness = nullptr,
                            const EngineOptions& opt = {});

// Cap_{t-1} x_t^g not an identity AND Cap_t with x_t retyped to g an
// identity, all remaining variables of degree e; t must be the Capelli rank
// of R_e
bool capelli_support_test(const GradedAlgebra& r, const GroupElement& g, int t,
                          const EngineOptions& opt = {});

struct SupportRecovery {
  std::vector<GroupElement> elements;  // degrees passing the support test
  bool closed;                         // closed under product and inverse
  Subgroup subgroup;                   // generated by the elements
  int capelli_rank_neutral;
};
SupportRecovery recover_division_support(const GradedAlgebra& r,
                                         const EngineOptions& opt = {});

struct IdentitySpace {
  // kernel of the evaluation matrix, rows in RREF; columns indexed by the n!
  // variable orderings in lexicographic order
  ScalarMat kernel;
  bool vacuous = false;  // some signature component is zero
  long long rows = 0;
};
IdentitySpace identity_space(const std::vector<GroupElement>& signature,
                             const GradedAlgebra& a, const EngineOptions& opt = {});

struct IdCompare {
  bool equal;
  // first distinguishing signature when unequal
  std::optional<std::vector<GroupElement>> signature;
};
// identity_space equality for every signature over supp A u supp B up to
// length max_n (non-decreasing signatures suffice: permuted signatures give
// permutation-equivalent kernels)
IdCompare same_identities_upto(const GradedAlgebra& a, const GradedAlgebra& b,
                               int max_n, const EngineOptions& opt = {});

struct AGood {
  GradedPolynomial f;  // central polynomial, variables disjoint from Capelli's
  int t;               // Capelli rank of A_e
  int k;               // matrix size whose central polynomial is used
};
// A-good polynomial for an elementary upper block-triangular grading; all
// three defining clauses are verified over basis substitutions before return
AGood a_good(const ElementarySpec& spec, const EngineOptions& opt = {});

// lhs: g an identity of B; rhs: g(f^{h_1},...,f^{h_u})Cap_{t-1} an identity
// of R.  The pair is the datum; equivalence is asserted by callers.
std::pair<bool, bool> division_transfer_check(const GradedPolynomial& g,
                                              const GradedAlgebra& b,
                                              const GradedAlgebra& r,
                                              const ElementarySpec& a_spec,
                                              const EngineOptions& opt = {});

}  // namespace gralg
