// Multilinear elements of the free graded algebra: Capelli polynomials,
// central polynomials, products, retyping, and exact evaluation.  A term is a
// permutation of the declared variables; every polynomial here is multilinear
// (sufficient in characteristic zero).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gralg/algebra.hpp"

namespace gralg {

// degree nullopt = untyped slot: substitutions range over the whole algebra
// rather than one homogeneous component
struct GradedVariable {
  std::string name;
  std::optional<GroupElement> degree;
};

struct PolyTerm {
  CycScalar coeff;
  std::vector<int> order;  // permutation of the variable indices
};

class GradedPolynomial {
 public:
  GradedPolynomial() = default;
  // validates: unique names, every term a permutation of all variables
  GradedPolynomial(std::vector<GradedVariable> vars, std::vector<PolyTerm> terms);

  int nvars() const { return (int)vars_.size(); }
  const std::vector<GradedVariable>& vars() const { return vars_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  int find_var(const std::string& name) const;  // -1 if absent

  std::string to_string() const;

 private:
  std::vector<GradedVariable> vars_;
  std::vector<PolyTerm> terms_;
};

// Cap_t = sum_{sigma in S_t} sgn(sigma) y_1 x_{sigma(1)} y_2 ... x_{sigma(t)} y_{t+1},
// variables x1..xt, y1..y{t+1}, all untyped
GradedPolynomial capelli(int t);

// retype one variable / all variables
GradedPolynomial with_degree(const GradedPolynomial& p, const std::string& var,
                             const GroupElement& g);
GradedPolynomial with_degree_all(const GradedPolynomial& p, const GroupElement& g);

// append a new variable as a right factor of every term (Cap_{t-1} x_t^g)
GradedPolynomial append_right_factor(const GradedPolynomial& p, GradedVariable v);

// product on disjoint variable sets; throws on a name collision
GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b);

// prefix every variable name, for fresh disjoint copies
GradedPolynomial rename_with_prefix(const GradedPolynomial& p, const std::string& prefix);

// multilinear central polynomial for M_k: k=1 -> x1; k=2 -> the full
// multilinearization of [x1,x2]^2; larger k unsupported
GradedPolynomial central_poly(int k);

// g(f^{h_1},...,f^{h_u}) Cap_{t-1}: each variable x_i^{h_i} of g is replaced
// by a fresh copy of f whose first variable carries degree h_i and whose
// remaining variables carry degree e, then the result is right-multiplied by
// Cap_{t-1} on fresh degree-e variables
GradedPolynomial compose_transfer(const GradedPolynomial& g, const GradedPolynomial& f,
                                  int t);

// exact evaluation; with check_admissible, values must be homogeneous of the
// variable's degree (untyped slots accept anything)
SparseVec evaluate(const GradedAlgebra& a, const GradedPolynomial& p,
                   const std::vector<SparseVec>& values, bool check_admissible = true);

}  // namespace gralg
