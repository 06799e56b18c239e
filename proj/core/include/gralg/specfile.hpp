// Text format for reproducible fixtures: one grading group per file, named
// algebra stanzas (ut / pauli / tensor / coarsen / dsum / matrix), subgroups
// and multilinear polynomials.  Parsing reports the first error with line and
// column; serialization round-trips to an equal model.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gralg/isomorphism.hpp"

namespace gralg {

class parse_error : public error {
 public:
  parse_error(int line, int col, const std::string& msg)
      : error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct AlgebraDecl {
  std::string name;
  std::string kind;  // ut | pauli | tensor | coarsen | dsum | matrix
  // ut
  std::vector<int> blocks;
  std::vector<GroupElement> tuple;  // also used by matrix when given
  // pauli
  std::vector<long long> pairs;
  std::vector<GroupElement> embed;  // images of the support-group generators
  // tensor / dsum: operand names; coarsen: lhs = algebra, rhs = subgroup
  std::string lhs, rhs;
  // matrix
  int msize = 0;

  bool operator==(const AlgebraDecl&) const = default;
};

struct SubgroupDecl {
  std::string name;
  std::vector<GroupElement> gens;
  bool operator==(const SubgroupDecl&) const = default;
};

struct PolyDecl {
  std::string name;
  GradedPolynomial poly;
};

struct SpecFile {
  FgAbelianGroup group;
  std::vector<AlgebraDecl> algebra_decls;   // declaration order
  std::vector<SubgroupDecl> subgroup_decls;
  std::vector<PolyDecl> poly_decls;

  // built objects, keyed by name
  std::map<std::string, GradedAlgebra> algebras;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, GradedPolynomial> polys;
  // extra structure for ut / pauli declarations
  std::map<std::string, ElementarySpec> elementary;
  std::map<std::string, GradedFactor> division;

  const GradedAlgebra& algebra(const std::string& name) const;
  const GradedPolynomial& poly(const std::string& name) const;

  std::string to_text() const;
  // declaration-level equality (built objects follow from the declarations)
  bool same_declarations(const SpecFile& o) const;
};

SpecFile parse_spec(const std::string& text);

std::string format_group(const FgAbelianGroup& g);    // "Z x Z/2 x Z/2"
std::string format_scalar(const CycScalar& c);        // reparseable form

}  // namespace gralg
