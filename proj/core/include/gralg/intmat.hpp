// Small exact integer-matrix utilities: Hermite and Smith normal forms for
// lattices in Z^k.  Sizes here are tiny (ranks < 16), so plain int64
// arithmetic with Euclidean row/column operations is enough.
#pragma once

#include <cstdint>
#include <vector>

namespace gralg {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major

// Canonical row-style Hermite normal form of the lattice spanned by the rows
// of `rows` in Z^k.  Result rows have positive pivots in strictly increasing
// pivot columns, entries above each pivot reduced into [0, pivot).
IntMat hnf_rows(IntMat rows, int k);

// Reduces v modulo the lattice given by a canonical HNF.  The result is the
// canonical coset representative; it is the zero vector iff v is a member.
IntVec hnf_reduce(const IntMat& hnf, IntVec v);

struct SmithResult {
  std::vector<long long> diag;  // d_1 | d_2 | ... | d_r, all positive
  IntMat U;                     // k x k unimodular, S = U * A * V
};

// Smith normal form of the k x l matrix A (only the left transform U is
// returned; the right transform acts on columns and is not needed by
// callers).  diag lists the nonzero invariant factors.
SmithResult smith_normal_form(IntMat A, int k, int l);

}  // namespace gralg
