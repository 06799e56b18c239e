// Exact dense linear algebra over the cyclotomic scalars: reduced row
// echelon forms and kernels, used for identity-space and center
// computations.  Matrices here are small (tens of rows/columns).
#pragma once

#include <vector>

#include "gralg/cyclotomic.hpp"

namespace gralg {

using ScalarVec = std::vector<CycScalar>;
using ScalarMat = std::vector<ScalarVec>;

// in-place reduced row echelon form; returns the pivot columns
std::vector<int> rref(ScalarMat& m);

// canonical basis (RREF rows) of the null space of the row space of `rows`
// in dimension `ncols`
ScalarMat kernel_of_rowspace(const ScalarMat& rows, int ncols);

// Streaming echelon accumulator: rows are merged into a maintained RREF.
// Used where the row set is huge but the column count is tiny.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(int ncols) : ncols_(ncols) {}

  // returns true if the row increased the rank
  bool add_row(ScalarVec row);
  int rank() const { return (int)rows_.size(); }
  bool full_rank() const { return rank() == ncols_; }
  // canonical RREF of the accumulated row space
  const ScalarMat& rref_rows() const { return rows_; }
  // canonical RREF basis of the null space
  ScalarMat kernel() const;

 private:
  int ncols_;
  ScalarMat rows_;             // kept in RREF, sorted by pivot column
  std::vector<int> pivots_;
};

}  // namespace gralg
