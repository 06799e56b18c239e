#include "gralg/linalg.hpp"

#include <algorithm>

namespace gralg {

std::vector<int> rref(ScalarMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int ncols = (int)m[0].size();
  size_t lead = 0;
  for (int c = 0; c < ncols && lead < m.size(); ++c) {
    size_t sel = lead;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[lead], m[sel]);
    CycScalar inv = m[lead][c].inverse();
    if (!m[lead][c].is_one())
      for (auto& x : m[lead]) x = inv * x;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][c].is_zero()) continue;
      CycScalar f = m[r][c];
      for (int cc = 0; cc < ncols; ++cc) m[r][cc] = m[r][cc] - f * m[lead][cc];
    }
    pivots.push_back(c);
    ++lead;
  }
  // drop zero rows
  m.erase(std::remove_if(m.begin(), m.end(),
                         [](const ScalarVec& r) {
                           return std::all_of(r.begin(), r.end(),
                                              [](const CycScalar& x) { return x.is_zero(); });
                         }),
          m.end());
  return pivots;
}

ScalarMat kernel_of_rowspace(const ScalarMat& rows, int ncols) {
  ScalarMat m = rows;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  ScalarMat kernel;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    ScalarVec v(ncols, CycScalar::zero());
    v[f] = CycScalar::one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    kernel.push_back(std::move(v));
  }
  rref(kernel);  // canonical form
  return kernel;
}

bool EchelonBuilder::add_row(ScalarVec row) {
  // reduce against existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    int p = pivots_[r];
    if (!row[p].is_zero()) {
      CycScalar f = row[p];
      for (int c = 0; c < ncols_; ++c) row[c] = row[c] - f * rows_[r][c];
    }
  }
  int lead = -1;
  for (int c = 0; c < ncols_; ++c)
    if (!row[c].is_zero()) {
      lead = c;
      break;
    }
  if (lead < 0) return false;
  CycScalar inv = row[lead].inverse();
  if (!row[lead].is_one())
    for (auto& x : row) x = inv * x;
  // back-substitute into earlier rows and insert in pivot order
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][lead].is_zero()) continue;
    CycScalar f = rows_[r][lead];
    for (int c = 0; c < ncols_; ++c) rows_[r][c] = rows_[r][c] - f * row[c];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

ScalarMat EchelonBuilder::kernel() const {
  return kernel_of_rowspace(rows_, ncols_);
}

}  // namespace gralg
