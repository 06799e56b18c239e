#include "gralg/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gralg {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMat hnf_rows(IntMat rows, int k) {
  // discard zero rows up front
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const IntVec& r) {
                              return std::all_of(r.begin(), r.end(),
                                                 [](long long x) { return x == 0; });
                            }),
             rows.end());
  for (auto& r : rows)
    if ((int)r.size() != k) throw std::invalid_argument("hnf_rows: bad row length");

  IntMat out;
  size_t top = 0;
  for (int col = 0; col < k; ++col) {
    // eliminate column entries below `top` down to a single pivot row
    while (true) {
      size_t best = rows.size();
      for (size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 &&
            (best == rows.size() ||
             std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        long long q = floordiv(rows[i][col], rows[top][col]);
        for (int c = 0; c < k; ++c) rows[i][c] -= q * rows[top][c];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (top < rows.size() && rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (int c = 0; c < k; ++c) rows[top][c] = -rows[top][c];
      ++top;
    }
  }
  rows.resize(top);
  // reduce entries above pivots
  for (size_t i = rows.size(); i-- > 0;) {
    int pc = 0;
    while (rows[i][pc] == 0) ++pc;
    for (size_t j = 0; j < i; ++j) {
      long long q = floordiv(rows[j][pc], rows[i][pc]);
      if (q != 0)
        for (int c = 0; c < k; ++c) rows[j][c] -= q * rows[i][c];
    }
  }
  return rows;
}

IntVec hnf_reduce(const IntMat& hnf, IntVec v) {
  for (const auto& row : hnf) {
    int pc = 0;
    while (row[pc] == 0) ++pc;
    long long q = floordiv(v[pc], row[pc]);
    if (q != 0)
      for (size_t c = 0; c < v.size(); ++c) v[c] -= q * row[c];
  }
  return v;
}

SmithResult smith_normal_form(IntMat A, int k, int l) {
  for (auto& r : A)
    if ((int)r.size() != l) throw std::invalid_argument("smith: bad row length");
  A.resize(k, IntVec(l, 0));

  IntMat U(k, IntVec(k, 0));
  for (int i = 0; i < k; ++i) U[i][i] = 1;

  auto row_sub = [&](int dst, int src, long long q) {
    for (int c = 0; c < l; ++c) A[dst][c] -= q * A[src][c];
    for (int c = 0; c < k; ++c) U[dst][c] -= q * U[src][c];
  };
  auto row_swap = [&](int a, int b) {
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
  };
  auto col_sub = [&](int dst, int src, long long q) {
    for (int r = 0; r < k; ++r) A[r][dst] -= q * A[r][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < k; ++r) std::swap(A[r][a], A[r][b]);
  };

  int t = 0;
  int bound = std::min(k, l);
  while (t < bound) {
    // locate smallest nonzero entry in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < k; ++i)
      for (int j = t; j < l; ++j)
        if (A[i][j] != 0 &&
            (pi < 0 || std::llabs(A[i][j]) < std::llabs(A[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool again = false;
    for (int i = t + 1; i < k; ++i)
      if (A[i][t] != 0) {
        long long q = floordiv(A[i][t], A[t][t]);
        row_sub(i, t, q);
        if (A[i][t] != 0) again = true;
      }
    for (int j = t + 1; j < l; ++j)
      if (A[t][j] != 0) {
        long long q = floordiv(A[t][j], A[t][t]);
        col_sub(j, t, q);
        if (A[t][j] != 0) again = true;
      }
    if (again) continue;

    // enforce the divisibility chain
    bool fixed = false;
    for (int i = t + 1; i < k && !fixed; ++i)
      for (int j = t + 1; j < l && !fixed; ++j)
        if (A[i][j] % A[t][t] != 0) {
          row_sub(t, i, -1);  // add row i to row t
          fixed = true;
        }
    if (fixed) continue;

    if (A[t][t] < 0) {
      for (int c = 0; c < l; ++c) A[t][c] = -A[t][c];
      for (int c = 0; c < k; ++c) U[t][c] = -U[t][c];
    }
    ++t;
  }

  SmithResult res;
  for (int i = 0; i < t; ++i) res.diag.push_back(A[i][i]);
  res.U = std::move(U);
  return res;
}

}  // namespace gralg
