#include <doctest.h>

#include "gralg/linalg.hpp"

using namespace gralg;

namespace {

RatVec poly(std::vector<long long> coeffs) {
  RatVec out;
  for (long long c : coeffs) out.emplace_back((long)c);
  return out;
}

CycScalar q(long long num, long long den = 1) {
  return CycScalar::from_rational(Rational((long)num, (long)den));
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the textbook table") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
  CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(8) == poly({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(9) == poly({1, 0, 0, 1, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("roots of unity multiply by exponent addition") {
  CycScalar z8 = CycScalar::root_of_unity(8, 1);
  CycScalar acc = CycScalar::one();
  for (int k = 0; k < 8; ++k) {
    CHECK(acc == CycScalar::root_of_unity(8, k));
    acc = acc * z8;
  }
  CHECK(acc.is_one());
  // zeta_8^2 = zeta_4 across orders
  CHECK(CycScalar::root_of_unity(8, 2) == CycScalar::root_of_unity(4, 1));
  CHECK(CycScalar::root_of_unity(2, 1) == q(-1));
}

TEST_CASE("sum of all n-th roots of unity vanishes") {
  for (long long n : {2, 3, 4, 5, 6, 8, 12}) {
    CycScalar s = CycScalar::zero();
    for (long long k = 0; k < n; ++k) s += CycScalar::root_of_unity(n, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("canonical form collapses to the smallest order") {
  CycScalar v = CycScalar::root_of_unity(4, 2);  // = -1
  CHECK(v.canonical().is_rational());
  CHECK(v.canonical().rational_value() == Rational(-1));
  CHECK(v == q(-1));
  // zeta_6 = -zeta_3^2
  CHECK(CycScalar::root_of_unity(6, 1) == -CycScalar::root_of_unity(3, 2));
}

TEST_CASE("field inverse") {
  CycScalar z = CycScalar::root_of_unity(5, 2);
  CHECK((z * z.inverse()).is_one());
  CycScalar a = q(3, 7) + CycScalar::root_of_unity(3, 1);
  CHECK((a * a.inverse()).is_one());
  CHECK_THROWS(CycScalar::zero().inverse());
}

TEST_CASE("rref on a known matrix") {
  ScalarMat m{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(0), q(1)}};
  auto pivots = rref(m);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(m.size() == 2);
  CHECK(m[0] == ScalarVec{q(1), q(0), q(1)});
  CHECK(m[1] == ScalarVec{q(0), q(1), q(1)});
}

TEST_CASE("kernel basis solves the system") {
  // x + y + z = 0, x - z = 0  ->  kernel spanned by (1, -2, 1)
  ScalarMat rows{{q(1), q(1), q(1)}, {q(1), q(0), q(-1)}};
  ScalarMat k = kernel_of_rowspace(rows, 3);
  REQUIRE(k.size() == 1);
  for (const auto& row : rows) {
    CycScalar dot = CycScalar::zero();
    for (int i = 0; i < 3; ++i) dot += row[i] * k[0][i];
    CHECK(dot.is_zero());
  }
}

TEST_CASE("streaming echelon agrees with batch rref") {
  ScalarMat rows{{q(1), q(2), q(3), q(4)},
                 {q(2), q(4), q(6), q(8)},
                 {q(0), q(1), q(1), q(0)},
                 {q(1), q(0), q(1), q(4)},
                 {q(5), q(5), q(5), q(5)}};
  EchelonBuilder eb(4);
  for (auto row : rows) eb.add_row(row);
  ScalarMat batch = rows;
  rref(batch);
  CHECK(eb.rref_rows() == batch);
  CHECK(eb.rank() == (int)batch.size());
  CHECK(eb.kernel() == kernel_of_rowspace(rows, 4));
}

TEST_CASE("echelon builder reports rank growth") {
  EchelonBuilder eb(2);
  CHECK(eb.add_row({q(1), q(1)}));
  CHECK_FALSE(eb.add_row({q(2), q(2)}));
  CHECK(eb.add_row({q(0), q(1)}));
  CHECK(eb.full_rank());
  CHECK(eb.kernel().empty());
}
