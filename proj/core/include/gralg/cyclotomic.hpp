// Exact arithmetic in cyclotomic fields Q(zeta_N).  A scalar is a residue
// modulo the N-th cyclotomic polynomial with arbitrary-precision rational
// coefficients; scalars of different orders embed into Q(zeta_lcm) on
// demand.  No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gralg {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

// Phi_N as a monic coefficient vector (degree phi(N)), computed by exact
// division of x^N - 1 by the proper-divisor cyclotomics; cached per order.
const RatVec& cyclotomic_polynomial(long long n);

class CycScalar {
 public:
  CycScalar() : order_(1), coeffs_{Rational(0)} {}

  static CycScalar from_rational(const Rational& r);
  static CycScalar integer(long long n) { return from_rational(Rational((long)n)); }
  static CycScalar zero() { return from_rational(0); }
  static CycScalar one() { return from_rational(1); }
  // zeta_N^k
  static CycScalar root_of_unity(long long n, long long k);

  long long order() const { return order_; }
  const RatVec& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return order_ == 1; }
  Rational rational_value() const;  // requires is_rational after canonical()

  CycScalar embedded(long long m) const;  // into Q(zeta_m), order_ | m
  // canonical form: the representation over the smallest order dividing
  // order() that contains the value
  CycScalar canonical() const;

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a);
  CycScalar inverse() const;  // throws on zero

  CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
  CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }

  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  CycScalar(long long order, RatVec coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  long long order_;
  RatVec coeffs_;  // length deg Phi_order, power basis 1, zeta, zeta^2, ...
};

}  // namespace gralg
