#include "gralg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gralg {

namespace {

// polynomials are coefficient vectors, lowest degree first, no trailing zeros
void trim(RatVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatVec poly_mul(const RatVec& a, const RatVec& b) {
  if (a.empty() || b.empty()) return {};
  RatVec r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// a = q*b + r with deg r < deg b; b must be nonzero
void poly_divmod(RatVec a, const RatVec& b, RatVec& q, RatVec& r) {
  trim(a);
  q.assign(a.size(), Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

RatVec poly_mod(RatVec a, const RatVec& m) {
  RatVec q, r;
  trim(a);
  if (a.size() < m.size()) return a;
  poly_divmod(std::move(a), m, q, r);
  return r;
}

std::map<long long, RatVec> g_cyclo_cache;
std::mutex g_cyclo_mutex;

RatVec compute_cyclotomic(long long n);

const RatVec& cyclotomic_locked(long long n) {
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;
  RatVec p = compute_cyclotomic(n);
  return g_cyclo_cache.emplace(n, std::move(p)).first->second;
}

RatVec compute_cyclotomic(long long n) {
  // x^n - 1 divided by Phi_d for all proper divisors d
  RatVec num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RatVec q, r;
    poly_divmod(std::move(num), cyclotomic_locked(d), q, r);
    if (!r.empty()) throw std::logic_error("cyclotomic: division not exact");
    num = std::move(q);
  }
  return num;
}

}  // namespace

const RatVec& cyclotomic_polynomial(long long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: order must be positive");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return cyclotomic_locked(n);
}

static size_t field_degree(long long n) {
  return cyclotomic_polynomial(n).size() - 1;
}

CycScalar CycScalar::from_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return CycScalar(1, {c});
}

CycScalar CycScalar::root_of_unity(long long n, long long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  k %= n;
  if (k < 0) k += n;
  RatVec p(k + 1, Rational(0));
  p[k] = 1;
  p = poly_mod(std::move(p), cyclotomic_polynomial(n));
  p.resize(field_degree(n) == 0 ? 1 : field_degree(n), Rational(0));
  if (n == 1) return CycScalar(1, {p.empty() ? Rational(1) : p[0]});
  return CycScalar(n, std::move(p));
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycScalar::rational_value() const {
  CycScalar c = canonical();
  if (c.order_ != 1) throw std::domain_error("CycScalar: not rational");
  return c.coeffs_[0];
}

CycScalar CycScalar::embedded(long long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw std::invalid_argument("embed: order does not divide");
  // zeta_N = zeta_M^{M/N}
  long long step = m / order_;
  RatVec p(coeffs_.size() == 0 ? 1 : (coeffs_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  p = poly_mod(std::move(p), cyclotomic_polynomial(m));
  p.resize(field_degree(m), Rational(0));
  return CycScalar(m, std::move(p));
}

CycScalar CycScalar::canonical() const {
  if (order_ == 1) return *this;
  if (is_zero()) return zero();
  // try divisors of order_ in increasing order; express this value in the
  // embedded power basis of Q(zeta_d) by solving a small linear system
  for (long long d = 1; d < order_; ++d) {
    if (order_ % d != 0) continue;
    size_t dd = field_degree(d);
    // columns: embedded basis vectors zeta_d^i
    std::vector<RatVec> cols;
    for (size_t i = 0; i < dd; ++i)
      cols.push_back(CycScalar::root_of_unity(d, i).embedded(order_).coeffs_);
    // gaussian elimination on [cols | value]
    size_t rows = coeffs_.size();
    std::vector<RatVec> m(rows, RatVec(dd + 1, Rational(0)));
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < dd; ++c) m[r][c] = cols[c][r];
      m[r][dd] = coeffs_[r];
    }
    size_t lead = 0;
    std::vector<long long> pivot_col(rows, -1);
    for (size_t c = 0; c < dd && lead < rows; ++c) {
      size_t sel = lead;
      while (sel < rows && m[sel][c] == 0) ++sel;
      if (sel == rows) continue;
      std::swap(m[lead], m[sel]);
      Rational inv = 1 / m[lead][c];
      for (auto& x : m[lead]) x *= inv;
      for (size_t r = 0; r < rows; ++r) {
        if (r == lead || m[r][c] == 0) continue;
        Rational f = m[r][c];
        for (size_t cc = 0; cc <= dd; ++cc) m[r][cc] -= f * m[lead][cc];
      }
      pivot_col[lead] = (long long)c;
      ++lead;
    }
    bool consistent = true;
    for (size_t r = lead; r < rows; ++r)
      if (m[r][dd] != 0) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    RatVec sol(dd == 0 ? 1 : dd, Rational(0));
    for (size_t r = 0; r < lead; ++r) sol[pivot_col[r]] = m[r][dd];
    if (d == 1) return CycScalar(1, {sol[0]});
    return CycScalar(d, std::move(sol));
  }
  return *this;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  if (a.order_ == b.order_) {
    RatVec c = a.coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return CycScalar(a.order_, std::move(c));
  }
  long long m = std::lcm(a.order_, b.order_);
  return a.embedded(m) + b.embedded(m);
}

CycScalar operator-(const CycScalar& a) {
  RatVec c = a.coeffs_;
  for (auto& x : c) x = -x;
  return CycScalar(a.order_, std::move(c));
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (a.order_ == 1) {  // rational scaling fast path
    if (a.coeffs_[0] == 1) return b;
    RatVec c = b.coeffs_;
    for (auto& x : c) x *= a.coeffs_[0];
    return CycScalar(b.order_, std::move(c));
  }
  if (b.order_ == 1) return b * a;
  if (a.order_ == b.order_) {
    RatVec p = poly_mul(a.coeffs_, b.coeffs_);
    p = poly_mod(std::move(p), cyclotomic_polynomial(a.order_));
    p.resize(a.coeffs_.size(), Rational(0));
    return CycScalar(a.order_, std::move(p));
  }
  long long m = std::lcm(a.order_, b.order_);
  return a.embedded(m) * b.embedded(m);
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: division by zero");
  if (order_ == 1) return CycScalar(1, {1 / coeffs_[0]});
  // extended euclid in Q[x]: s*a + t*Phi = gcd = const
  RatVec r0 = cyclotomic_polynomial(order_), r1 = coeffs_;
  trim(r1);
  RatVec t0 = {}, t1 = {Rational(1)};
  while (!r1.empty() && r1.size() > 1) {
    RatVec q, r;
    poly_divmod(r0, r1, q, r);
    RatVec t2 = t0;
    RatVec qt = poly_mul(q, t1);
    t2.resize(std::max(t2.size(), qt.size()), Rational(0));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    trim(t2);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.empty()) throw std::logic_error("CycScalar: zero divisor in field");
  // r1 is a nonzero constant: inverse = t1 / r1[0]
  RatVec inv = t1;
  for (auto& x : inv) x /= r1[0];
  inv = poly_mod(std::move(inv), cyclotomic_polynomial(order_));
  inv.resize(coeffs_.size(), Rational(0));
  return CycScalar(order_, std::move(inv));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  return (a - b).is_zero();
}

std::string CycScalar::to_string() const {
  CycScalar c = canonical();
  if (c.order_ == 1) return c.coeffs_[0].get_str();
  std::string s;
  for (size_t i = 0; i < c.coeffs_.size(); ++i) {
    if (c.coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string term = c.coeffs_[i].get_str();
    if (i > 0) {
      term += "*zeta(" + std::to_string(c.order_) + ")";
      if (i > 1) term += "^" + std::to_string(i);
    }
    s += term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace gralg
