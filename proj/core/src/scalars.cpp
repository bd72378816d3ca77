#include "affkm/scalars.hpp"

#include <cmath>
#include <numbers>

namespace affkm {

void require_supported_order(int m) {
  if (m < 1 || m > 3) {
    throw std::invalid_argument("root of unity order must be 1, 2 or 3, got " + std::to_string(m));
  }
}

int cyclotomic_degree(int m) {
  require_supported_order(m);
  return m == 3 ? 2 : 1;
}

CycScalar::CycScalar(int m) : m_(m) { require_supported_order(m); }

CycScalar::CycScalar(int m, long value) : m_(m), a_(value) { require_supported_order(m); }

CycScalar::CycScalar(int m, Rational a, Rational b) : m_(m), a_(std::move(a)), b_(std::move(b)) {
  require_supported_order(m);
  a_.canonicalize();
  b_.canonicalize();
  reduce();
}

void CycScalar::reduce() {
  if (m_ != 3 && sgn(b_) != 0) {
    // z = 1 for m = 1 and z = -1 for m = 2.
    if (m_ == 1) {
      a_ += b_;
    } else {
      a_ -= b_;
    }
    b_ = 0;
  }
}

CycScalar CycScalar::zeta(int m) { return zeta_pow(m, 1); }

CycScalar CycScalar::zeta_pow(int m, long k) {
  require_supported_order(m);
  long r = ((k % m) + m) % m;
  switch (m) {
    case 1:
      return CycScalar(1, 1);
    case 2:
      return CycScalar(2, r == 0 ? 1 : -1);
    default:
      if (r == 0) return CycScalar(3, 1);
      if (r == 1) return CycScalar(3, Rational(0), Rational(1));
      return CycScalar(3, Rational(-1), Rational(-1));
  }
}

void CycScalar::require_same(const CycScalar& o) const {
  if (m_ != o.m_) {
    throw FieldMismatch("cyclotomic order mismatch: " + std::to_string(m_) + " vs " +
                        std::to_string(o.m_));
  }
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  require_same(o);
  a_ += o.a_;
  if (m_ == 3) b_ += o.b_;
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  require_same(o);
  a_ -= o.a_;
  if (m_ == 3) b_ -= o.b_;
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  require_same(o);
  if (m_ != 3) {
    a_ *= o.a_;
    return *this;
  }
  // (a + bz)(c + dz) = ac - bd + (ad + bc - bd) z, using z^2 = -1 - z.
  Rational ac = a_ * o.a_;
  Rational bd = b_ * o.b_;
  Rational cross = a_ * o.b_ + b_ * o.a_;
  a_ = ac - bd;
  b_ = cross - bd;
  return *this;
}

CycScalar& CycScalar::operator*=(const Rational& r) {
  a_ *= r;
  if (m_ == 3) b_ *= r;
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(z)");
  if (m_ != 3) return CycScalar(m_, 1 / a_);
  // Norm a^2 - ab + b^2; conjugate (a - b) - bz.
  Rational norm = a_ * a_ - a_ * b_ + b_ * b_;
  return CycScalar(3, (a_ - b_) / norm, -b_ / norm);
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

CycScalar CycScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycScalar result = one();
  CycScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool operator==(const CycScalar& x, const CycScalar& y) {
  x.require_same(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::complex<double> CycScalar::to_complex() const {
  double a = a_.get_d();
  if (m_ != 3) return {a, 0.0};
  double b = b_.get_d();
  return {a - 0.5 * b, b * std::numbers::sqrt3 / 2.0};
}

namespace {

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace

std::string CycScalar::str() const {
  if (sgn(b_) == 0) return rational_str(a_);
  std::string zpart;
  if (b_ == 1) {
    zpart = "z";
  } else if (b_ == -1) {
    zpart = "-z";
  } else {
    zpart = rational_str(b_) + "*z";
  }
  if (sgn(a_) == 0) return zpart;
  std::string out = "(" + rational_str(a_);
  out += zpart.front() == '-' ? zpart : "+" + zpart;
  return out + ")";
}

bool CycLess::operator()(const CycScalar& x, const CycScalar& y) const {
  if (x.order() != y.order()) return x.order() < y.order();
  if (x.rational_part() != y.rational_part()) return x.rational_part() < y.rational_part();
  return x.zeta_part() < y.zeta_part();
}

CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) { return a * b; }

}  // namespace affkm
