#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace affkm {

using Rational = mpq_class;

/// Raised when two exact objects built over different roots of unity meet.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of the cyclotomic field Q(z), z a primitive m-th root of unity,
/// m in {1, 2, 3}.
///
/// The value is kept as the residue a + b*z modulo the m-th cyclotomic
/// polynomial. For m = 1 and m = 2 the field is Q and b is always zero; for
/// m = 3 the reduction uses z^2 = -1 - z. Rationals are kept in lowest terms,
/// so structural equality is field equality.
class CycScalar {
 public:
  CycScalar() = default;
  explicit CycScalar(int m);
  CycScalar(int m, long value);
  CycScalar(int m, Rational a, Rational b = 0);

  /// The fixed primitive root of unity z of order m.
  static CycScalar zeta(int m);
  /// z^k for any integer k.
  static CycScalar zeta_pow(int m, long k);

  int order() const { return m_; }
  const Rational& rational_part() const { return a_; }
  const Rational& zeta_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  CycScalar zero() const { return CycScalar(m_); }
  CycScalar one() const { return CycScalar(m_, 1); }

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);

  friend CycScalar operator+(CycScalar x, const CycScalar& y) { return x += y; }
  friend CycScalar operator-(CycScalar x, const CycScalar& y) { return x -= y; }
  friend CycScalar operator*(CycScalar x, const CycScalar& y) { return x *= y; }
  friend CycScalar operator/(CycScalar x, const CycScalar& y) { return x /= y; }
  CycScalar operator-() const;

  CycScalar& operator*=(const Rational& r);
  friend CycScalar operator*(CycScalar x, const Rational& r) { return x *= r; }
  friend CycScalar operator*(const Rational& r, CycScalar x) { return x *= r; }

  friend bool operator==(const CycScalar& x, const CycScalar& y);
  friend bool operator!=(const CycScalar& x, const CycScalar& y) { return !(x == y); }

  /// Multiplicative inverse. Throws std::domain_error on zero.
  CycScalar inverse() const;
  CycScalar pow(long k) const;

  /// Numeric image under the embedding z -> exp(2*pi*i/m).
  std::complex<double> to_complex() const;

  /// Canonical text: "3/2", "-z", "(1/2-3*z)".
  std::string str() const;

 private:
  void require_same(const CycScalar& o) const;
  void reduce();

  int m_ = 1;
  Rational a_{0};
  Rational b_{0};
};

/// Total order used to key weights; not compatible with field operations.
struct CycLess {
  bool operator()(const CycScalar& x, const CycScalar& y) const;
};

/// Field element product with an explicit mismatch check.
CycScalar cyc_mul(const CycScalar& a, const CycScalar& b);

/// Degree [Q(z):Q] for the supported orders.
int cyclotomic_degree(int m);

void require_supported_order(int m);

}  // namespace affkm
