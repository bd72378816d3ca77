#pragma once

#include <map>
#include <optional>

#include "affkm/scalars.hpp"

namespace affkm {

/// Laurent polynomial in s = t^(1/m) with coefficients in Q(z_m).
///
/// Exponents are integer numerators p of t^(p/m). Zero coefficients are never
/// stored. Elements over different m never mix.
class Laurent {
 public:
  using Terms = std::map<int, CycScalar>;

  explicit Laurent(int m = 1);
  Laurent(int m, const CycScalar& constant);
  static Laurent monomial(int exponent, const CycScalar& coeff);

  int order() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CycScalar coeff(int exponent) const;
  void add_term(int exponent, const CycScalar& c);

  /// Smallest and largest exponent numerators; nullopt for zero.
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  /// Multiplication by s^k.
  Laurent shifted(int k) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const CycScalar& c);
  friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
  friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
  friend Laurent operator*(Laurent x, const CycScalar& c) { return x *= c; }
  friend Laurent operator*(const CycScalar& c, Laurent x) { return x *= c; }
  friend Laurent operator*(const Laurent& x, const Laurent& y);
  Laurent operator-() const;

  friend bool operator==(const Laurent& x, const Laurent& y);
  friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }

 private:
  void require_same(const Laurent& o) const;

  int m_ = 1;
  Terms terms_;
};

enum class SubstMode {
  Scale,   // s -> a*s
  Invert,  // s -> a*s^-1
};

/// Ring endomorphism of k[s, s^-1] determined by the image of s.
Laurent laurent_substitute(const Laurent& p, SubstMode mode, const CycScalar& a);

/// True iff p is fixed by s -> z*s, i.e. supported on exponents divisible by m.
bool gamma_invariant(const Laurent& p);

}  // namespace affkm
