#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "affkm/loop.hpp"
#include "affkm/report.hpp"

namespace affkm {

/// x' + a c + b d with x' in the loop algebra.
class AffineElt {
 public:
  AffineElt() = default;
  AffineElt(const ChevAlgebra* g, int m);
  explicit AffineElt(LoopElt loop);
  AffineElt(LoopElt loop, CycScalar c, CycScalar d);

  static AffineElt central(const ChevAlgebra* g, const CycScalar& a);
  static AffineElt derivation(const ChevAlgebra* g, const CycScalar& b);

  const ChevAlgebra* algebra() const { return loop.algebra(); }
  int order() const { return loop.order(); }
  bool is_zero() const { return loop.is_zero() && c.is_zero() && d.is_zero(); }
  bool in_core() const { return d.is_zero(); }

  AffineElt& operator+=(const AffineElt& o);
  AffineElt& operator-=(const AffineElt& o);
  AffineElt& operator*=(const CycScalar& a);
  friend AffineElt operator+(AffineElt x, const AffineElt& y) { return x += y; }
  friend AffineElt operator-(AffineElt x, const AffineElt& y) { return x -= y; }
  friend AffineElt operator*(const CycScalar& a, AffineElt x) { return x *= a; }
  AffineElt operator-() const;

  friend bool operator==(const AffineElt& x, const AffineElt& y);
  friend bool operator!=(const AffineElt& x, const AffineElt& y) { return !(x == y); }

  LoopElt loop;
  CycScalar c;
  CycScalar d;
};

/// s^p component scaled by p.
LoopElt degree_derivation(const LoopElt& x);

/// Bracket of the extended algebra: loop bracket, the cocycle p<x,y> delta_{p+q,0} c,
/// and d acting by the exponent numerator.
AffineElt bracket_affine(const AffineElt& x, const AffineElt& y);

/// Invariant form with (c, d) = beta; the loop pairing is beta <a,b> delta_{i+j,0}.
CycScalar invariant_form(const AffineElt& x, const AffineElt& y, const CycScalar& beta);

/// Monomial basis of a degree window, optionally with c and d appended.
std::vector<AffineElt> affine_window_basis(const LoopAlgebra& alg, int lo, int hi, bool with_c, bool with_d);

/// Column indexer over (basis, exponent) keys plus c and d; lets arbitrary
/// finite sets of elements be compared as coordinate vectors.
class SupportIndex {
 public:
  void add(const AffineElt& x);
  void add_all(const std::vector<AffineElt>& xs);
  std::size_t size() const { return index_.size(); }
  /// Coordinates over the registered keys; throws if x has unregistered support.
  Vec coords(const AffineElt& x) const;
  std::vector<Vec> coords(const std::vector<AffineElt>& xs) const;
  int order() const { return m_; }

 private:
  int m_ = 1;
  std::map<std::pair<long, int>, std::size_t> index_;
};

/// Rank and membership of spans of affine elements.
std::size_t affine_span_rank(const std::vector<AffineElt>& xs);
bool affine_in_span(const std::vector<AffineElt>& basis, const AffineElt& x);
bool affine_same_span(const std::vector<AffineElt>& a, const std::vector<AffineElt>& b);

Report verify_jacobi_affine(const LoopAlgebra& alg, int lo, int hi);
Report verify_form_invariance(const LoopAlgebra& alg, std::size_t samples, int lo, int hi, const CycScalar& beta,
                              std::uint64_t seed);
/// Gram matrices on every symmetric window [-k, k], k <= radius, loop part and hat level.
Report verify_gram(const LoopAlgebra& alg, int radius, const CycScalar& beta);
/// Brackets of window elements span the loop window plus c and never reach d.
Report core_and_derived(const LoopAlgebra& alg, int lo, int hi);

}  // namespace affkm
