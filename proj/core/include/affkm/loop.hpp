#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "affkm/laurent.hpp"
#include "affkm/rootsys.hpp"

namespace affkm {

/// Element of g (x) k[s, s^-1], s = t^(1/m), stored as basis index -> Laurent.
class LoopElt {
 public:
  using Terms = std::map<std::size_t, Laurent>;

  LoopElt() = default;
  LoopElt(const ChevAlgebra* g, int m);

  static LoopElt monomial(const ChevAlgebra* g, std::size_t basis, int exponent, const CycScalar& coeff);
  /// v (x) s^exponent for a coordinate vector v.
  static LoopElt from_vec(const ChevAlgebra* g, const Vec& v, int exponent);
  static LoopElt from_degrees(const ChevAlgebra* g, int m, const std::map<int, Vec>& parts);

  const ChevAlgebra* algebra() const { return g_; }
  int order() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Laurent coeff(std::size_t basis) const;
  void add(std::size_t basis, const Laurent& p);

  /// Grouped by exponent numerator: s^p -> coordinate vector in g.
  std::map<int, Vec> by_degree() const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;
  /// max |p| over the support, 0 for zero.
  int degree_radius() const;

  LoopElt shifted(int k) const;
  /// Multiply every coefficient by the Laurent polynomial p.
  LoopElt times(const Laurent& p) const;

  LoopElt& operator+=(const LoopElt& o);
  LoopElt& operator-=(const LoopElt& o);
  LoopElt& operator*=(const CycScalar& a);
  friend LoopElt operator+(LoopElt x, const LoopElt& y) { return x += y; }
  friend LoopElt operator-(LoopElt x, const LoopElt& y) { return x -= y; }
  friend LoopElt operator*(const CycScalar& a, LoopElt x) { return x *= a; }
  LoopElt operator-() const;

  friend bool operator==(const LoopElt& x, const LoopElt& y);
  friend bool operator!=(const LoopElt& x, const LoopElt& y) { return !(x == y); }

 private:
  void require_same(const LoopElt& o) const;

  const ChevAlgebra* g_ = nullptr;
  int m_ = 1;
  Terms terms_;
};

/// [a (x) p, b (x) q] = [a, b] (x) pq.
LoopElt bracket_loop(const LoopElt& x, const LoopElt& y);

/// Sum over matched exponents p + q = 0 of f(p) <x_p, y_q>.
CycScalar loop_pairing(const LoopElt& x, const LoopElt& y, bool weight_by_degree);

/// The twisted loop algebra L(g, sigma) as the fixed points inside g (x) k[s, s^-1].
class LoopAlgebra {
 public:
  explicit LoopAlgebra(DiagramPtr sigma);

  const ChevAlgebra& g() const { return *sigma_->algebra(); }
  const ChevAlgebra* g_ptr() const { return sigma_->algebra().get(); }
  const DiagramPtr& sigma() const { return sigma_; }
  int order() const { return m_; }
  int residue(int p) const { return ((p % m_) + m_) % m_; }

  /// Basis of g_i for the residue i = p mod m.
  const std::vector<Vec>& eigenbasis(int p) const { return eig_[residue(p)]; }
  /// Coordinates of v in the eigenbasis of g_{p mod m}; nullopt if v is not there.
  std::optional<Vec> eigen_coords(const Vec& v, int p) const;

  const FixedCartan& fixed_cartan() const { return cartan_; }

  /// e (x) s^j, e in the eigenbasis of g_{j mod m}, lo <= j <= hi.
  std::vector<LoopElt> twisted_basis(int lo, int hi) const;
  std::size_t twisted_dim(int lo, int hi) const;

  bool is_in_twisted(const LoopElt& x) const;

 private:
  DiagramPtr sigma_;
  int m_ = 1;
  std::vector<std::vector<Vec>> eig_;
  Matrix coords_;                  // inverse of the matrix of all eigenvectors
  std::vector<std::size_t> offset_;  // first row of each residue block in coords_
  FixedCartan cartan_;
};

using LoopAlgebraPtr = std::shared_ptr<const LoopAlgebra>;

}  // namespace affkm
