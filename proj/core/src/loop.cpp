#include "affkm/loop.hpp"

#include <cstdlib>

namespace affkm {

LoopElt::LoopElt(const ChevAlgebra* g, int m) : g_(g), m_(m) { require_supported_order(m); }

LoopElt LoopElt::monomial(const ChevAlgebra* g, std::size_t basis, int exponent, const CycScalar& coeff) {
  LoopElt x(g, coeff.order());
  x.add(basis, Laurent::monomial(exponent, coeff));
  return x;
}

LoopElt LoopElt::from_vec(const ChevAlgebra* g, const Vec& v, int exponent) {
  if (v.size() != g->dim()) throw std::invalid_argument("vector length does not match algebra");
  LoopElt x(g, v.empty() ? 1 : v[0].order());
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (!v[b].is_zero()) x.add(b, Laurent::monomial(exponent, v[b]));
  }
  return x;
}

LoopElt LoopElt::from_degrees(const ChevAlgebra* g, int m, const std::map<int, Vec>& parts) {
  LoopElt x(g, m);
  for (const auto& [p, v] : parts) x += from_vec(g, v, p);
  return x;
}

void LoopElt::require_same(const LoopElt& o) const {
  if (g_ == nullptr) return;
  if (o.g_ != nullptr && o.g_ != g_) throw std::invalid_argument("loop elements over different algebras");
  if (o.m_ != m_) throw FieldMismatch("loop elements over different gradings");
}

Laurent LoopElt::coeff(std::size_t basis) const {
  auto it = terms_.find(basis);
  return it == terms_.end() ? Laurent(m_) : it->second;
}

void LoopElt::add(std::size_t basis, const Laurent& p) {
  if (p.order() != m_) throw FieldMismatch("coefficient grading does not match loop element");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(basis, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::map<int, Vec> LoopElt::by_degree() const {
  std::map<int, Vec> out;
  for (const auto& [b, p] : terms_) {
    for (const auto& [e, c] : p.terms()) {
      auto it = out.find(e);
      if (it == out.end()) it = out.emplace(e, zero_vec(m_, g_->dim())).first;
      it->second[b] = c;
    }
  }
  return out;
}

std::optional<int> LoopElt::min_degree() const {
  std::optional<int> r;
  for (const auto& [b, p] : terms_) {
    int e = *p.min_exponent();
    if (!r || e < *r) r = e;
  }
  return r;
}

std::optional<int> LoopElt::max_degree() const {
  std::optional<int> r;
  for (const auto& [b, p] : terms_) {
    int e = *p.max_exponent();
    if (!r || e > *r) r = e;
  }
  return r;
}

int LoopElt::degree_radius() const {
  if (is_zero()) return 0;
  return std::max(std::abs(*min_degree()), std::abs(*max_degree()));
}

LoopElt LoopElt::shifted(int k) const {
  LoopElt r(g_, m_);
  for (const auto& [b, p] : terms_) r.terms_.emplace(b, p.shifted(k));
  return r;
}

LoopElt LoopElt::times(const Laurent& q) const {
  LoopElt r(g_, m_);
  for (const auto& [b, p] : terms_) r.add(b, p * q);
  return r;
}

LoopElt& LoopElt::operator+=(const LoopElt& o) {
  if (g_ == nullptr) {
    *this = o;
    return *this;
  }
  require_same(o);
  for (const auto& [b, p] : o.terms_) add(b, p);
  return *this;
}

LoopElt& LoopElt::operator-=(const LoopElt& o) {
  if (g_ == nullptr) {
    *this = -o;
    return *this;
  }
  require_same(o);
  for (const auto& [b, p] : o.terms_) add(b, -p);
  return *this;
}

LoopElt& LoopElt::operator*=(const CycScalar& a) {
  if (a.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, p] : terms_) p *= a;
  return *this;
}

LoopElt LoopElt::operator-() const {
  LoopElt r = *this;
  for (auto& [b, p] : r.terms_) p = -p;
  return r;
}

bool operator==(const LoopElt& x, const LoopElt& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  x.require_same(y);
  return x.terms_ == y.terms_;
}

LoopElt bracket_loop(const LoopElt& x, const LoopElt& y) {
  const ChevAlgebra* g = x.algebra() ? x.algebra() : y.algebra();
  int m = x.algebra() ? x.order() : y.order();
  LoopElt r(g, m);
  if (x.is_zero() || y.is_zero()) return r;
  if (x.algebra() != y.algebra()) throw std::invalid_argument("bracket of loop elements over different algebras");
  if (x.order() != y.order()) throw FieldMismatch("bracket of loop elements over different gradings");
  for (const auto& [i, p] : x.terms()) {
    for (const auto& [j, q] : y.terms()) {
      const auto& terms = g->bracket(i, j);
      if (terms.empty()) continue;
      Laurent pq = p * q;
      for (const auto& t : terms) r.add(t.index, pq * CycScalar(m, t.coeff));
    }
  }
  return r;
}

CycScalar loop_pairing(const LoopElt& x, const LoopElt& y, bool weight_by_degree) {
  int m = x.algebra() ? x.order() : y.order();
  CycScalar s(m);
  if (x.is_zero() || y.is_zero()) return s;
  const ChevAlgebra* g = x.algebra();
  for (const auto& [i, p] : x.terms()) {
    for (const auto& [j, q] : y.terms()) {
      long k = g->killing(i, j);
      if (k == 0) continue;
      for (const auto& [e, c] : p.terms()) {
        if (weight_by_degree && e == 0) continue;
        CycScalar other = q.coeff(-e);
        if (other.is_zero()) continue;
        CycScalar term = c * other * Rational(k);
        if (weight_by_degree) term *= Rational(e);
        s += term;
      }
    }
  }
  return s;
}

LoopAlgebra::LoopAlgebra(DiagramPtr sigma) : sigma_(std::move(sigma)), m_(sigma_->order()) {
  eig_ = sigma_eigenspaces(*sigma_);
  std::vector<Vec> all;
  for (const auto& block : eig_) {
    offset_.push_back(all.size());
    all.insert(all.end(), block.begin(), block.end());
  }
  offset_.push_back(all.size());
  auto inv = inverse(Matrix::from_columns(m_, g().dim(), all));
  if (!inv) throw std::runtime_error("eigenspaces of sigma do not span g");
  coords_ = std::move(*inv);
  cartan_ = cartan_of_fixed(*sigma_);
}

std::optional<Vec> LoopAlgebra::eigen_coords(const Vec& v, int p) const {
  Vec all = coords_ * v;
  int r = residue(p);
  for (std::size_t k = 0; k < all.size(); ++k) {
    bool inside = k >= offset_[r] && k < offset_[r + 1];
    if (!inside && !all[k].is_zero()) return std::nullopt;
  }
  return Vec(all.begin() + static_cast<std::ptrdiff_t>(offset_[r]),
             all.begin() + static_cast<std::ptrdiff_t>(offset_[r + 1]));
}

std::vector<LoopElt> LoopAlgebra::twisted_basis(int lo, int hi) const {
  std::vector<LoopElt> out;
  for (int j = lo; j <= hi; ++j) {
    for (const auto& e : eigenbasis(j)) out.push_back(LoopElt::from_vec(g_ptr(), e, j));
  }
  return out;
}

std::size_t LoopAlgebra::twisted_dim(int lo, int hi) const {
  std::size_t n = 0;
  for (int j = lo; j <= hi; ++j) n += eigenbasis(j).size();
  return n;
}

bool LoopAlgebra::is_in_twisted(const LoopElt& x) const {
  if (x.is_zero()) return true;
  if (x.order() != m_) return false;
  // Gamma generator: sigma^-1 on g, s -> z s on coefficients.
  for (const auto& [p, v] : x.by_degree()) {
    Vec image = sigma_->apply_inverse(v);
    CycScalar zp = CycScalar::zeta_pow(m_, p);
    for (auto& c : image) c *= zp;
    if (image != v) return false;
  }
  return true;
}

}  // namespace affkm
