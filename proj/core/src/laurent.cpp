#include "affkm/laurent.hpp"

namespace affkm {

Laurent::Laurent(int m) : m_(m) { require_supported_order(m); }

Laurent::Laurent(int m, const CycScalar& constant) : Laurent(m) { add_term(0, constant); }

Laurent Laurent::monomial(int exponent, const CycScalar& coeff) {
  Laurent p(coeff.order());
  p.add_term(exponent, coeff);
  return p;
}

void Laurent::require_same(const Laurent& o) const {
  if (m_ != o.m_) {
    throw FieldMismatch("Laurent grading mismatch: 1/" + std::to_string(m_) + " vs 1/" +
                        std::to_string(o.m_));
  }
}

CycScalar Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? CycScalar(m_) : it->second;
}

void Laurent::add_term(int exponent, const CycScalar& c) {
  if (c.order() != m_) throw FieldMismatch("coefficient field does not match Laurent grading");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> Laurent::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> Laurent::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Laurent Laurent::shifted(int k) const {
  Laurent r(m_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const CycScalar& c) {
  if (c.order() != m_) throw FieldMismatch("scalar field does not match Laurent grading");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Laurent operator*(const Laurent& x, const Laurent& y) {
  x.require_same(y);
  Laurent r(x.m_);
  for (const auto& [e1, c1] : x.terms_) {
    for (const auto& [e2, c2] : y.terms_) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const Laurent& x, const Laurent& y) {
  x.require_same(y);
  return x.terms_ == y.terms_;
}

Laurent laurent_substitute(const Laurent& p, SubstMode mode, const CycScalar& a) {
  if (a.is_zero()) throw std::invalid_argument("substitution s -> a*s^(+-1) needs a != 0");
  Laurent r(p.order());
  for (const auto& [e, c] : p.terms()) {
    int target = mode == SubstMode::Scale ? e : -e;
    r.add_term(target, c * a.pow(e));
  }
  return r;
}

bool gamma_invariant(const Laurent& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e % p.order() != 0) return false;
  }
  return true;
}

}  // namespace affkm
