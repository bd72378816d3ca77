#include "affkm/affine.hpp"

#include "affkm/sampling.hpp"
#include "affkm/text.hpp"

namespace affkm {

AffineElt::AffineElt(const ChevAlgebra* g, int m) : loop(g, m), c(m), d(m) {}

AffineElt::AffineElt(LoopElt l) : loop(std::move(l)), c(loop.order()), d(loop.order()) {}

AffineElt::AffineElt(LoopElt l, CycScalar cc, CycScalar dd) : loop(std::move(l)), c(std::move(cc)), d(std::move(dd)) {
  if (c.order() != loop.order() || d.order() != loop.order()) {
    throw FieldMismatch("affine element components over different fields");
  }
}

AffineElt AffineElt::central(const ChevAlgebra* g, const CycScalar& a) {
  AffineElt x(g, a.order());
  x.c = a;
  return x;
}

AffineElt AffineElt::derivation(const ChevAlgebra* g, const CycScalar& b) {
  AffineElt x(g, b.order());
  x.d = b;
  return x;
}

AffineElt& AffineElt::operator+=(const AffineElt& o) {
  loop += o.loop;
  c += o.c;
  d += o.d;
  return *this;
}

AffineElt& AffineElt::operator-=(const AffineElt& o) {
  loop -= o.loop;
  c -= o.c;
  d -= o.d;
  return *this;
}

AffineElt& AffineElt::operator*=(const CycScalar& a) {
  loop *= a;
  c *= a;
  d *= a;
  return *this;
}

AffineElt AffineElt::operator-() const { return AffineElt(-loop, -c, -d); }

bool operator==(const AffineElt& x, const AffineElt& y) {
  return x.loop == y.loop && x.c == y.c && x.d == y.d;
}

LoopElt degree_derivation(const LoopElt& x) {
  LoopElt r(x.algebra(), x.order());
  for (const auto& [b, p] : x.terms()) {
    Laurent q(x.order());
    for (const auto& [e, c] : p.terms()) q.add_term(e, c * Rational(e));
    r.add(b, q);
  }
  return r;
}

AffineElt bracket_affine(const AffineElt& x, const AffineElt& y) {
  AffineElt r(bracket_loop(x.loop, y.loop));
  r.c = loop_pairing(x.loop, y.loop, true);
  r.d = CycScalar(r.order());
  if (!x.d.is_zero()) r.loop += x.d * degree_derivation(y.loop);
  if (!y.d.is_zero()) r.loop -= y.d * degree_derivation(x.loop);
  return r;
}

CycScalar invariant_form(const AffineElt& x, const AffineElt& y, const CycScalar& beta) {
  if (beta.is_zero()) throw std::invalid_argument("invariant form needs beta != 0");
  CycScalar s = loop_pairing(x.loop, y.loop, false);
  s += x.c * y.d;
  s += x.d * y.c;
  return s * beta;
}

std::vector<AffineElt> affine_window_basis(const LoopAlgebra& alg, int lo, int hi, bool with_c, bool with_d) {
  std::vector<AffineElt> out;
  for (auto& l : alg.twisted_basis(lo, hi)) out.emplace_back(std::move(l));
  const int m = alg.order();
  if (with_c) out.push_back(AffineElt::central(alg.g_ptr(), CycScalar(m, 1)));
  if (with_d) out.push_back(AffineElt::derivation(alg.g_ptr(), CycScalar(m, 1)));
  return out;
}

namespace {

constexpr long kCentralKey = -1;
constexpr long kDerivationKey = -2;

template <typename F>
void for_each_key(const AffineElt& x, F&& f) {
  for (const auto& [b, p] : x.loop.terms()) {
    for (const auto& [e, c] : p.terms()) f(std::make_pair(static_cast<long>(b), e), c);
  }
  if (!x.c.is_zero()) f(std::make_pair(kCentralKey, 0), x.c);
  if (!x.d.is_zero()) f(std::make_pair(kDerivationKey, 0), x.d);
}

}  // namespace

void SupportIndex::add(const AffineElt& x) {
  if (index_.empty()) m_ = x.order();
  for_each_key(x, [&](const auto& key, const CycScalar&) { index_.try_emplace(key, 0); });
  std::size_t k = 0;
  for (auto& [key, v] : index_) v = k++;
}

void SupportIndex::add_all(const std::vector<AffineElt>& xs) {
  for (const auto& x : xs) add(x);
}

Vec SupportIndex::coords(const AffineElt& x) const {
  Vec v = zero_vec(m_, index_.size());
  for_each_key(x, [&](const auto& key, const CycScalar& c) {
    auto it = index_.find(key);
    if (it == index_.end()) throw std::out_of_range("element support not registered in index");
    v[it->second] = c;
  });
  return v;
}

std::vector<Vec> SupportIndex::coords(const std::vector<AffineElt>& xs) const {
  std::vector<Vec> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(coords(x));
  return out;
}

std::size_t affine_span_rank(const std::vector<AffineElt>& xs) {
  SupportIndex idx;
  idx.add_all(xs);
  if (idx.size() == 0) return 0;
  return span_rank(idx.order(), idx.size(), idx.coords(xs));
}

bool affine_in_span(const std::vector<AffineElt>& basis, const AffineElt& x) {
  SupportIndex idx;
  idx.add_all(basis);
  idx.add(x);
  if (idx.size() == 0) return true;
  return in_span(idx.order(), idx.size(), idx.coords(basis), idx.coords(x));
}

bool affine_same_span(const std::vector<AffineElt>& a, const std::vector<AffineElt>& b) {
  SupportIndex idx;
  idx.add_all(a);
  idx.add_all(b);
  if (idx.size() == 0) return true;
  return same_span(idx.order(), idx.size(), idx.coords(a), idx.coords(b));
}

Report verify_jacobi_affine(const LoopAlgebra& alg, int lo, int hi) {
  Report rep;
  rep.name = "jacobi";
  auto basis = affine_window_basis(alg, lo, hi, true, true);
  const std::size_t n = basis.size();
  // Brackets of basis pairs are reused by every triple.
  std::vector<AffineElt> pair(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pair[i * n + j] = bracket_affine(basis[i], basis[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++rep.checked;
      AffineElt sum = pair[i * n + j] + pair[j * n + i];
      if (!sum.is_zero()) {
        rep.fail({to_text(basis[i]), to_text(basis[j])}, to_text(pair[i * n + j]), to_text(-pair[j * n + i]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ++rep.checked;
        AffineElt a = bracket_affine(pair[i * n + j], basis[k]);
        AffineElt b = bracket_affine(pair[j * n + k], basis[i]);
        AffineElt c = bracket_affine(pair[k * n + i], basis[j]);
        AffineElt total = a + b + c;
        if (!total.is_zero()) {
          rep.fail({to_text(basis[i]), to_text(basis[j]), to_text(basis[k])}, to_text(total), "0");
        }
      }
    }
  }
  rep.extra["basis_size"] = n;
  rep.extra["window"] = {lo, hi};
  return rep;
}

Report verify_form_invariance(const LoopAlgebra& alg, std::size_t samples, int lo, int hi, const CycScalar& beta,
                              std::uint64_t seed) {
  Report rep;
  rep.name = "form";
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    AffineElt x = random_affine(alg, rng, lo, hi, true, true);
    AffineElt y = random_affine(alg, rng, lo, hi, true, true);
    AffineElt z = random_affine(alg, rng, lo, hi, true, true);
    ++rep.checked;
    CycScalar lhs = invariant_form(bracket_affine(x, y), z, beta);
    CycScalar rhs = -invariant_form(y, bracket_affine(x, z), beta);
    if (lhs != rhs) rep.fail({to_text(x), to_text(y), to_text(z)}, lhs.str(), rhs.str());
    ++rep.checked;
    if (invariant_form(x, y, beta) != invariant_form(y, x, beta)) {
      rep.fail({to_text(x), to_text(y)}, invariant_form(x, y, beta).str(), invariant_form(y, x, beta).str());
    }
  }
  rep.extra["samples"] = samples;
  rep.extra["window"] = {lo, hi};
  return rep;
}

Report verify_gram(const LoopAlgebra& alg, int radius, const CycScalar& beta) {
  Report rep;
  rep.name = "gram";
  auto ranks = nlohmann::ordered_json::array();
  for (int k = 0; k <= radius; ++k) {
    for (bool hat : {false, true}) {
      auto basis = affine_window_basis(alg, -k, k, hat, hat);
      const std::size_t n = basis.size();
      Matrix gram(alg.order(), n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = invariant_form(basis[i], basis[j], beta);
      std::size_t r = rank(gram);
      ++rep.checked;
      ranks.push_back({{"window", {-k, k}}, {"hat", hat}, {"size", n}, {"rank", r}});
      if (r != n) {
        rep.fail({"window [" + std::to_string(-k) + "," + std::to_string(k) + "]", hat ? "hat" : "loop"},
                 std::to_string(r), std::to_string(n));
      }
    }
  }
  rep.extra["ranks"] = ranks;
  return rep;
}

Report core_and_derived(const LoopAlgebra& alg, int lo, int hi) {
  Report rep;
  rep.name = "core";
  auto basis = affine_window_basis(alg, lo, hi, true, true);
  std::vector<AffineElt> brackets;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      AffineElt b = bracket_affine(basis[i], basis[j]);
      if (b.is_zero()) continue;
      auto lo_deg = b.loop.min_degree();
      auto hi_deg = b.loop.max_degree();
      if (lo_deg && (*lo_deg < lo || *hi_deg > hi)) continue;
      brackets.push_back(std::move(b));
    }
  }
  SupportIndex idx;
  idx.add_all(basis);
  const int m = alg.order();
  auto span = span_basis(m, idx.size(), idx.coords(brackets));
  for (const auto& b : basis) {
    bool expect = b.d.is_zero();
    bool inside = in_span(m, idx.size(), span, idx.coords(b));
    ++rep.checked;
    if (inside != expect) rep.fail({to_text(b)}, inside ? "in span" : "not in span", expect ? "in span" : "not in span");
  }
  for (const auto& b : brackets) {
    ++rep.checked;
    if (!b.d.is_zero()) rep.fail({to_text(b)}, "d-component " + b.d.str(), "0");
  }
  // [l1, l2] - [l1, l2]_loop is a multiple of c, and [d, y t^n] = mn y t^n + [d, y] t^n.
  auto loops = alg.twisted_basis(lo, hi);
  AffineElt dd = AffineElt::derivation(alg.g_ptr(), CycScalar(m, 1));
  for (std::size_t i = 0; i < loops.size(); ++i) {
    for (std::size_t j = 0; j < loops.size(); ++j) {
      AffineElt diff = bracket_affine(AffineElt(loops[i]), AffineElt(loops[j])) - AffineElt(bracket_loop(loops[i], loops[j]));
      ++rep.checked;
      if (!diff.loop.is_zero() || !diff.d.is_zero()) rep.fail({to_text(loops[i]), to_text(loops[j])}, to_text(diff), "a*c");
    }
    for (int n : {-1, 1}) {
      LoopElt shifted = loops[i].shifted(m * n);
      AffineElt lhs = bracket_affine(dd, AffineElt(shifted));
      AffineElt rhs = CycScalar(m, m * n) * AffineElt(shifted);
      LoopElt dy = bracket_affine(dd, AffineElt(loops[i])).loop;
      rhs += AffineElt(dy.shifted(m * n));
      ++rep.checked;
      if (lhs != rhs) rep.fail({to_text(loops[i]), std::to_string(n)}, to_text(lhs), to_text(rhs));
    }
  }
  rep.extra["span_dim"] = span.size();
  rep.extra["window_dim"] = basis.size();
  return rep;
}

}  // namespace affkm
