#include "affkm/spectral.hpp"

#include <algorithm>
#include <map>

#include "affkm/text.hpp"

namespace affkm {

namespace {

// Offset of each degree in [lo, hi]; one extra entry holds the total.
std::vector<std::size_t> degree_offsets(const LoopAlgebra& alg, int lo, int hi) {
  std::vector<std::size_t> off;
  std::size_t n = 0;
  for (int p = lo; p <= hi; ++p) {
    off.push_back(n);
    n += alg.eigenbasis(p).size();
  }
  off.push_back(n);
  return off;
}

// Coordinates of the degrees of y inside [lo, hi]; other degrees are ignored.
Vec loop_block(const LoopAlgebra& alg, const LoopElt& y, int lo, int hi) {
  const int m = alg.order();
  auto off = degree_offsets(alg, lo, hi);
  Vec v = zero_vec(m, off.back());
  if (y.algebra() == nullptr) return v;
  for (const auto& [p, vec] : y.by_degree()) {
    if (p < lo || p > hi) continue;
    auto c = alg.eigen_coords(vec, p);
    if (!c) throw std::invalid_argument("element is not in the twisted loop algebra: " + to_text(y));
    std::copy(c->begin(), c->end(), v.begin() + static_cast<long>(off[p - lo]));
  }
  return v;
}

Vec concat(Vec a, const Vec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vec row_times(const Vec& r, const Matrix& a) {
  Vec out = zero_vec(a.order(), a.cols());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) out[j] += r[i] * a(i, j);
    }
  }
  return out;
}

std::vector<Vec> row_basis(int m, std::size_t n, const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Matrix a(m, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  RowEchelon e = rref(std::move(a));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

CycScalar zero_like(const AffineElt& x) { return CycScalar(x.order()); }

AffineElt drop_c(AffineElt y, bool keep) {
  if (!keep) y.c = zero_like(y);
  return y;
}

// Fractional part of w / (b m), the invariant of a weight series.
std::pair<Rational, Rational> series_key(const CycScalar& w, const CycScalar& b, int m) {
  CycScalar q = w / (b * CycScalar(m, static_cast<long>(m)));
  Rational r = q.rational_part();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational frac = r - Rational(fl);
  frac.canonicalize();
  return {frac, q.zeta_part()};
}

std::optional<long> as_integer(const CycScalar& v) {
  if (!v.is_rational() || v.rational_part().get_den() != 1) return std::nullopt;
  return v.rational_part().get_num().get_si();
}

struct RawDecomp {
  std::vector<std::pair<CycScalar, std::vector<AffineElt>>> spaces;
  std::size_t invariant_dim = 0;
  bool complete = false;
  bool diagonal = false;
  Matrix square;
};

RawDecomp raw_decompose(const LoopAlgebra& alg, const AffineElt& x, const Window& w) {
  const int m = alg.order();
  AdMatrix ad = ad_matrix(alg, x, w);
  InvariantPart u = common_invariant_subspace(m, w.size(), {&ad});
  Matrix t = restrict_to(u, ad);
  EigenDecomposition ed = eigen_decompose(t);
  RawDecomp out;
  out.invariant_dim = u.basis.size();
  out.complete = ed.complete();
  out.diagonal = u.basis.size() == w.size() && ad.square.is_diagonal();
  out.square = std::move(ad.square);
  for (const auto& sp : ed.spaces) {
    std::vector<AffineElt> vecs;
    for (const auto& coords : sp.basis) {
      Vec full = zero_vec(m, w.size());
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (!coords[j].is_zero()) axpy(full, coords[j], u.basis[j]);
      }
      vecs.push_back(from_window_coords(w, full));
    }
    out.spaces.emplace_back(sp.value, std::move(vecs));
  }
  return out;
}

// Closed-form interior test for diagonal ad(x): every basis line e of g_r has
// weight v_e + b p on e s^p, so the weight space of w is supported on the
// degrees p = (w - v_e)/b with p = r mod m.
std::vector<bool> closed_form_interior(const LoopAlgebra& alg, const Window& w, const Matrix& diag,
                                       const CycScalar& b, const std::vector<CycScalar>& weights) {
  const int m = alg.order();
  struct Line {
    int residue;
    CycScalar v;
  };
  std::vector<Line> lines;
  std::map<std::pair<int, int>, bool> seen;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w.slot[j] < 0) continue;
    int r = alg.residue(w.degree[j]);
    if (seen.count({r, w.slot[j]})) continue;
    seen[{r, w.slot[j]}] = true;
    lines.push_back({r, diag(j, j) - b * CycScalar(m, static_cast<long>(w.degree[j]))});
  }
  std::vector<bool> out;
  for (const auto& wt : weights) {
    bool inside = true;
    for (const auto& line : lines) {
      auto p = as_integer((wt - line.v) / b);
      if (!p || alg.residue(static_cast<int>(*p)) != line.residue) continue;
      if (*p < w.lo || *p > w.hi) inside = false;
    }
    out.push_back(inside);
  }
  return out;
}

}  // namespace

Window Window::make(const LoopAlgebra& alg, int lo, int hi, bool with_c, bool with_d) {
  Window w;
  w.lo = lo;
  w.hi = hi;
  w.with_c = with_c;
  w.with_d = with_d;
  w.basis = affine_window_basis(alg, lo, hi, with_c, with_d);
  for (int p = lo; p <= hi; ++p) {
    for (std::size_t k = 0; k < alg.eigenbasis(p).size(); ++k) {
      w.degree.push_back(p);
      w.slot.push_back(static_cast<int>(k));
    }
  }
  if (with_c) {
    w.degree.push_back(0);
    w.slot.push_back(-1);
  }
  if (with_d) {
    w.degree.push_back(0);
    w.slot.push_back(-2);
  }
  return w;
}

std::optional<Vec> window_coords(const LoopAlgebra& alg, const Window& w, const AffineElt& y) {
  if (auto lo = y.loop.min_degree(); lo && (*lo < w.lo || *y.loop.max_degree() > w.hi)) return std::nullopt;
  if (!w.with_d && !y.d.is_zero()) return std::nullopt;
  Vec v = loop_block(alg, y.loop, w.lo, w.hi);
  if (w.with_c) v.push_back(y.c);
  if (w.with_d) v.push_back(y.d);
  return v;
}

AffineElt from_window_coords(const Window& w, const Vec& v) {
  AffineElt out = w.basis.empty() ? AffineElt() : CycScalar(v.at(0).order()) * w.basis[0];
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_zero()) out += v[j] * w.basis[j];
  }
  return out;
}

AdMatrix ad_matrix(const LoopAlgebra& alg, const AffineElt& x, const Window& w) {
  const int m = alg.order();
  const int dmin = x.loop.min_degree().value_or(0);
  const int dmax = x.loop.max_degree().value_or(0);
  const int ext_lo = std::min({w.lo, w.lo + dmin, dmin});
  const int ext_hi = std::max({w.hi, w.hi + dmax, dmax});
  const std::size_t n = w.size();
  const std::size_t n_out = alg.twisted_dim(ext_lo, w.lo - 1) + alg.twisted_dim(w.hi + 1, ext_hi);
  AdMatrix ad{Matrix(m, n, n), Matrix(m, n_out, n), std::vector<bool>(n, false)};
  for (std::size_t j = 0; j < n; ++j) {
    AffineElt y = bracket_affine(x, w.basis[j]);
    Vec in = loop_block(alg, y.loop, w.lo, w.hi);
    if (w.with_c) in.push_back(y.c);
    if (w.with_d) in.push_back(y.d);
    Vec out = concat(loop_block(alg, y.loop, ext_lo, w.lo - 1), loop_block(alg, y.loop, w.hi + 1, ext_hi));
    for (std::size_t i = 0; i < n; ++i) ad.square(i, j) = in[i];
    for (std::size_t i = 0; i < n_out; ++i) {
      ad.outside(i, j) = out[i];
      if (!out[i].is_zero()) ad.leaves[j] = true;
    }
  }
  return ad;
}

InvariantPart common_invariant_subspace(int m, std::size_t n, const std::vector<const AdMatrix*>& ads) {
  std::vector<Vec> rows;
  for (const auto* ad : ads) {
    for (std::size_t i = 0; i < ad->outside.rows(); ++i) {
      Vec r = ad->outside.row(i);
      if (!is_zero_vec(r)) rows.push_back(std::move(r));
    }
  }
  // The annihilator of U is the smallest row space containing the outside rows
  // and closed under right multiplication by every square block.
  std::vector<Vec> basis = row_basis(m, n, rows);
  while (!basis.empty()) {
    std::vector<Vec> next = basis;
    for (const auto* ad : ads)
      for (const auto& r : basis) next.push_back(row_times(r, ad->square));
    auto grown = row_basis(m, n, next);
    if (grown.size() == basis.size()) break;
    basis = std::move(grown);
  }
  InvariantPart u;
  std::vector<bool> pivot(n, false);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t p = 0;
    while (basis[i][p].is_zero()) ++p;
    pivot[p] = true;
    pivots.push_back(p);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot[f]) continue;
    Vec v = zero_vec(m, n);
    v[f] = CycScalar(m, 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i][f].is_zero()) v[pivots[i]] = -basis[i][f];
    }
    u.basis.push_back(std::move(v));
    u.free.push_back(f);
  }
  return u;
}

Matrix restrict_to(const InvariantPart& u, const AdMatrix& ad) {
  const int m = ad.square.order();
  const std::size_t k = u.basis.size();
  Matrix t(m, k, k);
  for (std::size_t j = 0; j < k; ++j) {
    Vec image = ad.square * u.basis[j];
    for (std::size_t i = 0; i < k; ++i) t(i, j) = image[u.free[i]];
  }
  return t;
}

const WeightSpace* WeightDecomp::find(const CycScalar& w) const {
  for (const auto& s : weights) {
    if (s.w == w) return &s;
  }
  return nullptr;
}

bool WeightDecomp::is_interior(const CycScalar& w) const {
  const auto* s = find(w);
  return s != nullptr && s->interior;
}

WeightDecomp weight_decompose(const LoopAlgebra& alg, const AffineElt& x, const Window& w) {
  const int m = alg.order();
  if (x.d.is_zero()) throw std::invalid_argument("x needs a nonzero d component");
  if (!alg.is_in_twisted(x.loop)) throw std::invalid_argument("x is not in the twisted algebra");
  RawDecomp raw = raw_decompose(alg, x, w);
  WeightDecomp d;
  d.x = x;
  d.window = w;
  d.invariant_dim = raw.invariant_dim;
  d.diagonalizable = raw.complete;
  d.closed_form = raw.diagonal && x.loop.degree_radius() == 0 && w.hi - w.lo + 1 >= m;

  std::vector<CycScalar> values;
  for (const auto& [v, _] : raw.spaces) values.push_back(v);
  std::vector<bool> interior;
  if (d.closed_form) {
    interior = closed_form_interior(alg, w, raw.square, x.d, values);
  } else {
    const int radius = std::max(1, x.loop.degree_radius());
    const int by = 2 * m * ((radius + m - 1) / m);
    RawDecomp big = raw_decompose(alg, x, w.enlarged(alg, by));
    // An eigenvector can sit entirely beyond both windows, so a stable space
    // must also reach the largest dimension seen in its series (t^n is a
    // bijection between the weight spaces of one series).
    std::map<CycScalar, std::size_t, CycLess> big_dims;
    std::map<std::pair<Rational, Rational>, std::size_t> series_max;
    for (const auto& [v, vecs] : big.spaces) {
      big_dims[v] = vecs.size();
      auto& top = series_max[series_key(v, x.d, m)];
      top = std::max(top, vecs.size());
    }
    for (const auto& [v, vecs] : raw.spaces) {
      auto it = big_dims.find(v);
      interior.push_back(it != big_dims.end() && it->second == vecs.size() &&
                         series_max[series_key(v, x.d, m)] == vecs.size());
    }
  }

  std::map<std::pair<Rational, Rational>, int> series;
  std::map<int, bool> interior_series;
  for (std::size_t i = 0; i < raw.spaces.size(); ++i) {
    auto key = series_key(raw.spaces[i].first, x.d, m);
    auto it = series.find(key);
    if (it == series.end()) it = series.emplace(key, static_cast<int>(series.size())).first;
    WeightSpace s{raw.spaces[i].first, std::move(raw.spaces[i].second), interior[i], it->second};
    if (s.interior) interior_series[s.series] = true;
    d.weights.push_back(std::move(s));
  }
  d.series_count = static_cast<int>(interior_series.size());
  bool any = std::any_of(d.weights.begin(), d.weights.end(), [](const WeightSpace& s) { return s.interior; });
  if (!any) throw std::invalid_argument("no interior weight: window too small for the support of x");
  return d;
}

AffineElt regular_element(const LoopAlgebra& alg) {
  const ChevAlgebra& g = alg.g();
  const int m = alg.order();
  Vec h = zero_vec(m, g.dim());
  for (const auto& v : alg.fixed_cartan().h0) axpy(h, CycScalar(m, 1), v);
  long bound = 0;
  for (const auto& r : g.roots()) {
    CycScalar value(m);
    for (int i = 0; i < g.rank(); ++i) value += h[i] * CycScalar(m, static_cast<long>(g.pairing(r, i)));
    bound = std::max(bound, std::abs(value.rational_part().get_num().get_si()));
  }
  CycScalar lambda(m, Rational(1, 2 * bound + 1));
  AffineElt x(LoopElt::from_vec(alg.g_ptr(), scaled(h, lambda), 0));
  x.d = CycScalar(m, 1);
  return x;
}

Report verify_eigenvectors(const WeightDecomp& d) {
  Report r;
  r.name = "eigenvectors";
  for (const auto& s : d.weights) {
    for (const auto& v : s.basis) {
      ++r.checked;
      AffineElt lhs = drop_c(bracket_affine(d.x, v), d.window.with_c);
      AffineElt rhs = s.w * v;
      if (lhs != rhs) r.fail({"w=" + s.w.str(), to_text(v)}, to_text(lhs), to_text(rhs));
    }
  }
  return r;
}

Report verify_shift(const LoopAlgebra& alg, const WeightDecomp& d) {
  Report r;
  r.name = "shift";
  const int m = alg.order();
  const CycScalar step = d.x.d * CycScalar(m, static_cast<long>(m));
  for (const auto& a : d.weights) {
    if (!a.interior) continue;
    for (const auto& b : d.weights) {
      if (!b.interior || b.series != a.series) continue;
      auto n = as_integer((b.w - a.w) / step);
      if (!n) continue;
      ++r.checked;
      std::vector<AffineElt> moved;
      for (const auto& v : a.basis) moved.emplace_back(v.loop.shifted(static_cast<int>(*n) * m));
      std::vector<AffineElt> target;
      for (const auto& v : b.basis) target.emplace_back(v.loop);
      if (!affine_same_span(moved, target)) {
        r.fail({"w=" + a.w.str(), "n=" + std::to_string(*n)}, "dim t^n A_w = " + std::to_string(moved.size()),
               "dim A_{w+mn} = " + std::to_string(target.size()));
      }
    }
  }
  return r;
}

Report verify_opposite(const LoopAlgebra& alg, const WeightDecomp& d, const CycScalar& beta) {
  if (d.window.lo != -d.window.hi) throw std::invalid_argument("opposite-weight check needs a symmetric window");
  Report r;
  r.name = "opposite";
  for (const auto& s : d.weights) {
    if (!s.interior) continue;
    ++r.checked;
    const auto* o = d.find(-s.w);
    if (o == nullptr) {
      r.fail({"w=" + s.w.str()}, "-w missing", "-w present");
    } else if (o->interior && o->basis.size() != s.basis.size()) {
      r.fail({"w=" + s.w.str()}, "dim " + std::to_string(s.basis.size()), "dim " + std::to_string(o->basis.size()));
    }
  }
  WeightDecomp hat = weight_decompose(alg, d.x, Window::make(alg, d.window.lo, d.window.hi, true, true));
  const auto& ws = hat.weights;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (!ws[i].interior) continue;
    for (std::size_t j = i; j < ws.size(); ++j) {
      if (!ws[j].interior) continue;
      const bool opposite = (ws[i].w + ws[j].w).is_zero();
      const int m = alg.order();
      Matrix gram(m, ws[i].basis.size(), ws[j].basis.size());
      for (std::size_t a = 0; a < ws[i].basis.size(); ++a)
        for (std::size_t b = 0; b < ws[j].basis.size(); ++b)
          gram(a, b) = invariant_form(ws[i].basis[a], ws[j].basis[b], beta);
      ++r.checked;
      std::vector<std::string> in = {"w1=" + ws[i].w.str(), "w2=" + ws[j].w.str()};
      if (!opposite && !gram.is_zero()) r.fail(in, "nonzero pairing", "0");
      if (opposite) {
        std::size_t want = std::min(ws[i].basis.size(), ws[j].basis.size());
        std::size_t got = rank(gram);
        if (got != want || ws[i].basis.size() != ws[j].basis.size())
          r.fail(in, "pairing rank " + std::to_string(got), "nondegenerate of rank " + std::to_string(want));
      }
    }
  }
  return r;
}

Report verify_zero_weight(const WeightDecomp& d) {
  Report r;
  r.name = "zero_weight";
  r.checked = 1;
  const auto* s = d.find(CycScalar(d.x.order()));
  if (s == nullptr || s->basis.empty()) {
    std::string list;
    for (const auto& w : d.weights) list += (list.empty() ? "" : ", ") + w.w.str();
    r.fail({to_text(d.x)}, "weights: " + list, "0 among the weights");
  }
  r.extra["dim_A0"] = s == nullptr ? 0 : s->basis.size();
  return r;
}

Report verify_product_rule(const WeightDecomp& d) {
  Report r;
  r.name = "product_rule";
  for (const auto& a : d.weights) {
    if (!a.interior) continue;
    for (const auto& b : d.weights) {
      if (!b.interior || CycLess{}(b.w, a.w)) continue;
      const auto* target = d.find(a.w + b.w);
      if (target == nullptr || !target->interior) continue;
      for (const auto& u : a.basis) {
        for (const auto& v : b.basis) {
          ++r.checked;
          AffineElt br = drop_c(bracket_affine(u, v), d.window.with_c);
          if (!br.is_zero() && !affine_in_span(target->basis, br))
            r.fail({to_text(u), to_text(v)}, to_text(br), "element of A_" + target->w.str());
        }
      }
    }
  }
  return r;
}

Report rspan_isomorphism_check(const LoopAlgebra& alg, const WeightDecomp& d) {
  Report r;
  r.name = "rspan";
  const int m = alg.order();
  const CycScalar step = d.x.d * CycScalar(m, static_cast<long>(m));
  for (const auto& a : d.weights) {
    if (!a.interior) continue;
    for (const auto& b : d.weights) {
      if (!b.interior || b.series != a.series || a.w == b.w) continue;
      auto n = as_integer((b.w - a.w) / step);
      if (!n) continue;
      ++r.checked;
      std::vector<AffineElt> moved;
      for (const auto& v : a.basis) moved.emplace_back(v.loop.shifted(static_cast<int>(*n) * m));
      std::size_t image_rank = affine_span_rank(moved);
      if (a.basis.size() != b.basis.size() || image_rank != a.basis.size()) {
        r.fail({"w=" + a.w.str(), "n=" + std::to_string(*n)},
               "dims " + std::to_string(a.basis.size()) + " -> " + std::to_string(b.basis.size()) + ", rank " +
                   std::to_string(image_rank),
               "equal dims, injective");
      }
    }
  }
  ++r.checked;
  if (static_cast<std::size_t>(d.series_count) > alg.g().dim())
    r.fail({"series"}, std::to_string(d.series_count), "at most " + std::to_string(alg.g().dim()));
  r.extra["series"] = d.series_count;
  return r;
}

Report verify_insider(const LoopAlgebra& alg, const AffineElt& x, const Window& w) {
  Report r;
  r.name = "insider";
  r.checked = 1;
  const CycScalar zero(alg.order());
  WeightDecomp hat = weight_decompose(alg, x, Window::make(alg, w.lo, w.hi, true, true));
  WeightDecomp tilde = weight_decompose(alg, x, Window::make(alg, w.lo, w.hi, true, false));
  const auto* h0 = hat.find(zero);
  const auto* t0 = tilde.find(zero);
  if (h0 == nullptr || t0 == nullptr || !h0->interior || !t0->interior) {
    r.fail({to_text(x)}, "weight 0 not interior", "interior weight 0 at both levels");
    return r;
  }
  std::vector<AffineElt> joined = t0->basis;
  joined.push_back(x);
  const bool direct = !affine_in_span(t0->basis, x) && h0->basis.size() == t0->basis.size() + 1;
  if (!direct || !affine_same_span(joined, h0->basis)) {
    r.fail({to_text(x)}, "dim hat A_0 = " + std::to_string(h0->basis.size()),
           "dim tilde A_0 + 1 = " + std::to_string(t0->basis.size() + 1));
  }
  r.extra["dim_hat_A0"] = h0->basis.size();
  r.extra["dim_tilde_A0"] = t0->basis.size();
  return r;
}

Report verify_jordan_blocks(const LoopAlgebra& alg, const AffineElt& y, const Window& w) {
  Report r;
  r.name = "jordan_blocks";
  r.checked = 1;
  if (y.loop.degree_radius() != 0) {
    r.fail({to_text(y)}, "y has nonzero degrees", "degree-0 y");
    return r;
  }
  const int m = alg.order();
  Matrix a = ad_matrix(alg, y, w).square;
  auto whole = jordan_split(a);
  if (!whole) {
    r.fail({to_text(y)}, "eigenvalues outside the field", "split over Q(z)");
    return r;
  }
  const std::size_t n = a.rows();
  Matrix assembled(m, n, n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && w.slot[end] >= 0 && w.slot[start] >= 0 && w.degree[end] == w.degree[start]) ++end;
    Matrix block(m, end - start, end - start);
    for (std::size_t i = start; i < end; ++i)
      for (std::size_t j = start; j < end; ++j) block(i - start, j - start) = a(i, j);
    auto part = jordan_split(block);
    if (!part) {
      r.fail({to_text(y)}, "block without split", "split");
      return r;
    }
    for (std::size_t i = start; i < end; ++i)
      for (std::size_t j = start; j < end; ++j) assembled(i, j) = part->semisimple(i - start, j - start);
    start = end;
  }
  const Matrix& s = whole->semisimple;
  const Matrix& nil = whole->nilpotent;
  Matrix power = nil;
  for (std::size_t k = 1; k < n && !power.is_zero(); ++k) power = power * nil;
  bool ok = s == assembled && s * nil == nil * s && power.is_zero() && eigen_decompose(s).complete();
  if (!ok) r.fail({to_text(y)}, "split of ad(y) differs from blockwise split", "equal");
  return r;
}

Report spectral_suite(const LoopAlgebra& alg, const AffineElt& x, const Window& w, const CycScalar& beta) {
  Report total;
  total.name = "spectral";
  WeightDecomp d = weight_decompose(alg, x, w);
  nlohmann::ordered_json parts = nlohmann::ordered_json::object();
  auto add = [&](const Report& r) {
    total.merge(r);
    parts[r.name] = {{"checked", r.checked}, {"passed", r.ok()}};
    for (const auto& [k, v] : r.extra.items()) parts[r.name][k] = v;
  };
  add(verify_eigenvectors(d));
  add(verify_shift(alg, d));
  if (w.lo == -w.hi) add(verify_opposite(alg, d, beta));
  add(verify_zero_weight(d));
  add(verify_product_rule(d));
  add(rspan_isomorphism_check(alg, d));
  add(verify_insider(alg, x, w));
  Report diag;
  diag.name = "diagonalizable";
  diag.checked = 1;
  if (!d.diagonalizable) diag.fail({to_text(x)}, "defective on the stable part", "diagonalizable");
  add(diag);
  if (x.loop.degree_radius() == 0) add(verify_jordan_blocks(alg, x, Window::make(alg, -alg.order(), alg.order())));
  total.extra["checks"] = parts;
  total.extra["decomposition"] = to_json(d);
  return total;
}

nlohmann::ordered_json to_json(const WeightDecomp& d) {
  nlohmann::ordered_json j;
  j["x"] = to_text(d.x);
  j["window"] = {d.window.lo, d.window.hi};
  j["invariant_dim"] = d.invariant_dim;
  j["diagonalizable"] = d.diagonalizable;
  j["closed_form"] = d.closed_form;
  j["series_count"] = d.series_count;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : d.weights) {
    arr.push_back({{"w", s.w.str()}, {"dim", s.basis.size()}, {"series_id", s.series}, {"interior", s.interior}});
  }
  j["weights"] = arr;
  return j;
}

}  // namespace affkm
