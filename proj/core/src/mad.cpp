#include "affkm/mad.hpp"

#include "affkm/sampling.hpp"
#include "affkm/text.hpp"

namespace affkm {

namespace {

std::vector<std::string> texts(const std::vector<AffineElt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_text(x));
  return out;
}

// Columns of m expressed in the basis v (full column rank, m = v a).
Matrix coordinates_in(const std::vector<Vec>& v, const std::vector<Vec>& images, int m, std::size_t n) {
  Matrix basis = Matrix::from_columns(m, n, v);
  Matrix a(m, v.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    auto x = solve(basis, images[j]);
    if (!x) throw std::logic_error("joint eigenspace is not invariant");
    for (std::size_t i = 0; i < v.size(); ++i) a(i, j) = (*x)[i];
  }
  return a;
}

}  // namespace

SubalgebraSpec standard_mad(const LoopAlgebra& alg) {
  const int m = alg.order();
  SubalgebraSpec s;
  for (const auto& h : alg.fixed_cartan().h0) s.generators.emplace_back(LoopElt::from_vec(alg.g_ptr(), h, 0));
  s.generators.push_back(AffineElt::central(alg.g_ptr(), CycScalar(m, 1)));
  s.generators.push_back(AffineElt::derivation(alg.g_ptr(), CycScalar(m, 1)));
  return s;
}

bool is_abelian(const SubalgebraSpec& spec) {
  const auto& g = spec.generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!bracket_affine(g[i], g[j]).is_zero()) return false;
  return true;
}

DiagonalizableResult is_diagonalizable(const LoopAlgebra& alg, const SubalgebraSpec& spec, const Window& w) {
  if (!is_abelian(spec)) throw NotAbelian("generators do not commute");
  const int m = alg.order();
  std::vector<AdMatrix> ads;
  for (const auto& x : spec.generators) ads.push_back(ad_matrix(alg, x, w));
  std::vector<const AdMatrix*> ptrs;
  for (const auto& a : ads) ptrs.push_back(&a);
  InvariantPart u = common_invariant_subspace(m, w.size(), ptrs);
  const std::size_t k = u.basis.size();

  DiagonalizableResult out;
  out.invariant_dim = k;
  struct Piece {
    std::vector<Vec> basis;  // in U coordinates
    std::vector<CycScalar> values;
  };
  std::vector<Piece> pieces;
  if (k > 0) {
    Piece all;
    for (std::size_t i = 0; i < k; ++i) {
      Vec e = zero_vec(m, k);
      e[i] = CycScalar(m, 1);
      all.basis.push_back(std::move(e));
    }
    pieces.push_back(std::move(all));
  }
  for (std::size_t g = 0; g < ads.size(); ++g) {
    Matrix t = restrict_to(u, ads[g]);
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      std::vector<Vec> images;
      for (const auto& v : piece.basis) images.push_back(t * v);
      Matrix a = coordinates_in(piece.basis, images, m, k);
      EigenDecomposition ed = eigen_decompose(a);
      if (!ed.complete()) {
        out.witness = spec.generators[g];
        return out;
      }
      for (const auto& sp : ed.spaces) {
        Piece p;
        p.values = piece.values;
        p.values.push_back(sp.value);
        for (const auto& c : sp.basis) {
          Vec v = zero_vec(m, k);
          for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) axpy(v, c[i], piece.basis[i]);
          p.basis.push_back(std::move(v));
        }
        next.push_back(std::move(p));
      }
    }
    pieces = std::move(next);
  }
  out.diagonalizable = true;
  for (const auto& p : pieces) out.weights.push_back({p.values, p.basis.size()});
  return out;
}

Report mad_sanity(const LoopAlgebra& alg, const SubalgebraSpec& spec, const Window& w) {
  const int m = alg.order();
  const auto& gens = spec.generators;
  Report r;
  r.name = "mad_sanity";
  nlohmann::ordered_json details;

  r.checked += 3;
  const bool has_c = affine_in_span(gens, AffineElt::central(alg.g_ptr(), CycScalar(m, 1)));
  if (!has_c) r.fail({"(i) center"}, "c not in span", "c in span");
  bool has_d = false;
  for (const auto& x : gens) has_d = has_d || !x.d.is_zero();
  if (!has_d) r.fail({"(ii) derivation"}, "no d component", "some generator with nonzero d");
  const std::size_t dim = affine_span_rank(gens);
  if (dim < 3) r.fail({"(iii) dimension"}, std::to_string(dim), ">= 3");
  details["center"] = has_c;
  details["derivation"] = has_d;
  details["dim"] = dim;

  // (iv) Loop elements of the window commuting with every generator.
  ++r.checked;
  Window core = Window::make(alg, w.lo, w.hi, true, false);
  Matrix stacked(m, 0, core.size());
  for (const auto& x : gens) {
    AdMatrix ad = ad_matrix(alg, x, core);
    stacked = stacked.vcat(ad.square).vcat(ad.outside);
  }
  std::size_t candidates = 0;
  for (const auto& v : kernel(stacked)) {
    AffineElt y(from_window_coords(core, v).loop);
    if (y.is_zero() || affine_in_span(gens, y)) continue;
    ++candidates;
    SubalgebraSpec bigger = spec;
    bigger.generators.push_back(y);
    if (is_diagonalizable(alg, bigger, w).diagonalizable) {
      details["probe"] = to_text(y);
      r.fail({"(iv) maximality probe"}, "enlarged by " + to_text(y), "no diagonalizable enlargement");
      break;
    }
  }
  details["probe_candidates"] = candidates;
  r.extra = details;
  return r;
}

std::vector<LoopElt> centralizer(const LoopAlgebra& alg, const std::vector<LoopElt>& ts, int lo, int hi) {
  const int m = alg.order();
  Window w = Window::make(alg, lo, hi);
  std::vector<LoopElt> out;
  if (ts.empty()) {
    for (const auto& b : w.basis) out.push_back(b.loop);
    return out;
  }
  Matrix stacked(m, 0, w.size());
  for (const auto& t : ts) {
    AdMatrix ad = ad_matrix(alg, AffineElt(t), w);
    stacked = stacked.vcat(ad.square).vcat(ad.outside);
  }
  for (const auto& v : kernel(stacked)) out.push_back(from_window_coords(w, v).loop);
  return out;
}

Report conjugacy_verify(const LoopAlgebra& alg, const AutoWord& word, const SubalgebraSpec& spec) {
  Report r;
  r.name = "conjugacy";
  r.checked = 1;
  std::vector<AffineElt> images;
  for (const auto& x : spec.generators) images.push_back(apply_word(word, x));
  SubalgebraSpec h = standard_mad(alg);
  if (!affine_same_span(images, h.generators)) {
    std::string img;
    for (const auto& t : texts(images)) img += (img.empty() ? "" : "; ") + t;
    r.fail({to_text(word)}, img, "span of h0, c, d");
  }
  return r;
}

Report mad_suite(const LoopAlgebra& alg, const Window& w, std::size_t words, std::uint64_t seed) {
  const int m = alg.order();
  Report total;
  total.name = "mad";
  nlohmann::ordered_json parts;
  SubalgebraSpec h = standard_mad(alg);

  Report basic;
  basic.name = "standard";
  basic.checked = 2;
  const std::size_t dim = affine_span_rank(h.generators);
  const std::size_t expected = alg.fixed_cartan().h0.size() + 2;
  if (dim != expected || dim < 3) basic.fail({"dim"}, std::to_string(dim), std::to_string(expected) + " and >= 3");
  auto diag = is_diagonalizable(alg, h, w);
  if (!diag.diagonalizable) basic.fail({"diagonalizable"}, "defective", "diagonalizable");
  total.merge(basic);
  parts["standard"] = {{"dim", dim}, {"diagonalizable", diag.diagonalizable}, {"joint_weights", diag.weights.size()}};

  Report sanity = mad_sanity(alg, h, w);
  total.merge(sanity);
  parts["sanity"] = {{"passed", sanity.ok()}, {"details", sanity.extra}};

  // <c, x> for a regular x must be enlarged by the probe.
  Report truncated;
  truncated.name = "truncated";
  truncated.checked = 1;
  SubalgebraSpec small{{AffineElt::central(alg.g_ptr(), CycScalar(m, 1)), regular_element(alg)}};
  Report probe = mad_sanity(alg, small, w);
  const bool found = probe.extra.contains("probe");
  if (!found) truncated.fail(texts(small.generators), "no enlarging element", "probe finds y");
  total.merge(truncated);
  parts["truncated"] = {{"generators", texts(small.generators)},
                        {"sanity_failures", probe.failures.size()},
                        {"probe", found ? probe.extra["probe"] : nlohmann::ordered_json(nullptr)}};

  Report conj;
  conj.name = "conjugation";
  Rng rng(seed);
  const AffineElt c = AffineElt::central(alg.g_ptr(), CycScalar(m, 1));
  for (std::size_t i = 0; i < words; ++i) {
    AutoWord word = random_word(alg, rng, Level::Hat, 4);
    SubalgebraSpec image;
    for (const auto& x : h.generators) image.generators.push_back(apply_word(word, x));
    const std::string wt = to_text(word);
    conj.checked += 4;
    if (!is_abelian(image)) {
      conj.fail({wt}, "image not abelian", "abelian");
      continue;
    }
    AffineElt cimg = apply_word(word, c);
    if (!cimg.loop.is_zero() || !cimg.d.is_zero() || cimg.c.is_zero()) conj.fail({wt}, to_text(cimg), "nonzero multiple of c");
    if (!is_diagonalizable(alg, image, w).diagonalizable) conj.fail({wt}, "image defective", "diagonalizable");
    Report back = conjugacy_verify(alg, inverse(word, alg), image);
    if (!back.ok()) conj.fail({wt}, back.failures.front().lhs, back.failures.front().rhs);
  }
  total.merge(conj);
  parts["conjugation"] = {{"words", words}, {"passed", conj.ok()}};
  total.extra = parts;
  return total;
}

}  // namespace affkm
