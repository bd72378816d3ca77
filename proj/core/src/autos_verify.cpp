#include "affkm/autos.hpp"
#include "affkm/sampling.hpp"
#include "affkm/text.hpp"

namespace affkm {

namespace {

AffineElt sample_at(const LoopAlgebra& alg, Rng& rng, Level level, int lo, int hi) {
  return random_affine(alg, rng, lo, hi, level != Level::Loop, level == Level::Hat);
}

AutoWord single(Level level, const AutoGen& g) {
  AutoWord w;
  w.level = level;
  w.gens.push_back(g);
  return w;
}

}  // namespace

Report verify_automorphism(const LoopAlgebra& alg, const AutoWord& w, int lo, int hi, std::size_t samples,
                           std::uint64_t seed) {
  Report rep;
  rep.name = "automorphism";
  Rng rng(seed);
  AutoWord inv = inverse(w, alg);
  std::size_t twisted_kept = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    AffineElt x = sample_at(alg, rng, w.level, lo, hi);
    AffineElt y = sample_at(alg, rng, w.level, lo, hi);
    AffineElt lhs = apply_word(w, bracket_at(w.level, x, y));
    AffineElt wx = apply_word(w, x);
    AffineElt rhs = bracket_at(w.level, wx, apply_word(w, y));
    ++rep.checked;
    if (lhs != rhs) rep.fail({to_text(w), to_text(x), to_text(y)}, to_text(lhs), to_text(rhs));
    AffineElt back = apply_word(inv, wx);
    ++rep.checked;
    if (back != x) rep.fail({to_text(w), "inverse", to_text(x)}, to_text(back), to_text(x));
    if (alg.is_in_twisted(wx.loop)) ++twisted_kept;
  }
  rep.extra["word"] = to_text(w);
  rep.extra["twisted_images"] = twisted_kept;
  return rep;
}

Report verify_exact_sequence(const LoopAlgebra& alg, int lo, int hi, std::size_t samples, std::uint64_t seed) {
  Report rep;
  rep.name = "exactseq";
  Rng rng(seed);
  const int m = alg.order();
  const ChevAlgebra* g = alg.g_ptr();

  // (i) section and restriction, per generator kind.
  for (GenKind kind : generator_kinds(Level::Tilde)) {
    AutoWord loop_w = single(Level::Loop, random_generator(alg, rng, kind));
    AutoWord tilde_w = tilde_lift(loop_w);
    AutoWord hat_w = hat_lift(tilde_w);
    for (std::size_t s = 0; s < samples; ++s) {
      AffineElt x = sample_at(alg, rng, Level::Tilde, lo, hi);
      LoopElt lhs = project_loop(apply_word(hat_w, x));
      LoopElt rhs = apply_word(loop_w, x.loop);
      ++rep.checked;
      if (lhs != rhs) rep.fail({"section", to_text(hat_w), to_text(x)}, to_text(lhs), to_text(rhs));
      AffineElt h = apply_word(hat_w, x);
      AffineElt t = apply_word(tilde_w, x);
      ++rep.checked;
      if (h != t) rep.fail({"restriction", to_text(hat_w), to_text(x)}, to_text(h), to_text(t));
    }
  }

  // (ii) composing with v_auto(a) is invisible after projection.
  for (std::size_t s = 0; s < samples; ++s) {
    CycScalar a(m, rng.nonzero(-5, 5));
    AutoWord w = random_word(alg, rng, Level::Hat, 4);
    AffineElt x = sample_at(alg, rng, Level::Hat, lo, hi);
    LoopElt plain = project_loop(apply_word(w, x));
    LoopElt left = project_loop(apply_word(compose(v_auto(a), w), x));
    LoopElt right = project_loop(apply_word(compose(w, v_auto(a)), x));
    ++rep.checked;
    if (plain != left || plain != right) rep.fail({"kernel", to_text(w), a.str(), to_text(x)}, to_text(left), to_text(plain));
  }

  // (iii) words fixing the core pointwise are v_auto(a), a read off from the image of d.
  AffineElt dd = AffineElt::derivation(g, CycScalar(m, 1));
  for (std::size_t s = 0; s < samples; ++s) {
    AutoWord fixer;
    std::optional<CycScalar> expected;
    if (s % 2 == 0) {
      AutoGen phi = random_generator(alg, rng, GenKind::Cochar);
      std::vector<int> neg(phi.phi.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -phi.phi[i];
      fixer.level = Level::Hat;
      fixer.gens = {phi, AutoGen::cochar(neg)};
      CocharElement xphi = cochar_element(*g, phi.phi, m);
      expected = g->killing(xphi.x, xphi.x);
    } else {
      CycScalar a(m, rng.nonzero(-5, 5));
      AutoWord w = random_word(alg, rng, Level::Hat, 3);
      fixer = compose(compose(w, v_auto(a)), inverse(w, alg));
      expected = a;
    }
    bool fixes = true;
    for (int k = 0; k < 5; ++k) {
      AffineElt x = sample_at(alg, rng, Level::Tilde, lo, hi);
      if (apply_word(fixer, x) != x) fixes = false;
    }
    ++rep.checked;
    if (!fixes) {
      rep.fail({"fixes core", to_text(fixer)}, "moves a core element", "fixes the core");
      continue;
    }
    AffineElt image = apply_word(fixer, dd);
    CycScalar a = image.c;
    ++rep.checked;
    if (!image.loop.is_zero() || !image.d.is_one() || (expected && a != *expected)) {
      rep.fail({"recover a", to_text(fixer)}, to_text(image), expected ? "d + " + expected->str() + "*c" : "d + a*c");
      continue;
    }
    AffineElt x = sample_at(alg, rng, Level::Hat, lo, hi);
    ++rep.checked;
    if (apply_word(fixer, x) != apply_word(v_auto(a), x)) {
      rep.fail({"agrees with v_auto", to_text(fixer), to_text(x)}, to_text(apply_word(fixer, x)),
               to_text(apply_word(v_auto(a), x)));
    }
  }
  return rep;
}

Report verify_lifts(const LoopAlgebra& alg, int lo, int hi, std::size_t samples, std::uint64_t seed) {
  Report rep;
  rep.name = "lifts";
  Rng rng(seed);
  const int m = alg.order();
  const ChevAlgebra* g = alg.g_ptr();
  auto per_kind = nlohmann::ordered_json::object();

  for (GenKind kind : generator_kinds(Level::Tilde)) {
    AutoWord loop_w = single(Level::Loop, random_generator(alg, rng, kind));
    AutoWord tilde_w = tilde_lift(loop_w);
    AutoWord hat_w = hat_lift(tilde_w);
    std::size_t bad = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      AffineElt x = sample_at(alg, rng, Level::Tilde, lo, hi);
      AffineElt hx = apply_word(hat_w, x);
      LoopElt expect = apply_word(loop_w, x.loop);
      ++rep.checked;
      if (project_loop(hx) != expect) {
        ++bad;
        rep.fail({to_text(hat_w), to_text(x)}, to_text(project_loop(hx)), to_text(expect));
      }
      ++rep.checked;
      if (hx != apply_word(tilde_w, x)) {
        ++bad;
        rep.fail({"restriction", to_text(hat_w), to_text(x)}, to_text(hx), to_text(apply_word(tilde_w, x)));
      }
    }
    per_kind[kind_name(kind)] = {{"word", to_text(hat_w)}, {"samples", samples}, {"failures", bad}};
  }

  // v_auto: identity on the core and after projection.
  {
    std::size_t bad = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      CycScalar a(m, rng.nonzero(-5, 5));
      AffineElt x = sample_at(alg, rng, Level::Tilde, lo, hi);
      AffineElt y = sample_at(alg, rng, Level::Hat, lo, hi);
      ++rep.checked;
      if (apply_word(v_auto(a), x) != x) {
        ++bad;
        rep.fail({"vshift core", a.str(), to_text(x)}, to_text(apply_word(v_auto(a), x)), to_text(x));
      }
      ++rep.checked;
      if (project_loop(apply_word(v_auto(a), y)) != project_loop(y)) {
        ++bad;
        rep.fail({"vshift projection", a.str(), to_text(y)}, to_text(apply_word(v_auto(a), y)), to_text(y));
      }
    }
    per_kind["vshift"] = {{"samples", samples}, {"failures", bad}};
  }

  // Cochar corrections: H_i (x) 1 -> H_i (x) 1 + phi_i <X_a_i, X_-a_i> c, d -> d - X_phi with X_phi unique.
  auto corrections = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<int> phi = random_generator(alg, rng, GenKind::Cochar).phi;
    AutoWord tw = single(Level::Tilde, AutoGen::cochar(phi));
    for (int i = 0; i < g->rank(); ++i) {
      Root simple(static_cast<std::size_t>(g->rank()), 0);
      simple[i] = 1;
      Vec xa = g->basis_vec(m, *g->basis_of(simple));
      Vec xna = g->basis_vec(m, *g->basis_of(negate(simple)));
      CycScalar kappa = g->killing(xa, xna);
      AffineElt h(LoopElt::monomial(g, static_cast<std::size_t>(i), 0, CycScalar(m, 1)));
      AffineElt expect = h + AffineElt::central(g, kappa * Rational(phi[i]));
      AffineElt got = apply_word(tw, h);
      ++rep.checked;
      if (got != expect) rep.fail({to_text(tw), to_text(h)}, to_text(got), to_text(expect));
      if (s == 0) corrections.push_back({{"phi", phi}, {"H", i + 1}, {"kappa", kappa.str()}, {"image", to_text(got)}});
    }
    CocharElement xphi = cochar_element(*g, phi, m);
    ++rep.checked;
    if (!xphi.unique || !xphi.verified) {
      rep.fail({"X_phi", to_text(tw)}, xphi.unique ? "not verified" : "not unique", "unique solution");
    }
    AffineElt dd = AffineElt::derivation(g, CycScalar(m, 1));
    AffineElt got = apply_word(hat_lift(tw), dd);
    AffineElt expect = dd - AffineElt(LoopElt::from_vec(g, xphi.x, 0));
    ++rep.checked;
    if (got != expect) rep.fail({to_text(hat_lift(tw)), "d"}, to_text(got), to_text(expect));
  }
  rep.extra["kinds"] = per_kind;
  rep.extra["cochar_corrections"] = corrections;
  return rep;
}

Report verify_ring_diagram_commute(const LoopAlgebra& alg, int lo, int hi, std::size_t samples, std::uint64_t seed) {
  Report rep;
  rep.name = "ring_diagram_commute";
  Rng rng(seed);
  const int m = alg.order();
  AutoWord zd;
  zd.level = Level::Hat;
  zd.gens = {AutoGen::ring(CycScalar::zeta(m), 1), AutoGen::make_diagram(alg.sigma())};
  AutoWord dz;
  dz.level = Level::Hat;
  dz.gens = {AutoGen::make_diagram(alg.sigma()), AutoGen::ring(CycScalar::zeta(m), 1)};
  for (std::size_t s = 0; s < samples; ++s) {
    AffineElt x = sample_at(alg, rng, Level::Hat, lo, hi);
    AffineElt a = apply_word(zd, x);
    AffineElt b = apply_word(dz, x);
    ++rep.checked;
    if (a != b) rep.fail({to_text(x)}, to_text(a), to_text(b));
  }
  return rep;
}

Report verify_centroid(const LoopAlgebra& alg, int lo, int hi, std::size_t samples, std::uint64_t seed) {
  Report rep;
  rep.name = "centroid";
  Rng rng(seed);
  const int m = alg.order();
  for (std::size_t s = 0; s < samples; ++s) {
    LoopElt x = random_loop(alg, rng, lo, hi);
    LoopElt y = random_loop(alg, rng, lo, hi);
    int n = rng.nonzero(-2, 2);
    LoopElt lhs = bracket_loop(x, y.shifted(m * n));
    LoopElt rhs = bracket_loop(x, y).shifted(m * n);
    ++rep.checked;
    if (lhs != rhs) rep.fail({to_text(x), to_text(y), std::to_string(n)}, to_text(lhs), to_text(rhs));
    if (m > 1 && !y.is_zero()) {
      ++rep.checked;
      if (alg.is_in_twisted(y.shifted(1))) rep.fail({"s*y", to_text(y)}, "twisted", "not twisted");
    }
  }
  return rep;
}

}  // namespace affkm
