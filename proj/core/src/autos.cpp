#include "affkm/autos.hpp"

#include "affkm/sampling.hpp"
#include "affkm/text.hpp"

namespace affkm {

std::string level_name(Level l) {
  switch (l) {
    case Level::Loop:
      return "loop";
    case Level::Tilde:
      return "tilde";
    default:
      return "hat";
  }
}

std::string kind_name(GenKind k) {
  switch (k) {
    case GenKind::RootExp:
      return "rootexp";
    case GenKind::Diagram:
      return "diagram";
    case GenKind::Cochar:
      return "cochar";
    case GenKind::Torus:
      return "torus";
    case GenKind::Ring:
      return "ring";
    default:
      return "vshift";
  }
}

AutoGen AutoGen::root_exp(Root alpha, Laurent u) {
  AutoGen g;
  g.kind = GenKind::RootExp;
  g.root = std::move(alpha);
  g.u = std::move(u);
  return g;
}

AutoGen AutoGen::make_diagram(DiagramPtr sigma) {
  AutoGen g;
  g.kind = GenKind::Diagram;
  g.diagram = std::move(sigma);
  return g;
}

AutoGen AutoGen::cochar(std::vector<int> phi) {
  AutoGen g;
  g.kind = GenKind::Cochar;
  g.phi = std::move(phi);
  return g;
}

AutoGen AutoGen::make_torus(std::vector<CycScalar> values) {
  for (const auto& v : values) {
    if (v.is_zero()) throw std::invalid_argument("torus values must be nonzero");
  }
  AutoGen g;
  g.kind = GenKind::Torus;
  g.torus = std::move(values);
  return g;
}

AutoGen AutoGen::ring(CycScalar a, int e) {
  if (a.is_zero()) throw std::invalid_argument("ring automorphism s -> a s^e needs a != 0");
  if (e != 1 && e != -1) throw std::invalid_argument("ring automorphism exponent must be +1 or -1");
  AutoGen g;
  g.kind = GenKind::Ring;
  g.a = std::move(a);
  g.e = e;
  return g;
}

AutoGen AutoGen::vshift(CycScalar a) {
  AutoGen g;
  g.kind = GenKind::VShift;
  g.a = std::move(a);
  return g;
}

int cochar_value(const std::vector<int>& phi, const Root& r) {
  int v = 0;
  for (std::size_t i = 0; i < r.size(); ++i) v += phi[i] * r[i];
  return v;
}

CocharElement cochar_element(const ChevAlgebra& g, const std::vector<int>& phi, int m) {
  const int n = g.rank();
  if (static_cast<int>(phi.size()) != n) throw std::invalid_argument("cochar needs one value per simple root");
  // alpha_i(sum_j a_j H_j) = sum_j a_j cartan[j][i] = phi_i.
  Matrix sys(m, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sys(i, j) = CycScalar(m, g.cartan()[j][i]);
  Vec rhs;
  for (int i = 0; i < n; ++i) rhs.emplace_back(m, phi[i]);
  CocharElement out;
  auto sol = solve(sys, rhs);
  if (!sol) throw std::invalid_argument("no element of h realizes the cocharacter");
  out.unique = rank(sys) == static_cast<std::size_t>(n);
  out.x = zero_vec(m, g.dim());
  for (int j = 0; j < n; ++j) out.x[j] = (*sol)[j];
  out.verified = true;
  for (std::size_t k = 0; k < g.roots().size(); ++k) {
    std::size_t b = g.basis_of_root(k);
    Vec lhs = g.bracket(out.x, g.basis_vec(m, b));
    Vec rhsv = scaled(g.basis_vec(m, b), CycScalar(m, cochar_value(phi, g.roots()[k])));
    if (lhs != rhsv) out.verified = false;
  }
  return out;
}

LoopElt project_loop(const AffineElt& x) { return x.loop; }

AffineElt bracket_at(Level level, const AffineElt& x, const AffineElt& y) {
  if (level == Level::Loop) return AffineElt(bracket_loop(x.loop, y.loop));
  return bracket_affine(x, y);
}

namespace {

void require_level(Level level, const AffineElt& x) {
  if (level == Level::Loop && (!x.c.is_zero() || !x.d.is_zero())) {
    throw std::invalid_argument("loop-level automorphism applied to an element with c or d component");
  }
  if (level == Level::Tilde && !x.d.is_zero()) {
    throw std::invalid_argument("tilde-level automorphism applied to an element with d component");
  }
}

AffineElt apply_root_exp_at(const AutoGen& gen, Level level, const AffineElt& x) {
  const ChevAlgebra* g = x.algebra();
  auto b = g->basis_of(gen.root);
  if (!b) throw std::invalid_argument("rootexp: " + root_name(gen.root) + " is not a root");
  LoopElt y(g, x.order());
  y.add(*b, gen.u);
  AffineElt ay(y);
  AffineElt result = x;
  AffineElt term = x;
  for (int n = 1;; ++n) {
    if (n > 32) throw std::runtime_error("rootexp series did not terminate");
    term = bracket_at(level, ay, term);
    if (term.is_zero()) break;
    term *= CycScalar(x.order(), Rational(1, n));
    result += term;
  }
  return result;
}

AffineElt apply_diagram_at(const AutoGen& gen, const AffineElt& x) {
  const auto& s = *gen.diagram;
  if (s.algebra().get() != x.algebra()) throw std::invalid_argument("diagram automorphism of a different algebra");
  AffineElt r(x.algebra(), x.order());
  for (const auto& [b, p] : x.loop.terms()) {
    Laurent q = p;
    if (s.basis_sign(b) < 0) q = -q;
    r.loop.add(s.basis_image(b), q);
  }
  r.c = x.c;
  r.d = x.d;
  return r;
}

AffineElt apply_cochar_at(const AutoGen& gen, Level level, const AffineElt& x) {
  const ChevAlgebra* g = x.algebra();
  const int m = x.order();
  AffineElt r(apply_cochar(gen.phi, x.loop), x.c, CycScalar(m));
  if (level == Level::Loop) return r;
  // H_i (x) 1 -> H_i (x) 1 + phi(a_i) <X_a_i, X_-a_i> c.
  for (int i = 0; i < g->rank(); ++i) {
    CycScalar a = x.loop.coeff(static_cast<std::size_t>(i)).coeff(0);
    if (a.is_zero() || gen.phi[i] == 0) continue;
    Root simple(static_cast<std::size_t>(g->rank()), 0);
    simple[i] = 1;
    long kappa = g->killing(*g->basis_of(simple), *g->basis_of(negate(simple)));
    r.c += a * Rational(gen.phi[i] * kappa);
  }
  if (level == Level::Hat && !x.d.is_zero()) {
    // d -> d - X_phi.
    CocharElement xphi = cochar_element(*g, gen.phi, m);
    r.d = x.d;
    r.loop -= x.d * LoopElt::from_vec(g, xphi.x, 0);
  }
  return r;
}

AffineElt apply_torus_at(const AutoGen& gen, const AffineElt& x) {
  const ChevAlgebra* g = x.algebra();
  AffineElt r(x.algebra(), x.order());
  for (const auto& [b, p] : x.loop.terms()) {
    CycScalar f(x.order(), 1);
    Root w = g->weight_of(b);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0) f *= gen.torus[i].pow(w[i]);
    }
    r.loop.add(b, p * f);
  }
  r.c = x.c;
  r.d = x.d;
  return r;
}

AffineElt apply_ring_at(const AutoGen& gen, Level level, const AffineElt& x) {
  AffineElt r(x.algebra(), x.order());
  SubstMode mode = gen.e == 1 ? SubstMode::Scale : SubstMode::Invert;
  for (const auto& [b, p] : x.loop.terms()) r.loop.add(b, laurent_substitute(p, mode, gen.a));
  if (level == Level::Loop) return r;
  r.c = gen.e == 1 ? x.c : -x.c;
  r.d = gen.e == 1 ? x.d : -x.d;
  return r;
}

}  // namespace

LoopElt apply_root_exp(const Root& alpha, const Laurent& u, const LoopElt& x) {
  return apply_root_exp_at(AutoGen::root_exp(alpha, u), Level::Loop, AffineElt(x)).loop;
}

LoopElt apply_cochar(const std::vector<int>& phi, const LoopElt& x) {
  const ChevAlgebra* g = x.algebra();
  LoopElt r(g, x.order());
  if (x.is_zero()) return r;
  if (static_cast<int>(phi.size()) != g->rank()) throw std::invalid_argument("cochar needs one value per simple root");
  for (const auto& [b, p] : x.terms()) {
    if (g->is_cartan(b)) {
      r.add(b, p);
    } else {
      r.add(b, p.shifted(cochar_value(phi, g->weight_of(b))));
    }
  }
  return r;
}

AffineElt apply_gen(const AutoGen& gen, Level level, const AffineElt& x) {
  require_level(level, x);
  switch (gen.kind) {
    case GenKind::RootExp:
      return apply_root_exp_at(gen, level, x);
    case GenKind::Diagram:
      return apply_diagram_at(gen, x);
    case GenKind::Cochar:
      return apply_cochar_at(gen, level, x);
    case GenKind::Torus:
      return apply_torus_at(gen, x);
    case GenKind::Ring:
      return apply_ring_at(gen, level, x);
    case GenKind::VShift: {
      if (level != Level::Hat) throw std::invalid_argument("vshift exists only at hat level");
      AffineElt r = x;
      r.c += gen.a * x.d;
      return r;
    }
  }
  throw std::logic_error("unknown generator kind");
}

AffineElt apply_word(const AutoWord& w, const AffineElt& x) {
  AffineElt r = x;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) r = apply_gen(*it, w.level, r);
  return r;
}

LoopElt apply_word(const AutoWord& w, const LoopElt& x) {
  AutoWord at_loop = w;
  at_loop.level = Level::Loop;
  return apply_word(at_loop, AffineElt(x)).loop;
}

AutoWord compose(const AutoWord& outer, const AutoWord& inner) {
  if (outer.level != inner.level) throw std::invalid_argument("composing words of different levels");
  AutoWord r = outer;
  r.gens.insert(r.gens.end(), inner.gens.begin(), inner.gens.end());
  return r;
}

namespace {

std::vector<AutoGen> invert_gen(const AutoGen& gen, Level level, const ChevAlgebra& g, int m) {
  switch (gen.kind) {
    case GenKind::RootExp:
      return {AutoGen::root_exp(gen.root, -gen.u)};
    case GenKind::Diagram: {
      const auto& p = gen.diagram->perm();
      std::vector<int> inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
      return {AutoGen::make_diagram(DiagramAuto::build(gen.diagram->algebra(), inv))};
    }
    case GenKind::Cochar: {
      std::vector<int> neg(gen.phi.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -gen.phi[i];
      if (level != Level::Hat) return {AutoGen::cochar(neg)};
      // cochar(phi) . cochar(-phi) = vshift(q), q = <X_phi, X_phi>.
      CocharElement xphi = cochar_element(g, gen.phi, m);
      return {AutoGen::cochar(neg), AutoGen::vshift(-g.killing(xphi.x, xphi.x))};
    }
    case GenKind::Torus: {
      std::vector<CycScalar> inv;
      for (const auto& t : gen.torus) inv.push_back(t.inverse());
      return {AutoGen::make_torus(inv)};
    }
    case GenKind::Ring:
      if (gen.e == 1) return {AutoGen::ring(gen.a.inverse(), 1)};
      return {gen};
    case GenKind::VShift:
      return {AutoGen::vshift(-gen.a)};
  }
  throw std::logic_error("unknown generator kind");
}

}  // namespace

AutoWord inverse(const AutoWord& w, const LoopAlgebra& alg) {
  AutoWord r;
  r.level = w.level;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
    auto inv = invert_gen(*it, w.level, alg.g(), alg.order());
    r.gens.insert(r.gens.end(), inv.begin(), inv.end());
  }
  return r;
}

AutoWord tilde_lift(const AutoWord& loop_word) {
  if (loop_word.level != Level::Loop) throw std::invalid_argument("tilde_lift expects a loop-level word");
  AutoWord r = loop_word;
  r.level = Level::Tilde;
  return r;
}

AutoWord hat_lift(const AutoWord& tilde_word) {
  if (tilde_word.level != Level::Tilde) throw std::invalid_argument("hat_lift expects a tilde-level word");
  AutoWord r = tilde_word;
  r.level = Level::Hat;
  return r;
}

AutoWord v_auto(const CycScalar& a) {
  AutoWord r;
  r.level = Level::Hat;
  r.gens.push_back(AutoGen::vshift(a));
  return r;
}

AutoWord gamma_conjugate(const AutoWord& w, int m) {
  AutoWord r;
  r.level = w.level;
  r.gens.push_back(AutoGen::ring(CycScalar::zeta(m), 1));
  r.gens.insert(r.gens.end(), w.gens.begin(), w.gens.end());
  r.gens.push_back(AutoGen::ring(CycScalar::zeta_pow(m, -1), 1));
  return r;
}

AutoGen torus_point(const ChevAlgebra& g, int i, const CycScalar& lambda) {
  std::vector<CycScalar> values;
  for (int j = 0; j < g.rank(); ++j) values.push_back(lambda.pow(g.cartan()[i][j]));
  return AutoGen::make_torus(values);
}

AutoWord torus_as_root_exps(const ChevAlgebra& g, int i, const CycScalar& lambda, Level level) {
  const int m = lambda.order();
  Root a(static_cast<std::size_t>(g.rank()), 0);
  a[i] = 1;
  Root na = negate(a);
  auto w = [&](const CycScalar& l) {
    std::vector<AutoGen> gens;
    gens.push_back(AutoGen::root_exp(a, Laurent(m, l)));
    gens.push_back(AutoGen::root_exp(na, Laurent(m, -l.inverse())));
    gens.push_back(AutoGen::root_exp(a, Laurent(m, l)));
    return gens;
  };
  AutoWord r;
  r.level = level;
  r.gens = w(lambda);
  // w(1)^-1 = x_a(-1) x_-a(1) x_a(-1).
  CycScalar one(m, 1);
  r.gens.push_back(AutoGen::root_exp(a, Laurent(m, -one)));
  r.gens.push_back(AutoGen::root_exp(na, Laurent(m, one)));
  r.gens.push_back(AutoGen::root_exp(a, Laurent(m, -one)));
  return r;
}

}  // namespace affkm
