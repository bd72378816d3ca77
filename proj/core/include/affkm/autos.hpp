#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affkm/affine.hpp"

namespace affkm {

enum class Level { Loop, Tilde, Hat };
enum class GenKind { RootExp, Diagram, Cochar, Torus, Ring, VShift };

std::string level_name(Level l);
std::string kind_name(GenKind k);

/// One automorphism generator. Which fields matter depends on kind.
struct AutoGen {
  GenKind kind = GenKind::Ring;
  Root root;                     // RootExp
  Laurent u;                     // RootExp: x_root(u) = exp(ad(u X_root))
  DiagramPtr diagram;            // Diagram
  std::vector<int> phi;          // Cochar: values on simple roots
  std::vector<CycScalar> torus;  // Torus: values on simple roots
  CycScalar a;                   // Ring: s -> a s^e; VShift: d -> d + a c
  int e = 1;                     // Ring

  static AutoGen root_exp(Root alpha, Laurent u);
  static AutoGen make_diagram(DiagramPtr sigma);
  static AutoGen cochar(std::vector<int> phi);
  static AutoGen make_torus(std::vector<CycScalar> values);
  static AutoGen ring(CycScalar a, int e);
  static AutoGen vshift(CycScalar a);
};

/// g_1 . g_2 . ... . g_k, applied right to left, at a fixed lift level.
struct AutoWord {
  Level level = Level::Hat;
  std::vector<AutoGen> gens;
};

/// Single-generator actions on loop elements.
LoopElt apply_root_exp(const Root& alpha, const Laurent& u, const LoopElt& x);
LoopElt apply_cochar(const std::vector<int>& phi, const LoopElt& x);

AffineElt apply_gen(const AutoGen& gen, Level level, const AffineElt& x);
AffineElt apply_word(const AutoWord& w, const AffineElt& x);
LoopElt apply_word(const AutoWord& w, const LoopElt& x);

/// Bracket used at a level: the loop bracket for Loop, the extended bracket otherwise.
AffineElt bracket_at(Level level, const AffineElt& x, const AffineElt& y);
/// Quotient map to the loop algebra: drops c and d.
LoopElt project_loop(const AffineElt& x);

AutoWord compose(const AutoWord& outer, const AutoWord& inner);
/// Reverses and inverts generators; a hat-level cochar(phi) inverts to
/// cochar(-phi) . vshift(-<X_phi, X_phi>).
AutoWord inverse(const AutoWord& w, const LoopAlgebra& alg);
AutoWord tilde_lift(const AutoWord& loop_word);
AutoWord hat_lift(const AutoWord& tilde_word);
AutoWord v_auto(const CycScalar& a);
/// Conjugation by s -> z s on coefficients.
AutoWord gamma_conjugate(const AutoWord& w, int m);

/// h_alpha_i(lambda) written with root exponentials: w(lambda) w(1)^-1,
/// w(lambda) = x_a(lambda) x_-a(-1/lambda) x_a(lambda).
AutoWord torus_as_root_exps(const ChevAlgebra& g, int i, const CycScalar& lambda, Level level);
/// The same point as simple-root torus values: t_j = lambda^{a_j(H_i)}.
AutoGen torus_point(const ChevAlgebra& g, int i, const CycScalar& lambda);

struct CocharElement {
  Vec x;             // X_phi in h
  bool unique = false;
  bool verified = false;  // [X_phi, X_a] = phi(a) X_a on every root
};
CocharElement cochar_element(const ChevAlgebra& g, const std::vector<int>& phi, int m);
int cochar_value(const std::vector<int>& phi, const Root& r);

Report verify_automorphism(const LoopAlgebra& alg, const AutoWord& w, int lo, int hi, std::size_t samples,
                           std::uint64_t seed);
Report verify_exact_sequence(const LoopAlgebra& alg, int lo, int hi, std::size_t samples, std::uint64_t seed);
/// Section and restriction properties per generator kind, the cochar corrections
/// and the uniqueness of X_phi.
Report verify_lifts(const LoopAlgebra& alg, int lo, int hi, std::size_t samples, std::uint64_t seed);
/// Ring scaling by z commutes with the diagram automorphism.
Report verify_ring_diagram_commute(const LoopAlgebra& alg, int lo, int hi, std::size_t samples, std::uint64_t seed);
/// Multiplication by t^n commutes with the loop bracket; s does not preserve the twisted algebra for m > 1.
Report verify_centroid(const LoopAlgebra& alg, int lo, int hi, std::size_t samples, std::uint64_t seed);

}  // namespace affkm
