#pragma once

#include <optional>
#include <vector>

#include "affkm/autos.hpp"
#include "affkm/spectral.hpp"

namespace affkm {

/// Subalgebra given by spanning elements.
struct SubalgebraSpec {
  std::vector<AffineElt> generators;
};

class NotAbelian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// h0 (x) 1 together with c and d.
SubalgebraSpec standard_mad(const LoopAlgebra& alg);

bool is_abelian(const SubalgebraSpec& spec);

struct JointWeight {
  std::vector<CycScalar> values;  // one per generator
  std::size_t dim = 0;
};

struct DiagonalizableResult {
  bool diagonalizable = false;
  std::size_t invariant_dim = 0;     // common stable part of the window
  std::vector<JointWeight> weights;  // filled when diagonalizable
  std::optional<AffineElt> witness;  // a generator with a defective restriction
};

/// Simultaneous exact diagonalization on the common ad-stable part of the window.
/// Throws NotAbelian for non-commuting generators.
DiagonalizableResult is_diagonalizable(const LoopAlgebra& alg, const SubalgebraSpec& spec, const Window& w);

/// c in the span, a nonzero d component, dimension at least 3, and a window
/// maximality probe: no loop element outside the span commutes with it and
/// keeps it diagonalizable. An enlarging element is stored in details.probe.
Report mad_sanity(const LoopAlgebra& alg, const SubalgebraSpec& spec, const Window& w);

/// Joint kernel of the loop brackets with the given loop elements, on the window.
std::vector<LoopElt> centralizer(const LoopAlgebra& alg, const std::vector<LoopElt>& ts, int lo, int hi);

/// Applies the word to the generators and compares spans with the standard MAD.
Report conjugacy_verify(const LoopAlgebra& alg, const AutoWord& word, const SubalgebraSpec& spec);

/// The standard MAD checks, plus conjugation round trips for random hat words.
Report mad_suite(const LoopAlgebra& alg, const Window& w, std::size_t words, std::uint64_t seed);

}  // namespace affkm
