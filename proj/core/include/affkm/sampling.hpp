#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "affkm/autos.hpp"

namespace affkm {

/// Seeded generator with explicit modulo draws, so sequences do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform-ish integer in [lo, hi].
  int uniform(int lo, int hi);
  int nonzero(int lo, int hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::mt19937_64 eng_;
};

/// Random twisted loop element: `terms` monomials e (x) s^j, j in [lo, hi], coefficients in [-5, 5].
LoopElt random_loop(const LoopAlgebra& alg, Rng& rng, int lo, int hi, int terms = 3);
AffineElt random_affine(const LoopAlgebra& alg, Rng& rng, int lo, int hi, bool with_c, bool with_d, int terms = 3);

/// All Dynkin diagram symmetries of g, identity first.
std::vector<std::vector<int>> diagram_symmetries(const ChevAlgebra& g);

/// Random generator of the given kind compatible with the twisted algebra
/// (commutes with sigma and with s -> z s).
AutoGen random_generator(const LoopAlgebra& alg, Rng& rng, GenKind kind);
std::vector<GenKind> generator_kinds(Level level);
AutoWord random_word(const LoopAlgebra& alg, Rng& rng, Level level, int max_len);

}  // namespace affkm
