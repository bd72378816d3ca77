#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affkm/affine.hpp"
#include "affkm/eigen.hpp"

namespace affkm {

/// Monomial basis of the twisted algebra in degrees [lo, hi] (numerators over m),
/// followed by c and d when requested. Without c, images are taken modulo kc.
struct Window {
  int lo = 0;
  int hi = 0;
  bool with_c = false;
  bool with_d = false;
  std::vector<AffineElt> basis;
  std::vector<int> degree;  // exponent numerator of each basis element; 0 for c and d
  std::vector<int> slot;    // index in the eigenbasis of its degree; -1 for c, -2 for d

  static Window make(const LoopAlgebra& alg, int lo, int hi, bool with_c = false, bool with_d = false);
  static Window standard(const LoopAlgebra& alg) { return make(alg, -3 * alg.order(), 3 * alg.order()); }
  Window enlarged(const LoopAlgebra& alg, int by) const { return make(alg, lo - by, hi + by, with_c, with_d); }
  std::size_t size() const { return basis.size(); }
};

/// ad(x) on a window. `square` keeps the in-window rows, `outside` the rows of
/// degrees beyond it; `leaves[j]` marks columns with a nonzero outside part.
struct AdMatrix {
  Matrix square;
  Matrix outside;
  std::vector<bool> leaves;
};
AdMatrix ad_matrix(const LoopAlgebra& alg, const AffineElt& x, const Window& w);

/// Coordinates of y on the window basis; nullopt if y has support outside.
/// The c component is dropped when the window has no c.
std::optional<Vec> window_coords(const LoopAlgebra& alg, const Window& w, const AffineElt& y);
AffineElt from_window_coords(const Window& w, const Vec& v);

/// Largest subspace U of the window mapped into the window by every given ad
/// matrix. The basis has one vector per free column, with a 1 there and 0 at
/// the other free columns, so those entries are coordinates on U.
struct InvariantPart {
  std::vector<Vec> basis;
  std::vector<std::size_t> free;
};
InvariantPart common_invariant_subspace(int m, std::size_t n, const std::vector<const AdMatrix*>& ads);
/// Matrix of ad restricted to U in the coordinates above.
Matrix restrict_to(const InvariantPart& u, const AdMatrix& ad);

struct WeightSpace {
  CycScalar w;
  std::vector<AffineElt> basis;
  bool interior = false;
  int series = -1;
};

struct WeightDecomp {
  AffineElt x;
  Window window;
  std::vector<WeightSpace> weights;  // ascending
  std::size_t invariant_dim = 0;     // dim of the ad(x)-stable part of the window
  bool diagonalizable = false;       // eigenvectors span that part
  bool closed_form = false;          // x' of degree 0 with a diagonal ad matrix
  int series_count = 0;              // series met by interior weights

  const WeightSpace* find(const CycScalar& w) const;
  bool is_interior(const CycScalar& w) const;
};

/// Eigenvalues and eigenvectors of ad(x), x = x' + b d with b != 0, on the
/// largest ad(x)-stable part of the window. A weight is interior when its
/// eigenspace is the full weight space of the infinite algebra: by closed form
/// when ad(x) is diagonal, else when it does not grow under window enlargement.
/// Throws std::invalid_argument for b = 0 or when no weight is interior.
WeightDecomp weight_decompose(const LoopAlgebra& alg, const AffineElt& x, const Window& w);

/// lambda * (sum of the h0 basis) (x) 1 + d with lambda making all root values
/// distinct modulo 1.
AffineElt regular_element(const LoopAlgebra& alg);

/// [x, v] = w v for every listed vector, through the bracket itself.
Report verify_eigenvectors(const WeightDecomp& d);
Report verify_shift(const LoopAlgebra& alg, const WeightDecomp& d);
/// Weight set symmetry on a symmetric window, plus orthogonality of hat-level
/// weight spaces: (A_u, A_v) = 0 iff u + v != 0 (nondegenerate pairing otherwise).
Report verify_opposite(const LoopAlgebra& alg, const WeightDecomp& d, const CycScalar& beta);
Report verify_zero_weight(const WeightDecomp& d);
Report verify_product_rule(const WeightDecomp& d);
/// dim A_{w+mn} = dim A_w with t^n injective, and at most dim g series.
Report rspan_isomorphism_check(const LoopAlgebra& alg, const WeightDecomp& d);
/// Hat-level zero weight space is the core one plus the line of x.
Report verify_insider(const LoopAlgebra& alg, const AffineElt& x, const Window& w);
/// For degree-0 y the ad matrix is block diagonal by degree; its semisimple part
/// must be the block-diagonal matrix of the blocks' semisimple parts.
Report verify_jordan_blocks(const LoopAlgebra& alg, const AffineElt& y, const Window& w);

/// All of the above for one x; window defaults to [-3m, 3m].
Report spectral_suite(const LoopAlgebra& alg, const AffineElt& x, const Window& w, const CycScalar& beta);

nlohmann::ordered_json to_json(const WeightDecomp& d);

}  // namespace affkm
