#pragma once

#include <optional>
#include <vector>

#include "affkm/linalg.hpp"

namespace affkm {

/// Exact eigenvalues of a square matrix that lie in Q(z_m).
///
/// Floating-point eigenvalues are recognized as small-denominator elements of
/// Q(z_m) and kept only if the exact kernel of A - w is nonzero. The diagonal
/// entries are always tried as well.
std::vector<CycScalar> exact_eigenvalues(const Matrix& a);

struct Eigenspace {
  CycScalar value;
  std::vector<Vec> basis;
};

struct EigenDecomposition {
  std::vector<Eigenspace> spaces;  // ordered by CycLess on the value
  std::size_t dim = 0;             // size of the matrix
  bool complete() const;           // eigenvectors span the whole space
};

EigenDecomposition eigen_decompose(const Matrix& a);

/// A = S + N with S diagonalizable, N nilpotent and SN = NS; nullopt when some
/// eigenvalue is outside Q(z_m).
struct JordanSplit {
  Matrix semisimple;
  Matrix nilpotent;
};
std::optional<JordanSplit> jordan_split(const Matrix& a);

}  // namespace affkm
