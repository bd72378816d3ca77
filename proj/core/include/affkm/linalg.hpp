#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affkm/scalars.hpp"

namespace affkm {

using Vec = std::vector<CycScalar>;

Vec zero_vec(int m, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec& axpy(Vec& y, const CycScalar& a, const Vec& x);  // y += a*x
Vec scaled(Vec v, const CycScalar& a);

/// Dense row-major matrix over Q(z_m). Exact; no pivoting heuristics beyond
/// "first nonzero entry".
class Matrix {
 public:
  Matrix() = default;
  Matrix(int m, std::size_t rows, std::size_t cols);

  static Matrix identity(int m, std::size_t n);
  static Matrix from_columns(int m, std::size_t rows, const std::vector<Vec>& columns);

  int order() const { return m_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  std::vector<Vec> columns() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;

  /// Rows [r0, r1) as a new matrix.
  Matrix row_block(std::size_t r0, std::size_t r1) const;
  /// Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const;
  /// Vertical concatenation [this ; o].
  Matrix vcat(const Matrix& o) const;

  bool is_zero() const;
  bool is_diagonal() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  int m_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycScalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(Matrix a);
std::size_t rank(const Matrix& a);

/// Basis of {v : A v = 0}; one vector per free column, with a 1 in that column.
std::vector<Vec> kernel(const Matrix& a);

/// Some x with A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& a);

/// Linear-span utilities on column vectors of equal length.
std::vector<Vec> span_basis(int m, std::size_t dim, const std::vector<Vec>& vectors);
std::size_t span_rank(int m, std::size_t dim, const std::vector<Vec>& vectors);
bool in_span(int m, std::size_t dim, const std::vector<Vec>& basis, const Vec& v);
bool same_span(int m, std::size_t dim, const std::vector<Vec>& a, const std::vector<Vec>& b);
std::vector<Vec> intersect_spans(int m, std::size_t dim, const std::vector<Vec>& a,
                                 const std::vector<Vec>& b);

}  // namespace affkm
