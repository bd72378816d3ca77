#include "affkm/linalg.hpp"

#include <stdexcept>

namespace affkm {

Vec zero_vec(int m, std::size_t n) { return Vec(n, CycScalar(m)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec& axpy(Vec& y, const CycScalar& a, const Vec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
  return y;
}

Vec scaled(Vec v, const CycScalar& a) {
  for (auto& x : v) x *= a;
  return v;
}

Matrix::Matrix(int m, std::size_t rows, std::size_t cols)
    : m_(m), rows_(rows), cols_(cols), data_(rows * cols, CycScalar(m)) {}

Matrix Matrix::identity(int m, std::size_t n) {
  Matrix r(m, n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = CycScalar(m, 1);
  return r;
}

Matrix Matrix::from_columns(int m, std::size_t rows, const std::vector<Vec>& columns) {
  Matrix r(m, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < rows; ++i) r(i, j) = columns[j][i];
  }
  return r;
}

Vec Matrix::column(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix r(m_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix r(m_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycScalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const CycScalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vec r = zero_vec(m_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycScalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) r[i] += a * v[k];
    }
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::row_block(std::size_t r0, std::size_t r1) const {
  Matrix r(m_, r1 - r0, cols_);
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i - r0, j) = (*this)(i, j);
  return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hcat: row count mismatch");
  Matrix r(m_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vcat: column count mismatch");
  Matrix r(m_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(Matrix a) {
  RowEchelon out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    CycScalar inv = a(r, c).inverse();
    // Matrices here are mostly sparse; touch only the pivot row's support.
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) {
        a(r, j) *= inv;
        support.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      CycScalar f = a(i, c);
      for (std::size_t j : support) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vec> kernel(const Matrix& a) {
  RowEchelon e = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(a.order(), cols);
    v[f] = CycScalar(a.order(), 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const CycScalar& x = e.reduced(r, f);
      if (!x.is_zero()) v[e.pivots[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug = a.hcat(Matrix::from_columns(a.order(), a.rows(), {b}));
  RowEchelon e = rref(std::move(aug));
  const std::size_t n = a.cols();
  Vec x = zero_vec(a.order(), n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == n) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, n);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  RowEchelon e = rref(a.hcat(Matrix::identity(a.order(), n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(a.order(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::vector<Vec> span_basis(int m, std::size_t dim, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  Matrix rows = Matrix::from_columns(m, dim, vectors).transpose();
  RowEchelon e = rref(std::move(rows));
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

std::size_t span_rank(int m, std::size_t dim, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_columns(m, dim, vectors));
}

bool in_span(int m, std::size_t dim, const std::vector<Vec>& basis, const Vec& v) {
  if (is_zero_vec(v)) return true;
  if (basis.empty()) return false;
  return solve(Matrix::from_columns(m, dim, basis), v).has_value();
}

bool same_span(int m, std::size_t dim, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::size_t ra = span_rank(m, dim, a);
  if (ra != span_rank(m, dim, b)) return false;
  std::vector<Vec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(m, dim, both) == ra;
}

std::vector<Vec> intersect_spans(int m, std::size_t dim, const std::vector<Vec>& a,
                                 const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0; the intersection is spanned by sum x_i a_i.
  Matrix ma = Matrix::from_columns(m, dim, a);
  std::vector<Vec> negb;
  for (const auto& v : b) negb.push_back(scaled(v, CycScalar(m, -1)));
  Matrix stacked = ma.hcat(Matrix::from_columns(m, dim, negb));
  std::vector<Vec> out;
  for (const auto& k : kernel(stacked)) {
    Vec x(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.size()));
    Vec v = ma * x;
    if (!is_zero_vec(v)) out.push_back(std::move(v));
  }
  return span_basis(m, dim, out);
}

}  // namespace affkm
