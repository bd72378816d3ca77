#include "affkm/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include <Eigen/Eigenvalues>

namespace affkm {

namespace {

constexpr long kMaxDenominator = 10000;
constexpr double kClusterRadius = 1e-3;

// Best continued-fraction convergent of x with denominator at most kMaxDenominator.
Rational rationalize(double x) {
  double r = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational best(static_cast<long>(std::llround(x)));
  for (int step = 0; step < 40; ++step) {
    double a = std::floor(r);
    if (std::abs(a) > 1e12) break;
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0;
    long q2 = ai * q1 + q0;
    if (q2 > kMaxDenominator) break;
    best = Rational(p2, q2);
    best.canonicalize();
    if (std::abs(x - static_cast<double>(p2) / static_cast<double>(q2)) < 1e-12 * std::max(1.0, std::abs(x))) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = r - a;
    if (frac < 1e-14) break;
    r = 1.0 / frac;
  }
  return best;
}

std::optional<CycScalar> recognize(std::complex<double> z, int m) {
  if (m <= 2) {
    if (std::abs(z.imag()) > kClusterRadius) return std::nullopt;
    return CycScalar(m, rationalize(z.real()));
  }
  // z = a + b*zeta with zeta = -1/2 + i sqrt(3)/2
  double b = z.imag() / (std::sqrt(3.0) / 2.0);
  double a = z.real() + b / 2.0;
  return CycScalar(m, rationalize(a), rationalize(b));
}

std::vector<std::complex<double>> numeric_eigenvalues(const Matrix& a) {
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd num(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) num(i, j) = a(i, j).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(num, false);
  std::vector<std::complex<double>> out;
  if (solver.info() != Eigen::Success) return out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

// Groups nearby numeric values and returns the mean of each group. Defective
// eigenvalues split into small circles whose centre is accurate.
std::vector<std::complex<double>> cluster_means(std::vector<std::complex<double>> vals) {
  std::vector<std::complex<double>> means;
  std::vector<bool> used(vals.size(), false);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (used[i]) continue;
    std::complex<double> sum = vals[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < vals.size(); ++j) {
      if (!used[j] && std::abs(vals[j] - vals[i]) < 10 * kClusterRadius) {
        used[j] = true;
        sum += vals[j];
        ++count;
      }
    }
    means.push_back(sum / static_cast<double>(count));
    means.push_back(vals[i]);
  }
  return means;
}

Matrix shifted_by(const Matrix& a, const CycScalar& w) {
  Matrix s = a;
  for (std::size_t i = 0; i < a.rows(); ++i) s(i, i) -= w;
  return s;
}

}  // namespace

std::vector<CycScalar> exact_eigenvalues(const Matrix& a) {
  const int m = a.order();
  std::map<CycScalar, bool, CycLess> tried;
  std::vector<CycScalar> out;
  auto attempt = [&](const CycScalar& w) {
    if (tried.count(w)) return;
    tried[w] = true;
    if (!kernel(shifted_by(a, w)).empty()) out.push_back(w);
  };
  for (std::size_t i = 0; i < a.rows(); ++i) attempt(a(i, i));
  for (const auto& z : cluster_means(numeric_eigenvalues(a))) {
    if (auto w = recognize(z, m)) attempt(*w);
  }
  std::sort(out.begin(), out.end(), CycLess{});
  return out;
}

bool EigenDecomposition::complete() const {
  std::size_t total = 0;
  for (const auto& s : spaces) total += s.basis.size();
  return total == dim;
}

EigenDecomposition eigen_decompose(const Matrix& a) {
  EigenDecomposition d;
  d.dim = a.rows();
  if (a.rows() == 0) return d;
  if (a.is_diagonal()) {
    std::map<CycScalar, std::vector<Vec>, CycLess> by_value;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Vec e = zero_vec(a.order(), a.rows());
      e[i] = CycScalar(a.order(), 1);
      by_value[a(i, i)].push_back(std::move(e));
    }
    for (auto& [w, basis] : by_value) d.spaces.push_back({w, std::move(basis)});
    return d;
  }
  for (const auto& w : exact_eigenvalues(a)) d.spaces.push_back({w, kernel(shifted_by(a, w))});
  return d;
}

std::optional<JordanSplit> jordan_split(const Matrix& a) {
  const int m = a.order();
  const std::size_t n = a.rows();
  std::vector<Vec> columns;
  std::vector<CycScalar> values;
  for (const auto& w : exact_eigenvalues(a)) {
    Matrix b = shifted_by(a, w);
    Matrix power = b;
    std::vector<Vec> gen = kernel(power);
    for (std::size_t k = 1; k < n; ++k) {
      power = power * b;
      auto next = kernel(power);
      if (next.size() == gen.size()) break;
      gen = std::move(next);
    }
    for (auto& v : gen) {
      columns.push_back(std::move(v));
      values.push_back(w);
    }
  }
  if (columns.size() != n) return std::nullopt;
  Matrix p = Matrix::from_columns(m, n, columns);
  auto pinv = inverse(p);
  if (!pinv) return std::nullopt;
  Matrix diag(m, n, n);
  for (std::size_t i = 0; i < n; ++i) diag(i, i) = values[i];
  JordanSplit out;
  out.semisimple = p * diag * *pinv;
  out.nilpotent = a - out.semisimple;
  return out;
}

}  // namespace affkm
