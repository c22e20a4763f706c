#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qeclab {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Dense symmetric matrix. Symmetry is exact and maintained by construction:
/// there is no mutable element access, only symmetric set().
template <typename T>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {
    if (n == 0) throw std::invalid_argument("SymMatrix dimension must be at least 1");
  }

  /// Builds entries from f(i, j) for i <= j (0-indexed) and mirrors them.
  template <typename F>
  static SymMatrix generate(std::size_t n, F&& f) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.set(i, j, f(i, j));
    return m;
  }

  /// Throws if `m` is not square or not exactly symmetric.
  static SymMatrix from_matrix(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: matrix is not square");
    SymMatrix s(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.cols(); ++j) {
        if (!(m(i, j) == m(j, i))) throw std::invalid_argument("SymMatrix: matrix is not symmetric");
        s.set(i, j, m(i, j));
      }
    return s;
  }

  static SymMatrix identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, T(1));
    return m;
  }

  std::size_t size() const { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const T& v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  Matrix<T> to_matrix() const {
    Matrix<T> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  template <typename U, typename F>
  SymMatrix<U> map(F&& f) const {
    return SymMatrix<U>::generate(n_, [&](std::size_t i, std::size_t j) { return f((*this)(i, j)); });
  }

  T trace() const {
    T acc(0);
    for (std::size_t i = 0; i < n_; ++i) acc += (*this)(i, i);
    return acc;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

inline double frobenius_norm(const SymMatrix<double>& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) acc += m(i, j) * m(i, j);
  return std::sqrt(acc);
}

inline double max_abs_entry(const SymMatrix<double>& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) acc = std::max(acc, std::abs(m(i, j)));
  return acc;
}

template <typename T>
std::string to_string(const SymMatrix<T>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace qeclab
