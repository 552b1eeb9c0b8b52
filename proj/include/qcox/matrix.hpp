#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcox {

/// Dense square-ish matrix over an exact coefficient ring.  Columns hold
/// the images of basis vectors throughout the project, so operator
/// composition is plain matrix multiplication.
template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& x = at(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix pow(unsigned long k) const {
    Matrix r = identity(rows_);
    Matrix base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  /// Gauss-Jordan inverse over a field; nullopt when singular.
  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m.at(pivot, col) == T(0)) ++pivot;
      if (pivot == n) return std::nullopt;
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m.at(pivot, j), m.at(col, j));
          std::swap(inv.at(pivot, j), inv.at(col, j));
        }
      }
      T d = m.at(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(col, j) = m.at(col, j) / d;
        inv.at(col, j) = inv.at(col, j) / d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col) continue;
        T f = m.at(i, col);
        if (f == T(0)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          m.at(i, j) -= f * m.at(col, j);
          inv.at(i, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  /// Determinant by fraction-free-ish Gauss over a field.
  T det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = rows_;
    Matrix m = *this;
    T result(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m.at(pivot, col) == T(0)) ++pivot;
      if (pivot == n) return T(0);
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        result = T(0) - result;
      }
      result = result * m.at(col, col);
      T d = m.at(col, col);
      for (std::size_t i = col + 1; i < n; ++i) {
        T f = m.at(i, col) / d;
        if (f == T(0)) continue;
        for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
      }
    }
    return result;
  }

  template <typename U, typename Fn>
  Matrix<U> map(Fn fn) const {
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = fn(at(i, j));
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) os << ",";
      os << "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << ",";
        os << at(i, j);
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

} // namespace qcox
