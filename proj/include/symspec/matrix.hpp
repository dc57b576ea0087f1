#pragma once

#include "symspec/common.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symspec {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T init = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const noexcept { return data_; }
  bool operator==(const Matrix&) const = default;

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

class EigenNonConvergence : public Error {
 public:
  using Error::Error;
};

/// Rank over GF(2^31 - 1). Never exceeds the rank over the rationals.
std::size_t rank_mod_p(const Matrix<int>& m);

/// Rank over the rationals. A modular rank equal to min(rows, cols) or to a
/// known upper bound settles it; otherwise fraction-free elimination runs.
std::size_t exact_rank(const Matrix<int>& m, std::optional<std::size_t> upper_bound = {});

/// Eigenvalues of a symmetric matrix, descending (Householder reduction to
/// tridiagonal form, then implicit QL). Throws EigenNonConvergence.
std::vector<double> symmetric_eigenvalues(Matrix<double> a);

/// Descending singular values: |eigenvalues| when m is symmetric, else
/// square roots of the eigenvalues of m^T m.
std::vector<double> singular_values(const Matrix<double>& m);

/// "rows cols" then one line of space-separated entries per row.
std::string matrix_text(const Matrix<int>& m);

}  // namespace symspec
