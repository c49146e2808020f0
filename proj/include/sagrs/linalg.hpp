#pragma once

// Small dense real-matrix kernel used by the surrogate models.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sagrs::linalg {

/// Dense row-major matrix of doubles. Always at least 1x1.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  const std::vector<double>& entries() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Pivots smaller than this fraction of their original row's largest
/// magnitude are treated as zero.
inline constexpr double kSingularityThreshold = 1e-12;

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// Solves a * x = b by Gaussian elimination with partial pivoting.
/// Throws SingularMatrixError when a pivot falls below kSingularityThreshold
/// relative to its row scale, ContractViolation on shape mismatch.
Matrix solve(Matrix a, Matrix b);

}  // namespace sagrs::linalg
