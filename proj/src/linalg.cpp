#include "sagrs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sagrs/error.hpp"

namespace sagrs::linalg {

using detail::require;

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  require(rows >= 1 && cols >= 1, "Matrix: dimensions must be at least 1x1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(rows >= 1 && cols >= 1, "Matrix: dimensions must be at least 1x1");
  require(data_.size() == rows * cols, "Matrix: entry count does not match rows*cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require(rows_ >= 1 && cols_ >= 1, "Matrix: dimensions must be at least 1x1");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::column(std::span<const double> values) {
  return Matrix(values.size(), 1, std::vector<double>(values.begin(), values.end()));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(),
          "mat_mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
              std::to_string(b.rows()) + ")");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      auto src = b.row(k);
      for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += aik * src[j];
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix solve(Matrix a, Matrix b) {
  const std::size_t n = a.rows();
  require(a.cols() == n, "solve: coefficient matrix is not square");
  require(b.rows() == n, "solve: right-hand side has wrong row count");
  const std::size_t m = b.cols();

  // Row scales are taken from the original matrix and travel with their rows.
  std::vector<double> scale(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (double v : a.row(i)) scale[i] = std::max(scale[i], std::abs(v));

  auto swap_rows = [](Matrix& mat, std::size_t r1, std::size_t r2) {
    std::swap_ranges(mat.row(r1).begin(), mat.row(r1).end(), mat.row(r2).begin());
  };

  // Blocked right-looking LU: factor a panel of columns, then apply it to the
  // trailing matrix one row at a time. Multipliers are stored below the diagonal.
  constexpr std::size_t kBlock = 48;
  for (std::size_t kb = 0; kb < n; kb += kBlock) {
    const std::size_t kend = std::min(kb + kBlock, n);

    for (std::size_t k = kb; k < kend; ++k) {
      std::size_t pivot = k;
      double best = std::abs(a(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        const double v = std::abs(a(i, k));
        if (v > best) {
          best = v;
          pivot = i;
        }
      }
      if (scale[pivot] == 0.0 || best < kSingularityThreshold * scale[pivot])
        throw SingularMatrixError("solve: matrix is singular at column " + std::to_string(k));
      if (pivot != k) {
        swap_rows(a, pivot, k);
        swap_rows(b, pivot, k);
        std::swap(scale[pivot], scale[k]);
      }
      const auto pivot_row = a.row(k);
      const double inv = 1.0 / pivot_row[k];
      for (std::size_t i = k + 1; i < n; ++i) {
        auto row = a.row(i);
        const double factor = row[k] * inv;
        row[k] = factor;
        if (factor == 0.0) continue;
        for (std::size_t j = k + 1; j < kend; ++j) row[j] -= factor * pivot_row[j];
      }
    }
    if (kend == n) break;

    // Rows of U to the right of the panel.
    for (std::size_t k = kb; k < kend; ++k) {
      const auto src = a.row(k);
      for (std::size_t i = k + 1; i < kend; ++i) {
        auto dst = a.row(i);
        const double factor = dst[k];
        if (factor == 0.0) continue;
        for (std::size_t j = kend; j < n; ++j) dst[j] -= factor * src[j];
      }
    }
    // Trailing update: column chunks keep the panel's slice of U in L1, and
    // four rows at a time share each load of it.
    constexpr std::size_t kChunk = 64;
    for (std::size_t jc = kend; jc < n; jc += kChunk) {
      const std::size_t jend = std::min(jc + kChunk, n);
      std::size_t i = kend;
      for (; i + 4 <= n; i += 4) {
        double* __restrict d0 = a.row(i).data();
        double* __restrict d1 = a.row(i + 1).data();
        double* __restrict d2 = a.row(i + 2).data();
        double* __restrict d3 = a.row(i + 3).data();
        for (std::size_t k = kb; k < kend; ++k) {
          const double f0 = d0[k], f1 = d1[k], f2 = d2[k], f3 = d3[k];
          const double* __restrict src = a.row(k).data();
          for (std::size_t j = jc; j < jend; ++j) {
            const double u = src[j];
            d0[j] -= f0 * u;
            d1[j] -= f1 * u;
            d2[j] -= f2 * u;
            d3[j] -= f3 * u;
          }
        }
      }
      for (; i < n; ++i) {
        double* __restrict dst = a.row(i).data();
        for (std::size_t k = kb; k < kend; ++k) {
          const double factor = dst[k];
          const double* __restrict src = a.row(k).data();
          for (std::size_t j = jc; j < jend; ++j) dst[j] -= factor * src[j];
        }
      }
    }
  }

  // Forward substitution with the unit lower factor, then back substitution.
  for (std::size_t i = 1; i < n; ++i) {
    auto rhs = b.row(i);
    const auto row = a.row(i);
    for (std::size_t k = 0; k < i; ++k) {
      const double factor = row[k];
      if (factor == 0.0) continue;
      const auto xk = b.row(k);
      for (std::size_t j = 0; j < m; ++j) rhs[j] -= factor * xk[j];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    auto rhs = b.row(k);
    const auto row = a.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double aki = row[i];
      if (aki == 0.0) continue;
      const auto xi = b.row(i);
      for (std::size_t j = 0; j < m; ++j) rhs[j] -= aki * xi[j];
    }
    for (std::size_t j = 0; j < m; ++j) rhs[j] /= row[k];
  }
  return b;
}

}  // namespace sagrs::linalg
