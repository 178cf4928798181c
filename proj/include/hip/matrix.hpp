#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hip/field.hpp"
#include "hip/rng.hpp"

namespace hip {

/// Dense row-major matrix over F_q. Indices are 0-based.
class Matrix {
 public:
  Matrix(FieldCtxPtr ctx, int rows, int cols);
  Matrix(FieldCtxPtr ctx, int rows, int cols, std::vector<FieldElement> entries);
  static Matrix identity(const FieldCtxPtr& ctx, int n);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const FieldElement& at(int r, int c) const;
  void set(int r, int c, FieldElement v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Matrix-vector product M*v.
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  Matrix transpose() const;

  /// Gauss-Jordan inverse, pivoting on the first nonzero entry per column.
  /// Throws std::invalid_argument on non-square or singular input.
  Matrix inverse() const;
  bool invertible() const;
  int rank() const;

  /// One row per line, entries as element text forms, space-separated.
  std::string str() const;
  static Matrix parse(const FieldCtxPtr& ctx, int rows, int cols, std::string_view text);

 private:
  FieldElement& cell(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const FieldElement& cell(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<FieldElement> entries_;
  FieldCtxPtr ctx_;
};

/// The unique X with X*A = B, computed by eliminating A^T X^T = B^T. Requires
/// A of full row rank and a consistent system; otherwise throws
/// std::invalid_argument ("underdetermined" / "inconsistent").
Matrix solve_right(const Matrix& A, const Matrix& B);

/// Uniformly random invertible dim x dim matrix by rejection sampling.
/// A cap of 10000 rejected samples throws std::runtime_error.
Matrix random_invertible(int dim, const FieldCtxPtr& ctx, Rng& rng);

}  // namespace hip
