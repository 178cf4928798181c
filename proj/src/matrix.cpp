#include "hip/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "hip/errors.hpp"

namespace hip {

namespace {

void require_same_ctx(const Matrix& a, const Matrix& b) {
  if (a.ctx().get() == b.ctx().get()) return;
  if (!(*a.ctx() == *b.ctx())) throw std::invalid_argument("field context mismatch");
}

}  // namespace

Matrix::Matrix(FieldCtxPtr ctx, int rows, int cols)
    : rows_(rows), cols_(cols), entries_(), ctx_(std::move(ctx)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  entries_.assign(static_cast<size_t>(rows) * cols, ctx_->zero());
}

Matrix::Matrix(FieldCtxPtr ctx, int rows, int cols, std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), ctx_(std::move(ctx)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  if (entries_.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match the matrix shape");
  for (const auto& e : entries_)
    if (!(*e.ctx() == *ctx_)) throw std::invalid_argument("entry from a different field");
}

Matrix Matrix::identity(const FieldCtxPtr& ctx, int n) {
  Matrix out(ctx, n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, ctx->one());
  return out;
}

const FieldElement& Matrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("matrix index out of range");
  return cell(r, c);
}

void Matrix::set(int r, int c, FieldElement v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::invalid_argument("matrix index out of range");
  if (!(*v.ctx() == *ctx_)) throw std::invalid_argument("entry from a different field");
  cell(r, c) = std::move(v);
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_ctx(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  std::vector<FieldElement> out;
  out.reserve(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) out.push_back(entries_[i] + o.entries_[i]);
  return Matrix(ctx_, rows_, cols_, std::move(out));
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_ctx(*this, o);
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(ctx_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const FieldElement& a = cell(i, l);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out.cell(i, j) += a * o.cell(l, j);
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && *ctx_ == *o.ctx_ && entries_ == o.entries_;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length does not match the matrix shape");
  std::vector<FieldElement> out(rows_, ctx_->zero());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += cell(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ctx_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.cell(j, i) = cell(i, j);
  return out;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = rows_;
  Matrix a = *this;
  Matrix inv = identity(ctx_, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.cell(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a.cell(col, j), a.cell(pivot, j));
      std::swap(inv.cell(col, j), inv.cell(pivot, j));
    }
    FieldElement s = a.cell(col, col).inv();
    for (int j = 0; j < n; ++j) {
      a.cell(col, j) *= s;
      inv.cell(col, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.cell(r, col).is_zero()) continue;
      FieldElement f = a.cell(r, col);
      for (int j = 0; j < n; ++j) {
        a.cell(r, j) -= f * a.cell(col, j);
        inv.cell(r, j) -= f * inv.cell(col, j);
      }
    }
  }
  return inv;
}

int Matrix::rank() const {
  Matrix a = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (!a.cell(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(a.cell(rank, j), a.cell(pivot, j));
    FieldElement s = a.cell(rank, col).inv();
    for (int j = 0; j < cols_; ++j) a.cell(rank, j) *= s;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || a.cell(r, col).is_zero()) continue;
      FieldElement f = a.cell(r, col);
      for (int j = 0; j < cols_; ++j) a.cell(r, j) -= f * a.cell(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

std::string Matrix::str() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += cell(i, j).str();
    }
    out += '\n';
  }
  return out;
}

Matrix Matrix::parse(const FieldCtxPtr& ctx, int rows, int cols, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<FieldElement> entries;
  entries.reserve(static_cast<size_t>(rows) * cols);
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    int col = 0;
    while (ls >> tok) {
      try {
        entries.push_back(ctx->parse(tok));
      } catch (const std::invalid_argument& e) {
        throw malformed_error(std::string("bad matrix entry: ") + e.what());
      }
      ++col;
    }
    if (col != cols) throw malformed_error("matrix row has wrong number of entries");
    ++row;
  }
  if (row != rows) throw malformed_error("matrix has wrong number of rows");
  return Matrix(ctx, rows, cols, std::move(entries));
}

Matrix solve_right(const Matrix& A, const Matrix& B) {
  require_same_ctx(A, B);
  if (A.cols() != B.cols())
    throw std::invalid_argument("solve_right: column counts must agree");
  // X*A = B  <=>  A^T X^T = B^T; eliminate the augmented [A^T | B^T]
  const int n = A.cols();   // equations
  const int m = A.rows();   // unknown columns of X^T
  const int r = B.rows();   // right-hand sides
  Matrix at = A.transpose();
  Matrix bt = B.transpose();
  std::vector<int> pivot_row(m, -1);
  int next = 0;
  for (int col = 0; col < m && next < n; ++col) {
    int pivot = -1;
    for (int i = next; i < n; ++i)
      if (!at.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != next)
      for (int j = 0; j < m; ++j) {
        FieldElement t = at.at(next, j);
        at.set(next, j, at.at(pivot, j));
        at.set(pivot, j, t);
      }
    if (pivot != next)
      for (int j = 0; j < r; ++j) {
        FieldElement t = bt.at(next, j);
        bt.set(next, j, bt.at(pivot, j));
        bt.set(pivot, j, t);
      }
    FieldElement s = at.at(next, col).inv();
    for (int j = 0; j < m; ++j) at.set(next, j, at.at(next, j) * s);
    for (int j = 0; j < r; ++j) bt.set(next, j, bt.at(next, j) * s);
    for (int i = 0; i < n; ++i) {
      if (i == next || at.at(i, col).is_zero()) continue;
      FieldElement f = at.at(i, col);
      for (int j = 0; j < m; ++j) at.set(i, j, at.at(i, j) - f * at.at(next, j));
      for (int j = 0; j < r; ++j) bt.set(i, j, bt.at(i, j) - f * bt.at(next, j));
    }
    pivot_row[col] = next;
    ++next;
  }
  for (int col = 0; col < m; ++col)
    if (pivot_row[col] < 0)
      throw std::invalid_argument("solve_right: underdetermined system (A lacks full row rank)");
  // leftover equations must be trivial
  for (int i = next; i < n; ++i)
    for (int j = 0; j < r; ++j)
      if (!bt.at(i, j).is_zero())
        throw std::invalid_argument("solve_right: inconsistent system");
  Matrix xt(A.ctx(), m, r);
  for (int col = 0; col < m; ++col)
    for (int j = 0; j < r; ++j) xt.set(col, j, bt.at(pivot_row[col], j));
  return xt.transpose();
}

Matrix random_invertible(int dim, const FieldCtxPtr& ctx, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  constexpr int kMaxTries = 10000;
  for (int t = 0; t < kMaxTries; ++t) {
    std::vector<FieldElement> entries;
    entries.reserve(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim * dim; ++i) entries.push_back(rng.element(ctx));
    Matrix cand(ctx, dim, dim, std::move(entries));
    if (cand.invertible()) return cand;
  }
  throw std::runtime_error("random invertible matrix sampling exceeded the retry cap");
}

}  // namespace hip
