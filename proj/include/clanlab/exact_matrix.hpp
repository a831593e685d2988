#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clanlab/errors.hpp"
#include "clanlab/qsqrt2.hpp"

namespace clanlab {

/// Dense matrix over Q(sqrt 2); rank and inverse use exact Gaussian
/// elimination, so every predicate built on top is exact.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }

  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  QSqrt2& at(int i, int j) {
    check(i, j);
    return entries_[static_cast<size_t>(i - 1) * static_cast<size_t>(cols_) + static_cast<size_t>(j - 1)];
  }
  const QSqrt2& at(int i, int j) const {
    check(i, j);
    return entries_[static_cast<size_t>(i - 1) * static_cast<size_t>(cols_) + static_cast<size_t>(j - 1)];
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  ExactMatrix operator-() const {
    ExactMatrix m(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw SizeMismatch("matrix product shape");
    ExactMatrix m(a.rows_, b.cols_);
    for (int i = 1; i <= a.rows_; ++i)
      for (int k = 1; k <= a.cols_; ++k) {
        const QSqrt2& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 1; j <= b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
      }
    return m;
  }

  bool operator==(const ExactMatrix&) const = default;

  ExactMatrix block(int row0, int col0, int height, int width) const {
    ExactMatrix m(height, width);
    for (int i = 1; i <= height; ++i)
      for (int j = 1; j <= width; ++j) m.at(i, j) = at(row0 + i - 1, col0 + j - 1);
    return m;
  }

  /// Columns 1..count as a rows() x count matrix.
  ExactMatrix left_columns(int count) const { return block(1, 1, rows_, count); }

  static ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_) throw SizeMismatch("hconcat row count");
    ExactMatrix m(a.rows_, a.cols_ + b.cols_);
    for (int i = 1; i <= a.rows_; ++i) {
      for (int j = 1; j <= a.cols_; ++j) m.at(i, j) = a.at(i, j);
      for (int j = 1; j <= b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
  }

  int rank() const {
    ExactMatrix m = *this;
    int rank = 0;
    int pivot_row = 1;
    for (int col = 1; col <= cols_ && pivot_row <= rows_; ++col) {
      int sel = 0;
      for (int r = pivot_row; r <= rows_; ++r)
        if (!m.at(r, col).is_zero()) {
          sel = r;
          break;
        }
      if (sel == 0) continue;
      m.swap_rows(sel, pivot_row);
      QSqrt2 inv = m.at(pivot_row, col).inverse();
      for (int r = pivot_row + 1; r <= rows_; ++r) {
        if (m.at(r, col).is_zero()) continue;
        QSqrt2 factor = m.at(r, col) * inv;
        for (int c2 = col; c2 <= cols_; ++c2) m.at(r, c2) -= factor * m.at(pivot_row, c2);
      }
      ++pivot_row;
      ++rank;
    }
    return rank;
  }

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  ExactMatrix inverse() const {
    if (rows_ != cols_) throw NotSquare("inverse of a non-square matrix");
    ExactMatrix m = *this;
    ExactMatrix inv = identity(rows_);
    for (int col = 1; col <= cols_; ++col) {
      int sel = 0;
      for (int r = col; r <= rows_; ++r)
        if (!m.at(r, col).is_zero()) {
          sel = r;
          break;
        }
      if (sel == 0) throw SingularMatrix("matrix is singular");
      m.swap_rows(sel, col);
      inv.swap_rows(sel, col);
      QSqrt2 pivot_inv = m.at(col, col).inverse();
      for (int c2 = 1; c2 <= cols_; ++c2) {
        m.at(col, c2) *= pivot_inv;
        inv.at(col, c2) *= pivot_inv;
      }
      for (int r = 1; r <= rows_; ++r) {
        if (r == col || m.at(r, col).is_zero()) continue;
        QSqrt2 factor = m.at(r, col);
        for (int c2 = 1; c2 <= cols_; ++c2) {
          m.at(r, c2) -= factor * m.at(col, c2);
          inv.at(r, c2) -= factor * inv.at(col, c2);
        }
      }
    }
    return inv;
  }

  bool is_upper_triangular() const {
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j < i && j <= cols_; ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (int i = 1; i <= rows_; ++i) {
      for (int j = 1; j <= cols_; ++j) {
        if (j > 1) out += ' ';
        out += at(i, j).str();
      }
      out += '\n';
    }
    return out;
  }

 private:
  void check(int i, int j) const {
    if (i < 1 || j < 1 || i > rows_ || j > cols_)
      throw IndexOutOfRange("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 1; j <= cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  int rows_;
  int cols_;
  std::vector<QSqrt2> entries_;
};

}  // namespace clanlab
