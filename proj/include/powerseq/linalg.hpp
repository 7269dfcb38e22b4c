#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powerseq/rational.hpp"

namespace powerseq {

/// Dense row-major matrix over an exact scalar.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
    }
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    }
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rat>;

/// Rank with pivot rows (original indices) and pivot columns of a
/// nonvanishing maximal minor.
struct RankProfile {
  int rank = 0;
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Fraction-free (Bareiss) elimination over Z.
RankProfile bareiss_rank(const IntMatrix& m);
/// Determinant of a square integer matrix by Bareiss elimination.
Integer bareiss_det(const IntMatrix& m);

/// Gaussian elimination over Q.
RankProfile rank_profile(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
Rat determinant(const RatMatrix& m);

IntMatrix to_int_matrix(const RatMatrix& m);  // throws if an entry is not integral
RatMatrix to_rat_matrix(const IntMatrix& m);

}  // namespace powerseq
