#include "powerseq/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace powerseq {

RankProfile bareiss_rank(const IntMatrix& input) {
  IntMatrix a = input;
  const int rows = a.rows();
  const int cols = a.cols();
  std::vector<int> order(static_cast<std::size_t>(rows));
  std::iota(order.begin(), order.end(), 0);
  RankProfile out;
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(a(i, c)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
      std::swap(order[static_cast<std::size_t>(piv)], order[static_cast<std::size_t>(r)]);
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    out.cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rows.assign(order.begin(), order.begin() + r);
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

Integer bareiss_det(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("bareiss_det: matrix not square");
  IntMatrix a = input;
  const int n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a(k, k)) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i) {
        if (sgn(a(i, k)) != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RankProfile rank_profile(const RatMatrix& input) {
  RatMatrix a = input;
  const int rows = a.rows();
  const int cols = a.cols();
  std::vector<int> order(static_cast<std::size_t>(rows));
  std::iota(order.begin(), order.end(), 0);
  RankProfile out;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
      std::swap(order[static_cast<std::size_t>(piv)], order[static_cast<std::size_t>(r)]);
    }
    for (int i = r + 1; i < rows; ++i) {
      if (is_zero(a(i, c))) continue;
      const Rat f = a(i, c) / a(r, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rows.assign(order.begin(), order.begin() + r);
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = input.rows();
  RatMatrix a = input;
  RatMatrix inv = RatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(a(piv, j), a(c, j));
      std::swap(inv(piv, j), inv(c, j));
    }
    const Rat s = 1 / a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      const Rat f = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Rat determinant(const RatMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
  RatMatrix a = input;
  const int n = a.rows();
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Rat f = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

IntMatrix to_int_matrix(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw std::domain_error("to_int_matrix: non-integral entry");
      out(i, j) = m(i, j).get_num();
    }
  }
  return out;
}

RatMatrix to_rat_matrix(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  }
  return out;
}

}  // namespace powerseq
