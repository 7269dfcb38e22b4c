#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library: formulas are typed from their published closed forms and
// evaluated pointwise with plain GMP rationals.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

inline Q qp(const Q& x, int e) {
  Q r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

inline Q q(long n, long d = 1) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

/// Random nonzero rational with small numerator and denominator.
inline Q random_q(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  long n = 0;
  while (n == 0) n = num(rng);
  return q(n, den(rng));
}

// U3 form: x1^(2k-2) x2^2 dx1^2 + (x1^(k-1) x2 - 4 x1^(k-1) x2^(k+1) - x1^(2k-1) x2) dx1 dx2 + 4 x1^k x2^k dx2^2.
inline Q omega_u3(int k, const Q& x1, const Q& x2, const Q& d1, const Q& d2) {
  Q a0 = qp(x1, 2 * k - 2) * x2 * x2;
  Q a1 = qp(x1, k - 1) * x2 - 4 * qp(x1, k - 1) * qp(x2, k + 1) - qp(x1, 2 * k - 1) * x2;
  Q a2 = 4 * qp(x1, k) * qp(x2, k);
  return a0 * d1 * d1 + a1 * d1 * d2 + a2 * d2 * d2;
}

// U1 form with coordinates (x2, x3), without the x3^-(2k+3) factor.
inline Q omega_u1(int k, const Q& x2, const Q& x3, const Q& d2, const Q& d3) {
  Q a0 = 4 * qp(x2, k) * x3;
  Q a1 = -x2 * qp(x3, k) + x2 - 4 * qp(x2, k + 1);
  Q a2 = x2 * x2 * qp(x3, k - 1);
  return a0 * d2 * d2 + a1 * d2 * d3 + a2 * d3 * d3;
}

// U2 form with coordinates (x1, x3); `x3_power` is the exponent of x3 in the dx3^2 term.
inline Q omega_u2(int k, const Q& x1, const Q& x3, const Q& d1, const Q& d3, int x3_power) {
  Q a0 = qp(x1, 2 * k - 2) * x3;
  Q a1 = -qp(x1, 2 * k - 1) - qp(x1, k - 1) * qp(x3, k) + 4 * qp(x1, k - 1);
  Q a2 = qp(x1, k) * qp(x3, x3_power);
  return a0 * d1 * d1 + a1 * d1 * d3 + a2 * d3 * d3;
}

/// Chart change U1 -> U3 at (x2, x3) with tangent (d2, d3): compares
/// omega_u3(pullback) * x3^(2k+3) with omega_u1.
inline bool transition_u1_at(int k, const Q& x2, const Q& x3, const Q& d2, const Q& d3) {
  // U3 coordinates: u = 1/x3, v = x2/x3.
  Q u = 1 / x3;
  Q v = x2 / x3;
  Q du = -d3 / (x3 * x3);
  Q dv = d2 / x3 - x2 * d3 / (x3 * x3);
  return omega_u3(k, u, v, du, dv) * qp(x3, 2 * k + 3) == omega_u1(k, x2, x3, d2, d3);
}

inline bool transition_u2_at(int k, const Q& x1, const Q& x3, const Q& d1, const Q& d3, int x3_power) {
  // U3 coordinates: u = x1/x3, v = 1/x3.
  Q u = x1 / x3;
  Q v = 1 / x3;
  Q du = d1 / x3 - x1 * d3 / (x3 * x3);
  Q dv = -d3 / (x3 * x3);
  return omega_u3(k, u, v, du, dv) * qp(x3, 2 * k + 3) == omega_u2(k, x1, x3, d1, d3, x3_power);
}

/// A1^2 - 4 A0 A2 on U3.
inline Q discriminant_u3(int k, const Q& x1, const Q& x2) {
  Q a0 = qp(x1, 2 * k - 2) * x2 * x2;
  Q a1 = qp(x1, k - 1) * x2 - 4 * qp(x1, k - 1) * qp(x2, k + 1) - qp(x1, 2 * k - 1) * x2;
  Q a2 = 4 * qp(x1, k) * qp(x2, k);
  return a1 * a1 - 4 * a0 * a2;
}

inline Q q_value(int k, const Q& x1, const Q& x2) {
  return qp(x1, 2 * k) - 8 * qp(x1, k) * qp(x2, k) - 2 * qp(x1, k) + 16 * qp(x2, 2 * k) - 8 * qp(x2, k) + 1;
}

// Dense polynomials in alpha, low degree first.
using Dense = std::vector<Q>;

inline Dense dmul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, Q(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Dense dadd(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), Q(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline Dense dscale(Dense a, const Q& s) {
  for (auto& c : a) c *= s;
  return a;
}

inline void dtrim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense drem(Dense a, Dense m) {
  dtrim(a);
  dtrim(m);
  while (a.size() >= m.size()) {
    Q f = a.back() / m.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= f * m[i];
    dtrim(a);
  }
  return a;
}

/// The C_alpha coefficients of X1, X2, X3 (X_i = x_i^k) as polynomials in alpha:
/// (a-3)(a-2)/2, -((a-2)^2-1), (a-2)(a-1)/2.
inline std::vector<Dense> calpha_coeffs() {
  return {Dense{q(3), q(-5, 2), q(1, 2)}, Dense{q(-3), q(4), q(-1)}, Dense{q(1), q(-3, 2), q(1, 2)}};
}

/// Quadratic in alpha whose roots are the C_alpha through [x1:x2:x3].
inline Dense alpha_quadratic(int k, const Q& x1, const Q& x2, const Q& x3) {
  auto c = calpha_coeffs();
  Dense r = dadd(dadd(dscale(c[0], qp(x1, k)), dscale(c[1], qp(x2, k))), dscale(c[2], qp(x3, k)));
  dtrim(r);
  return r;
}

/// The integrality criterion of C_alpha evaluated at the affine point (x1, x2),
/// reduced modulo the alpha-quadratic of that point. Zero means the criterion
/// vanishes on every C_alpha through the point.
inline Dense calpha_criterion_residue(int k, const Q& x1, const Q& x2) {
  auto c = calpha_coeffs();
  // g = c0 x1^k + c1 x2^k + c2; g_u = k c0 x1^(k-1), g_v = k c1 x2^(k-1).
  Dense gu = dscale(c[0], k * qp(x1, k - 1));
  Dense gv = dscale(c[1], k * qp(x2, k - 1));
  Q a0 = qp(x1, 2 * k - 2) * x2 * x2;
  Q a1 = qp(x1, k - 1) * x2 - 4 * qp(x1, k - 1) * qp(x2, k + 1) - qp(x1, 2 * k - 1) * x2;
  Q a2 = 4 * qp(x1, k) * qp(x2, k);
  Dense r = dadd(dadd(dscale(dmul(gv, gv), a0), dscale(dmul(gu, gv), -a1)), dscale(dmul(gu, gu), a2));
  return drem(r, alpha_quadratic(k, x1, x2, Q(1)));
}

/// Number of catalog curves (C_alpha counted with root multiplicity, plus C_inf
/// when the alpha-degree drops) through a point off the discriminant.
inline int through_count(int k, const Q& x1, const Q& x2, const Q& x3) {
  Dense a = alpha_quadratic(k, x1, x2, x3);
  int deg = static_cast<int>(a.size()) - 1;
  bool c_inf = qp(x1, k) - 2 * qp(x2, k) + qp(x3, k) == 0;
  return deg + (c_inf ? 1 : 0);
}

/// Rank by plain Gaussian elimination over Q.
inline int rank(std::vector<std::vector<Q>> m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      Q f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Jacobian of f_i = x_i^k - 3x_{i+1}^k + 3x_{i+2}^k - x_{i+3}^k at a rational point.
inline std::vector<std::vector<Q>> jacobian_f(int k, const std::vector<Q>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<Q>> j(static_cast<std::size_t>(n - 3), std::vector<Q>(static_cast<std::size_t>(n), Q(0)));
  const int coef[4] = {1, -3, 3, -1};
  for (int i = 0; i < n - 3; ++i)
    for (int t = 0; t < 4; ++t) j[i][i + t] = coef[t] * k * qp(x[i + t], k - 1);
  return j;
}

inline bool on_surface(int k, const std::vector<Q>& x) {
  for (std::size_t i = 0; i + 3 < x.size(); ++i)
    if (qp(x[i], k) - 3 * qp(x[i + 1], k) + 3 * qp(x[i + 2], k) != qp(x[i + 3], k)) return false;
  return true;
}

/// Genus of a smooth complete intersection of the given degrees in P^m:
/// 1/2 (prod d)(sum d - m - 1) + 1.
inline Q ci_genus(const std::vector<int>& degrees, int m) {
  Z prod = 1;
  long sum = 0;
  for (int d : degrees) {
    prod *= d;
    sum += d;
  }
  Q r(prod * (sum - m - 1), 2);
  r.canonicalize();
  return r + 1;
}

/// k = 2: x_i = +-(a i + b) iff the interpolating quadratic of the squares is
/// the square of a rational linear polynomial.
inline bool square_polynomial_trivial(const std::vector<Q>& xs) {
  std::vector<Q> p;
  for (const auto& x : xs) p.push_back(x * x);
  Q d = p[2] - 2 * p[1] + p[0];
  for (std::size_t i = 3; i < p.size(); ++i)
    if (p[i] - 2 * p[i - 1] + p[i - 2] != d) return false;
  Q a = d / 2;
  Q b = p[1] - p[0] - 3 * a;
  Q c = p[0] - a - b;
  if (b * b != 4 * a * c) return false;
  auto is_square = [](const Q& r) {
    if (sgn(r) < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) && mpz_perfect_square_p(r.get_den().get_mpz_t());
  };
  if (a != 0) return is_square(a);
  return is_square(c);
}

struct IntSeq {
  std::vector<long> x;
};

/// All nonnegative integer quadruples with |x| <= h whose squares have second difference d.
inline std::vector<IntSeq> brute_square_quadruples(long h, long d) {
  std::vector<IntSeq> out;
  for (long a = 0; a <= h; ++a)
    for (long b = 0; b <= h; ++b)
      for (long c = 0; c <= h; ++c) {
        if (c * c - 2 * b * b + a * a != d) continue;
        for (long e = 0; e <= h; ++e)
          if (e * e - 2 * c * c + b * b == d) out.push_back({{a, b, c, e}});
      }
  return out;
}

struct IntYap {
  long u, v, b;
  std::vector<long> x;
};

/// Integer y-APs y_j = u + v j (j = 1..len) on y^2 = x^3 + b with integer x,
/// |u| <= ymax, 1 <= v <= ymax and |x_j| <= xmax.
inline std::vector<IntYap> brute_integer_yaps(int len, long ymax, long xmax) {
  std::vector<IntYap> out;
  for (long u = -ymax; u <= ymax; ++u)
    for (long v = 1; v <= ymax; ++v)
      for (long x1 = -xmax; x1 <= xmax; ++x1) {
        long y1 = u + v;
        long b = y1 * y1 - x1 * x1 * x1;
        if (b == 0) continue;
        std::vector<long> xs{x1};
        for (int j = 2; j <= len; ++j) {
          long y = u + v * j;
          long t = y * y - b;
          long r = 0;
          bool found = false;
          for (long c = -xmax; c <= xmax && !found; ++c)
            if (c * c * c == t) {
              r = c;
              found = true;
            }
          if (!found) break;
          xs.push_back(r);
        }
        if (static_cast<int>(xs.size()) == len) out.push_back({u, v, b, xs});
      }
  return out;
}

}  // namespace oracle
