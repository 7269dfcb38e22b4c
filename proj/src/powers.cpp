#include "powerseq/powers.hpp"

#include <stdexcept>

namespace powerseq {

RatMatrix generator_forms(int n, Basis basis) {
  if (n < 4) throw std::invalid_argument("generators need n >= 4");
  RatMatrix m(n - 3, n);
  for (int i = 1; i <= n - 3; ++i) {
    const int r = i - 1;
    if (basis == Basis::f) {
      m(r, i - 1) = 1;
      m(r, i) = -3;
      m(r, i + 1) = 3;
      m(r, i + 2) = -1;
    } else {
      m(r, 0) = i * (i + 1) / 2;
      m(r, 1) = -((i + 1) * (i + 1) - 1);
      m(r, 2) = (i + 1) * (i + 2) / 2;
      m(r, i + 2) -= 1;
    }
  }
  return m;
}

std::vector<Poly> generators(int n, int k, Basis basis) {
  if (k < 1) throw std::invalid_argument("generators need k >= 1");
  const RatMatrix m = generator_forms(n, basis);
  const VarList vars = x_vars(n);
  std::vector<Poly> out;
  for (int r = 0; r < m.rows(); ++r) {
    Poly p(vars);
    for (int j = 0; j < n; ++j) {
      Exponents e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = k;
      p.add_term(e, m(r, j));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Rat> power_relation(int m) {
  if (m < 1) throw std::invalid_argument("power_relation: m >= 1");
  if (m <= 3) {
    std::vector<Rat> c(3, Rat(0));
    c[static_cast<std::size_t>(m - 1)] = 1;
    return c;
  }
  // g_{m-3} solved for y_m.
  const int i = m - 3;
  return {Rat(i * (i + 1) / 2), Rat(-((i + 1) * (i + 1) - 1)), Rat((i + 1) * (i + 2) / 2)};
}

Poly scale_exponents(const Poly& p, int factor) {
  Poly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    for (int& x : f) x *= factor;
    out.add_term(f, c);
  }
  return out;
}

Poly reduce_linear_in_powers(const Poly& p, int n, int k, Basis basis) {
  const VarList vars = x_vars(n);
  const Poly x = p.promoted(vars);
  Poly y(vars);
  for (const auto& [e, c] : x.terms()) {
    Exponents f = e;
    for (int& v : f) {
      if (v % k != 0) throw std::invalid_argument("reduce_linear_in_powers: monomial is not in x_i^k");
      v /= k;
    }
    y.add_term(f, c);
  }

  // Reduced row echelon form with columns ordered y_n, ..., y_1, so that the
  // pivots are the highest-index variables.
  RatMatrix m = generator_forms(n, basis);
  const int rows = m.rows();
  std::vector<int> pivot_var;
  int r = 0;
  for (int col = n - 1; col >= 0 && r < rows; --col) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!is_zero(m(i, col))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(r, j));
    const Rat s = 1 / m(r, col);
    for (int j = 0; j < n; ++j) m(r, j) *= s;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, col))) continue;
      const Rat f = m(i, col);
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_var.push_back(col);
    ++r;
  }

  std::vector<Poly> images;
  for (int j = 0; j < n; ++j) images.push_back(Poly::variable(vars, vars[static_cast<std::size_t>(j)]));
  for (int i = 0; i < r; ++i) {
    const int pv = pivot_var[static_cast<std::size_t>(i)];
    Poly img(vars);
    for (int j = 0; j < n; ++j) {
      if (j == pv || is_zero(m(i, j))) continue;
      img -= Poly::variable(vars, vars[static_cast<std::size_t>(j)]) * m(i, j);
    }
    images[static_cast<std::size_t>(pv)] = img;
  }
  return scale_exponents(compose(y, images, vars), k);
}

}  // namespace powerseq
