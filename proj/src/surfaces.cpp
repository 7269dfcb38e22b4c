#include "powerseq/surfaces.hpp"

#include <random>
#include <stdexcept>

namespace powerseq {

SurfaceId::SurfaceId(int n_, int k_) : n(n_), k(k_) {
  if (n < 3) throw std::invalid_argument("surface needs n >= 3");
  if (k < 2) throw std::invalid_argument("surface needs k >= 2");
}

ProjPoint::ProjPoint(std::vector<RadicalElem> coords) : coords_(std::move(coords)) {
  bool all_zero = true;
  for (const auto& c : coords_) all_zero = all_zero && c.is_zero();
  if (coords_.empty() || all_zero) throw std::invalid_argument("projective point with all coordinates zero");
  normalize();
}

ProjPoint ProjPoint::from_rats(const std::vector<Rat>& coords) {
  std::vector<RadicalElem> c;
  for (const auto& x : coords) c.emplace_back(x);
  return ProjPoint(std::move(c));
}

ProjPoint ProjPoint::from_ints(const std::vector<long>& coords) {
  std::vector<RadicalElem> c;
  for (long x : coords) c.emplace_back(x);
  return ProjPoint(std::move(c));
}

std::optional<std::vector<Rat>> ProjPoint::rational() const {
  std::vector<Rat> out;
  for (const auto& c : coords_) {
    auto r = c.as_rational();
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

std::vector<Rat> ProjPoint::powers(int k) const {
  std::vector<Rat> out;
  for (const auto& c : coords_) {
    auto r = pow(c, static_cast<unsigned>(k)).as_rational();
    if (!r) throw std::domain_error("coordinate with an irrational k-th power");
    out.push_back(*r);
  }
  return out;
}

ProjPoint ProjPoint::scaled(const Rat& lambda) const {
  if (is_zero(lambda)) throw std::invalid_argument("scaling by zero");
  std::vector<RadicalElem> c;
  for (const auto& x : coords_) c.push_back(x * RadicalElem(lambda));
  return ProjPoint(std::move(c));
}

ProjPoint ProjPoint::prefix(int m) const {
  return ProjPoint(std::vector<RadicalElem>(coords_.begin(), coords_.begin() + m));
}

void ProjPoint::normalize() {
  auto r = rational();
  if (!r) return;
  Integer l = 1;
  for (const auto& x : *r) l = lcm(l, Integer(x.get_den()));
  Integer g = 0;
  for (const auto& x : *r) g = gcd(g, Integer(x.get_num() * (l / x.get_den())));
  int sign = 1;
  for (const auto& x : *r) {
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  }
  for (std::size_t i = 0; i < r->size(); ++i) {
    const Rat& x = (*r)[i];
    coords_[i] = RadicalElem(Rat(Integer(x.get_num() * (l / x.get_den()) / g * sign)));
  }
}

std::string to_text(const ProjPoint& p) {
  std::string out = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ":";
    if (auto r = p[i].as_rational()) {
      out += r->get_str();
    } else {
      out += "(" + to_text(p[i]) + " | " + tower_text(p[i]) + ")";
    }
  }
  return out + "]";
}

IdealMatrices ideal_equality_matrices(int n, int k) {
  const RatMatrix f = generator_forms(n, Basis::f);
  const RatMatrix g = generator_forms(n, Basis::g);
  const int m = n - 3;
  std::vector<int> rows(static_cast<std::size_t>(m));
  std::vector<int> tail(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    rows[static_cast<std::size_t>(i)] = i;
    tail[static_cast<std::size_t>(i)] = i + 3;
  }
  // Every generator has coefficient -1 on its own y_{i+3}, and the f-block on
  // y4..yn is invertible, so T is determined by those columns.
  const auto f_tail_inv = inverse(f.submatrix(rows, tail));
  if (!f_tail_inv) throw std::logic_error("ideal_equality_matrices: singular f block");
  const RatMatrix t = g.submatrix(rows, tail) * *f_tail_inv;
  const auto b = inverse(t);
  if (!b) throw std::logic_error("ideal_equality_matrices: T is singular");

  IdealMatrices out;
  out.t = to_int_matrix(t);
  out.b = to_int_matrix(*b);
  out.verified_linear = t * f == g && *b * g == f;

  const auto fp = generators(n, k, Basis::f);
  const auto gp = generators(n, k, Basis::g);
  bool poly_ok = true;
  for (int i = 0; i < m; ++i) {
    Poly lhs(x_vars(n));
    Poly back(x_vars(n));
    for (int j = 0; j < m; ++j) {
      lhs += fp[static_cast<std::size_t>(j)] * t(i, j);
      back += gp[static_cast<std::size_t>(j)] * (*b)(i, j);
    }
    poly_ok = poly_ok && lhs == gp[static_cast<std::size_t>(i)] && back == fp[static_cast<std::size_t>(i)];
  }
  out.verified_polynomial = poly_ok;

  bool tri = true;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) tri = tri && out.t(i, j) == (i == j ? 1 : 0);
  }
  out.lower_unitriangular = tri;
  return out;
}

namespace {

void require_size(const ProjPoint& p, const SurfaceId& s) {
  if (p.size() != s.n) throw std::invalid_argument("point length does not match the surface");
}

}  // namespace

bool membership(const ProjPoint& p, const SurfaceId& s) {
  require_size(p, s);
  if (s.n == 3) return true;
  const RatMatrix f = generator_forms(s.n, Basis::f);
  std::vector<Rat> y;
  try {
    y = p.powers(s.k);
  } catch (const std::domain_error&) {
    // Coordinates sharing one tower: evaluate the forms in that tower.
    for (int r = 0; r < f.rows(); ++r) {
      RadicalElem acc(0);
      for (int j = 0; j < s.n; ++j) acc += RadicalElem(f(r, j)) * pow(p[j], static_cast<unsigned>(s.k));
      if (!acc.is_zero()) return false;
    }
    return true;
  }
  for (int r = 0; r < f.rows(); ++r) {
    Rat acc = 0;
    for (int j = 0; j < s.n; ++j) acc += f(r, j) * y[static_cast<std::size_t>(j)];
    if (!is_zero(acc)) return false;
  }
  return true;
}

bool no_three_zeros(const ProjPoint& p, const SurfaceId& s) {
  if (!membership(p, s)) throw std::invalid_argument("no_three_zeros: point is not on the surface");
  int zeros = 0;
  for (int i = 0; i < p.size(); ++i) zeros += p.is_zero_at(i) ? 1 : 0;
  return zeros < 3;
}

std::vector<ProjPoint> lift_point(const ProjPoint& p, int k, bool radical) {
  const SurfaceId below(p.size(), k);
  if (!membership(p, below)) throw std::invalid_argument("lift_point: point is not on X_{n-1,k}");
  const int n = p.size() + 1;
  const std::vector<Rat> c = power_relation(n);
  Rat rhs = 0;
  for (int i = 0; i < 3; ++i) {
    auto yi = pow(p[i], static_cast<unsigned>(k)).as_rational();
    if (!yi) throw std::domain_error("lift_point: irrational k-th power in the first three coordinates");
    rhs += c[static_cast<std::size_t>(i)] * *yi;
  }
  auto extend = [&p](const RadicalElem& last) {
    std::vector<RadicalElem> coords = p.coords();
    coords.push_back(last);
    return ProjPoint(std::move(coords));
  };
  std::vector<ProjPoint> out;
  if (is_zero(rhs)) {
    out.push_back(extend(RadicalElem(0)));
    return out;
  }
  if (auto root = exact_root(rhs, static_cast<unsigned>(k))) {
    out.push_back(extend(RadicalElem(*root)));
    if (k % 2 == 0) out.push_back(extend(RadicalElem(Rat(-*root))));
    return out;
  }
  if (!radical) return out;
  const RadicalElem beta = RadicalElem::generator(make_tower(k, {rhs}), 0);
  out.push_back(extend(beta));
  if (k % 2 == 0) out.push_back(extend(-beta));
  return out;
}

ProjPoint project(const ProjPoint& p, const SurfaceId& s) {
  if (s.n < 4) throw std::invalid_argument("project: needs n >= 4");
  if (!membership(p, s)) throw std::invalid_argument("project: point is not on the surface");
  return p.prefix(s.n - 1);
}

JacobianReport jacobian_rank(const ProjPoint& p, const SurfaceId& s) {
  if (!membership(p, s)) throw std::invalid_argument("jacobian_rank: point is not on the surface");
  const int n = s.n;
  const int k = s.k;
  const IntMatrix coeff = to_int_matrix(generator_forms(n, Basis::g));
  // d g_i / d x_j = C_ij * k x_j^(k-1): the rank is that of C on the nonzero coordinates.
  std::vector<int> nonzero;
  for (int j = 0; j < n; ++j) {
    if (!p.is_zero_at(j)) nonzero.push_back(j);
  }
  std::vector<int> all_rows(static_cast<std::size_t>(n - 3));
  for (int i = 0; i < n - 3; ++i) all_rows[static_cast<std::size_t>(i)] = i;
  const RankProfile prof = bareiss_rank(coeff.submatrix(all_rows, nonzero));

  JacobianReport rep{p, prof.rank, n - 3, prof.rows, {}, 0, std::nullopt};
  for (int c : prof.cols) rep.minor_cols.push_back(nonzero[static_cast<std::size_t>(c)]);
  rep.coefficient_det = bareiss_det(coeff.submatrix(rep.minor_rows, rep.minor_cols));

  if (auto r = p.rational()) {
    RatMatrix jac(n - 3, n);
    for (int i = 0; i < n - 3; ++i) {
      for (int j = 0; j < n; ++j) {
        jac(i, j) = Rat(coeff(i, j)) * k * rat_pow((*r)[static_cast<std::size_t>(j)], static_cast<unsigned>(k - 1));
      }
    }
    const RankProfile direct = rank_profile(jac);
    if (direct.rank != rep.rank) throw std::logic_error("jacobian_rank: factored and direct ranks differ");
    rep.minor_det = determinant(jac.submatrix(rep.minor_rows, rep.minor_cols));
    Rat expect = Rat(rep.coefficient_det);
    for (int j : rep.minor_cols) expect *= k * rat_pow((*r)[static_cast<std::size_t>(j)], static_cast<unsigned>(k - 1));
    if (*rep.minor_det != expect) throw std::logic_error("jacobian_rank: minor factorization mismatch");
  }
  return rep;
}

int canonical_degree(const SurfaceId& s) { return s.k * (s.n - 3) - s.n; }

bool general_type(const SurfaceId& s) { return s.n * (s.k - 1) > 3 * s.k; }

namespace {

Rat half_plus_one(const Integer& x) {
  Rat r(x, 2);
  r.canonicalize();
  return r + 1;
}

}  // namespace

Rat genus_ci(const std::vector<int>& degrees, int ambient) {
  if (degrees.empty()) throw std::invalid_argument("genus_ci: empty degree list");
  Integer prod = 1;
  long sum = 0;
  for (int d : degrees) {
    prod *= d;
    sum += d;
  }
  return half_plus_one(prod * (sum - ambient));
}

std::string to_text(GenusType t) {
  switch (t) {
    case GenusType::a:
      return "a";
    case GenusType::a_prime:
      return "a'";
    case GenusType::b:
      return "b";
    case GenusType::c:
      return "c";
    case GenusType::d:
      return "d";
    case GenusType::e:
      return "e";
  }
  return "?";
}

std::optional<GenusType> parse_genus_type(const std::string& s) {
  for (GenusType t : {GenusType::a, GenusType::a_prime, GenusType::b, GenusType::c, GenusType::d, GenusType::e}) {
    if (to_text(t) == s) return t;
  }
  if (s == "a_prime") return GenusType::a_prime;
  return std::nullopt;
}

bool applicable(GenusType t, int k) {
  if (t == GenusType::d) return k % 2 == 0;
  if (t == GenusType::e) return k % 2 == 1;
  return true;
}

Rat genus_of_type(GenusType t, const SurfaceId& s) {
  if (s.n < 4) throw std::invalid_argument("genus_of_type: needs n >= 4");
  if (!applicable(t, s.k)) throw std::invalid_argument("genus_of_type: type does not apply to this parity of k");
  const int n = s.n;
  const int k = s.k;
  switch (t) {
    case GenusType::a:
    case GenusType::b:
    case GenusType::e:
      return half_plus_one(int_pow(k, static_cast<unsigned>(n - 2)) * (n * (k - 1) - 2 * k));
    case GenusType::a_prime:
    case GenusType::c:
      return half_plus_one(int_pow(k, static_cast<unsigned>(n - 3)) * (n * (k - 1) - 3 * k + 1));
    case GenusType::d:
      return half_plus_one(int_pow(k / 2, static_cast<unsigned>(n - 2)) * (n * k / 2 - k - n));
  }
  throw std::logic_error("genus_of_type: unreachable");
}

int threshold_n(int k, int g) {
  if (k < 2) throw std::invalid_argument("threshold_n: k must be >= 2");
  if (g < 0) throw std::invalid_argument("threshold_n: g must be >= 0");
  if (k == 2) return threshold_n_k2_max_form(g);
  // n > (4 max(g,1) + 1)/(k-1) + 5  <=>  (n - 5)(k - 1) > 4 max(g,1) + 1.
  const int bound = 4 * std::max(g, 1) + 1;
  int n = 5;
  while ((n - 5) * (k - 1) <= bound) ++n;
  return n;
}

int threshold_n_k2_max_form(int g) { return std::max(10, 4 * g + 6) + 1; }

int threshold_n_k2_fixed_form() { return 11; }

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::vector<ProjPoint> sample_points(const SurfaceId& s, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ProjPoint> out;
  while (static_cast<int>(out.size()) < count) {
    if (s.k == 2 && draw(rng, 0, 3) == 0) {
      // Squares of an arithmetic progression.
      const long a = draw(rng, -9, 9);
      const long b = draw(rng, -9, 9);
      std::vector<long> c;
      for (int i = 1; i <= s.n; ++i) c.push_back((draw(rng, 0, 1) ? 1 : -1) * (a * i + b));
      bool all_zero = true;
      for (long x : c) all_zero = all_zero && x == 0;
      if (!all_zero) out.push_back(ProjPoint::from_ints(c));
      continue;
    }
    std::vector<long> base{draw(rng, -9, 9), draw(rng, -9, 9), draw(rng, -9, 9)};
    if (draw(rng, 0, 7) == 0) base[static_cast<std::size_t>(draw(rng, 0, 2))] = 0;
    if (base[0] == 0 && base[1] == 0 && base[2] == 0) continue;
    ProjPoint p = ProjPoint::from_ints(base);
    for (int m = 4; m <= s.n; ++m) {
      const auto lifts = lift_point(p, s.k, true);
      p = lifts[static_cast<std::size_t>(draw(rng, 0, static_cast<long>(lifts.size()) - 1))];
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace powerseq
