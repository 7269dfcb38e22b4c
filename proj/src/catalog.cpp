#include "powerseq/catalog.hpp"

#include <algorithm>

namespace powerseq {

namespace {

std::string sign_text(int e) { return e > 0 ? "+1" : "-1"; }

void require_sign(int e) {
  if (e != 1 && e != -1) throw CatalogError("signs must be +1 or -1");
}

Poly power_term(const VarList& vars, int var, int e, const Rat& c) {
  Exponents ex(vars.size(), 0);
  ex[static_cast<std::size_t>(var)] = e;
  return Poly::monomial(vars, ex, c);
}

// (alpha-3)(alpha-2)/2, -((alpha-2)^2-1), (alpha-2)(alpha-1)/2.
std::array<Rat, 3> calpha_coeffs(const Rat& a) {
  return {(a - 3) * (a - 2) / 2, -((a - 2) * (a - 2) - 1), (a - 2) * (a - 1) / 2};
}

}  // namespace

std::string to_text(const CurveSpec& c) {
  struct Visitor {
    int k;
    std::string operator()(const Calpha& x) const {
      if (std::holds_alternative<Calpha::Symbolic>(x.alpha)) return "C_alpha(alpha)";
      if (auto r = std::get_if<Rat>(&x.alpha)) return "C_alpha(" + to_text(*r) + ")";
      const auto& q = std::get<Calpha::QuadraticRoot>(x.alpha);
      return "C_alpha(root " + std::to_string(q.index) + " of " + to_text(q.minpoly, "alpha") + ")";
    }
    std::string operator()(const Cinfinity&) const { return "C_inf"; }
    std::string operator()(const Axis& x) const { return "axis(x" + std::to_string(x.i) + ")"; }
    std::string operator()(const TypeIV& x) const {
      return "typeIV(" + sign_text(x.e2) + "," + sign_text(x.e3) + ")";
    }
    std::string operator()(const TypeV&) const { return "typeV"; }
    std::string operator()(const EpsilonCurve& x) const {
      std::string s = "C_eps(";
      for (std::size_t i = 0; i < x.eps.size(); ++i) s += (i ? "," : "") + sign_text(x.eps[i]);
      return s + ")";
    }
    std::string operator()(const PullbackRn& x) const { return "R_" + std::to_string(x.i); }
  };
  return std::visit(Visitor{c.k}, c.kind);
}

bool operator==(const CurveSpec& a, const CurveSpec& b) {
  return a.k == b.k && a.n == b.n && to_text(a) == to_text(b);
}

CurveSpec calpha(const Rat& alpha, int k) { return {Calpha{alpha}, k, 3}; }
CurveSpec calpha_symbolic(int k) { return {Calpha{Calpha::Symbolic{}}, k, 3}; }

PolyA calpha_equation(int k) {
  const VarList v = x_vars(3);
  const RatFunc a = RatFunc::alpha();
  const RatFunc c1 = (a - RatFunc(3)) * (a - RatFunc(2)) / RatFunc(2);
  const RatFunc c2 = -((a - RatFunc(2)) * (a - RatFunc(2)) - RatFunc(1));
  const RatFunc c3 = (a - RatFunc(2)) * (a - RatFunc(1)) / RatFunc(2);
  PolyA p(v);
  p.add_term({k, 0, 0}, c1);
  p.add_term({0, k, 0}, c2);
  p.add_term({0, 0, k}, c3);
  return p;
}

std::vector<Poly> curve_equations(const CurveSpec& spec) {
  const int k = spec.k;
  if (k < 2) throw CatalogError("catalog curves need k >= 2");
  const VarList v3 = x_vars(3);
  if (auto c = std::get_if<Calpha>(&spec.kind)) {
    if (std::holds_alternative<Calpha::Symbolic>(c->alpha)) {
      throw CatalogError("symbolic C_alpha has no equation over Q; use calpha_equation");
    }
    if (std::holds_alternative<Calpha::QuadraticRoot>(c->alpha)) {
      throw CatalogError("C_alpha with an irrational parameter has no equation over Q");
    }
    const Rat a = std::get<Rat>(c->alpha);
    if (a == 1 || a == 2 || a == 3) throw CatalogError("alpha in {1,2,3} gives a coordinate axis counted k times");
    const auto co = calpha_coeffs(a);
    return {power_term(v3, 0, k, co[0]) + power_term(v3, 1, k, co[1]) + power_term(v3, 2, k, co[2])};
  }
  if (std::holds_alternative<Cinfinity>(spec.kind)) {
    return {power_term(v3, 0, k, 1) + power_term(v3, 1, k, -2) + power_term(v3, 2, k, 1)};
  }
  if (auto a = std::get_if<Axis>(&spec.kind)) {
    if (a->i < 1 || a->i > 3) throw CatalogError("axis index must be 1, 2 or 3");
    return {power_term(v3, a->i - 1, 1, 1)};
  }
  if (auto t = std::get_if<TypeIV>(&spec.kind)) {
    if (k % 2 != 0) throw CatalogError("type iv curves need k even");
    require_sign(t->e2);
    require_sign(t->e3);
    const int h = k / 2;
    return {power_term(v3, 0, h, -1) + power_term(v3, 1, h, 2 * t->e2) + power_term(v3, 2, h, -t->e3)};
  }
  if (std::holds_alternative<TypeV>(spec.kind)) {
    if (k % 2 == 0) throw CatalogError("the type v curve needs k odd");
    return {q_homogeneous(k)};
  }
  if (auto e = std::get_if<EpsilonCurve>(&spec.kind)) {
    if (k % 2 != 0) throw CatalogError("epsilon curves need k even");
    const int n = spec.n;
    if (n < 3 || static_cast<int>(e->eps.size()) != n - 1) {
      throw CatalogError("epsilon curve needs n-1 signs (e2..en)");
    }
    for (int s : e->eps) require_sign(s);
    const VarList v = x_vars(n);
    const int h = k / 2;
    const int e2 = e->eps[0];
    std::vector<Poly> out;
    for (int j = 3; j <= n; ++j) {
      const int ej = e->eps[static_cast<std::size_t>(j - 2)];
      out.push_back(power_term(v, 0, h, -(j - 2)) + power_term(v, 1, h, (j - 1) * e2) +
                    power_term(v, j - 1, h, -ej));
    }
    return out;
  }
  const auto& r = std::get<PullbackRn>(spec.kind);
  const int n = spec.n;
  if (r.i < 1 || r.i > n) throw CatalogError("R_i needs 1 <= i <= n");
  const VarList v = x_vars(n);
  std::vector<Poly> out{power_term(v, r.i - 1, 1, 1)};
  if (n >= 4) {
    for (auto& g : generators(n, k, Basis::g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CurveSpec> plane_catalog(int k) {
  std::vector<CurveSpec> out{calpha_symbolic(k), {Cinfinity{}, k, 3}};
  for (int i = 1; i <= 3; ++i) out.push_back({Axis{i}, k, 3});
  if (k % 2 == 0) {
    for (int e2 : {1, -1}) {
      for (int e3 : {1, -1}) out.push_back({TypeIV{e2, e3}, k, 3});
    }
  } else {
    out.push_back({TypeV{}, k, 3});
  }
  return out;
}

CertificateRecord verify_integrality(const CurveSpec& spec) {
  if (spec.n != 3) throw CatalogError("verify_integrality works on plane curves");
  const int k = spec.k;
  const auto* ca = std::get_if<Calpha>(&spec.kind);
  if (ca && std::holds_alternative<Calpha::Symbolic>(ca->alpha)) {
    const auto [ch, g] = affine_equation(calpha_equation(k));
    const auto w = to_alpha(build_omega(k, ch.id));
    const auto cert = integrality_criterion(g, w);
    if (!cert) throw NotIntegralError(to_text(spec) + " failed the integrality criterion at k=" + std::to_string(k));
    return {spec, k, ch, to_text(cert->curve), to_text(cert->criterion), to_text(cert->quotient), cert->verified};
  }
  if (std::holds_alternative<EpsilonCurve>(spec.kind) || std::holds_alternative<PullbackRn>(spec.kind)) {
    throw CatalogError("verify_integrality works on plane curves");
  }
  const auto [ch, g] = affine_equation(curve_equations(spec).front());
  const auto cert = integrality_criterion(g, build_omega(k, ch.id));
  if (!cert) throw NotIntegralError(to_text(spec) + " failed the integrality criterion at k=" + std::to_string(k));
  return {spec, k, ch, to_text(cert->curve), to_text(cert->criterion), to_text(cert->quotient), cert->verified};
}

namespace {

Rat hom_q(const std::vector<Rat>& y) {
  return y[0] * y[0] - 8 * y[0] * y[1] - 2 * y[0] * y[2] + 16 * y[1] * y[1] - 8 * y[1] * y[2] + y[2] * y[2];
}

UPoly alpha_quadratic(const std::vector<Rat>& y) {
  return UPoly(std::vector<Rat>{3 * y[0] - 3 * y[1] + y[2], (-5 * y[0] + 8 * y[1] - 3 * y[2]) / 2,
                                (y[0] - 2 * y[1] + y[2]) / 2});
}

// Roots of a degree <= 2 polynomial as catalog curves with multiplicities.
std::vector<std::pair<CurveSpec, int>> alpha_roots(const UPoly& q, int k) {
  std::vector<std::pair<CurveSpec, int>> out;
  auto add_rational = [&](const Rat& r, int mult) {
    if (r == 1 || r == 2 || r == 3) {
      out.push_back({{Axis{static_cast<int>(r.get_num().get_si())}, k, 3}, mult});
    } else {
      out.push_back({calpha(r, k), mult});
    }
  };
  if (q.degree() == 1) {
    add_rational(-q.coeff(0) / q.coeff(1), 1);
  } else if (q.degree() == 2) {
    const Rat a = q.coeff(2);
    const Rat b = q.coeff(1);
    const Rat c = q.coeff(0);
    const Rat disc = b * b - 4 * a * c;
    if (is_zero(disc)) {
      add_rational(-b / (2 * a), 2);
    } else if (auto s = exact_root(disc, 2)) {
      Rat r1 = (-b - *s) / (2 * a);
      Rat r2 = (-b + *s) / (2 * a);
      if (r2 < r1) std::swap(r1, r2);
      add_rational(r1, 1);
      add_rational(r2, 1);
    } else {
      const UPoly m = q.monic();
      for (int idx = 0; idx < 2; ++idx) out.push_back({{Calpha{Calpha::QuadraticRoot{m, idx}}, k, 3}, 1});
    }
  }
  return out;
}

std::vector<Rat> plane_powers(const ProjPoint& p, int k) {
  if (p.size() != 3) throw std::invalid_argument("expected a point of P^2");
  auto r = p.rational();
  if (!r) throw std::invalid_argument("expected a rational point");
  return p.powers(k);
}

}  // namespace

bool on_delta(const ProjPoint& p, int k) {
  const auto y = plane_powers(p, k);
  return p.is_zero_at(0) || p.is_zero_at(1) || p.is_zero_at(2) || is_zero(hom_q(y));
}

ThroughPointReport curves_through_point(const ProjPoint& p, int k) {
  if (k < 2) throw std::invalid_argument("curves_through_point: k >= 2");
  const auto y = plane_powers(p, k);
  ThroughPointReport rep{p, k, on_delta(p, k), alpha_quadratic(y), {}, 0};
  if (!rep.on_delta) {
    if (is_zero(rep.alpha_quadratic.coeff(2))) rep.curves.push_back({{Cinfinity{}, k, 3}, 1});
    for (auto& c : alpha_roots(rep.alpha_quadratic, k)) rep.curves.push_back(std::move(c));
  } else {
    const auto x = *p.rational();
    for (int i = 1; i <= 3; ++i) {
      if (is_zero(x[static_cast<std::size_t>(i - 1)])) rep.curves.push_back({{Axis{i}, k, 3}, 1});
    }
    if (is_zero(y[0] - 2 * y[1] + y[2])) rep.curves.push_back({{Cinfinity{}, k, 3}, 1});
    for (auto& c : alpha_roots(rep.alpha_quadratic, k)) {
      // Roots 1, 2, 3 are the axes already listed.
      if (!std::holds_alternative<Axis>(c.first.kind)) rep.curves.push_back(std::move(c));
    }
    if (k % 2 == 0) {
      for (int e2 : {1, -1}) {
        for (int e3 : {1, -1}) {
          const CurveSpec s{TypeIV{e2, e3}, k, 3};
          if (is_zero(evaluate(curve_equations(s).front(), x))) rep.curves.push_back({s, 1});
        }
      }
    } else if (is_zero(hom_q(y))) {
      rep.curves.push_back({{TypeV{}, k, 3}, 1});
    }
  }
  for (const auto& c : rep.curves) rep.total_multiplicity += c.second;
  return rep;
}

std::vector<std::vector<int>> sign_vectors(int length) {
  std::vector<std::vector<int>> out;
  if (length < 0) return out;
  const long count = 1L << length;
  for (long mask = 0; mask < count; ++mask) {
    std::vector<int> v(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) v[static_cast<std::size_t>(i)] = (mask >> (length - 1 - i)) & 1 ? -1 : 1;
    out.push_back(std::move(v));
  }
  return out;
}

bool linear_square_membership(const std::vector<std::pair<Rat, Rat>>& coeffs, int n, int k) {
  if (k % 2 != 0) throw std::invalid_argument("membership of epsilon curves needs k even");
  if (static_cast<int>(coeffs.size()) != n - 2) throw std::invalid_argument("need one pair for each j = 3..n");
  const VarList v = x_vars(n);
  const int h = k / 2;
  auto square_of = [&](int j) {
    const auto& [a, b] = coeffs[static_cast<std::size_t>(j - 3)];
    const Poly l = power_term(v, 0, h, a) + power_term(v, 1, h, b);
    return l * l;
  };
  const Poly x3k = square_of(3);
  for (int j = 4; j <= n; ++j) {
    // Normal form of x_j^k is c1 x1^k + c2 x2^k + c3 x3^k; put x3^k = L_3^2.
    const Poly nf = reduce_linear_in_powers(power_term(v, j - 1, k, 1), n, k, Basis::g);
    Exponents e3(static_cast<std::size_t>(n), 0);
    e3[2] = k;
    const Rat c3 = nf.coeff(e3);
    const Poly rest = nf - power_term(v, 2, k, c3);
    if (rest + x3k * c3 != square_of(j)) return false;
  }
  return true;
}

bool epsilon_membership(const std::vector<int>& eps, int n, int k) {
  if (k % 2 != 0) throw std::invalid_argument("membership of epsilon curves needs k even");
  if (static_cast<int>(eps.size()) != n - 1) throw std::invalid_argument("need signs e2..en");
  for (int s : eps) require_sign(s);
  std::vector<std::pair<Rat, Rat>> coeffs;
  for (int j = 3; j <= n; ++j) coeffs.push_back({Rat(-(j - 2)), Rat((j - 1) * eps[0])});
  return linear_square_membership(coeffs, n, k);
}

PullbackLedger pullback_ledger(const CurveSpec& base, int n) {
  if (base.n != 3) throw CatalogError("pullback_ledger: base must be a plane curve");
  if (n < 4) throw CatalogError("pullback_ledger: needs n >= 4");
  const int k = base.k;
  PullbackLedger led{base, n, {}, {}, {}, std::nullopt, false, {}};
  const Integer rho_degree = int_pow(k, static_cast<unsigned>(n - 3));

  if (auto ca = std::get_if<Calpha>(&base.kind)) {
    const Rat* a = std::get_if<Rat>(&ca->alpha);
    if (a && a->get_den() == 1 && *a >= 4 && *a <= n) {
      const int i = static_cast<int>(a->get_num().get_si());
      const VarList v = x_vars(n);
      const Poly ci = curve_equations(base).front().promoted(v);
      const Poly xik = power_term(v, i - 1, k, 1);
      led.components.push_back({{PullbackRn{i}, k, n}, k});
      led.reduces_to = xik;
      led.verified = is_zero(reduce_linear_in_powers(ci - xik, n, k, Basis::g));
      // Plane degree k pulls back to degree k * k^(n-3); R_i is a hyperplane section.
      led.degree_check = {k * rho_degree, k * rho_degree};
      led.identities.push_back({"k * deg R_i = k^(n-2)", k * rho_degree, int_pow(k, static_cast<unsigned>(n - 2))});
      return led;
    }
  }
  if (auto t = std::get_if<TypeIV>(&base.kind)) {
    if (k % 2 != 0) throw CatalogError("type iv curves need k even");
    bool ok = true;
    for (const auto& tail : sign_vectors(n - 3)) {
      std::vector<int> eps{t->e2, t->e3};
      eps.insert(eps.end(), tail.begin(), tail.end());
      const CurveSpec c{EpsilonCurve{eps}, k, n};
      ok = ok && epsilon_membership(eps, n, k);
      // The j = 3 equation is the base curve.
      ok = ok && curve_equations(c).front() == curve_equations(base).front().promoted(x_vars(n));
      led.components.push_back({c, 1});
    }
    const Integer half = k / 2;
    const unsigned e = static_cast<unsigned>(n - 2);
    led.degree_check = {int_pow(half, e) * int_pow(2, e), int_pow(k, e)};
    led.identities.push_back({"(k/2)^(n-2) * 2^(n-2) = k^(n-2)", led.degree_check.first, led.degree_check.second});
    led.identities.push_back({"components * map degree: 2^(n-3) * (k/2)^(n-3) = k^(n-3)",
                              int_pow(2, e - 1) * int_pow(half, e - 1), rho_degree});
    led.identities.push_back({"space degrees: 2^(n-3) * (k/2)^(n-2) = k^(n-3) * k/2",
                              Integer(led.components.size()) * int_pow(half, e), rho_degree * half});
    led.verified = ok && static_cast<long>(led.components.size()) == (1L << (n - 3));
    for (const auto& id : led.identities) led.verified = led.verified && id.balanced();
    return led;
  }
  if (std::holds_alternative<TypeV>(base.kind)) {
    if (k % 2 == 0) throw CatalogError("the type v curve needs k odd");
    led.components.push_back({{TypeV{}, k, n}, 1});
    const Integer group = int_pow(2, static_cast<unsigned>(n - 1));
    const Integer alt = int_pow(2, static_cast<unsigned>(n - 2));
    // Squaring map X_{n,2k} -> X_{n,k} has Galois group {+-1}^(n-1); its
    // degree equals the number of epsilon curves upstairs, so each maps
    // birationally onto the pullback.
    led.degree_check = {group, group};
    led.identities.push_back({"epsilon curves upstairs = |{+-1}^(n-1)|", group, group});
    led.identities.push_back({"squaring map degree as 2^(n-1)", group, group});
    led.identities.push_back({"squaring map degree as 2^(n-2) against the curve count", alt, group});
    led.notes.push_back("the squaring-map degree appears both as 2^(n-1) and 2^(n-2); only 2^(n-1) matches the curve count");
    // Pulled back along x -> x^2 the type v equation splits into the four type iv factors at 2k.
    const Poly q2 = scale_exponents(q_homogeneous(k), 2);
    Poly prod(x_vars(3), Rat(1));
    for (int e2 : {1, -1}) {
      for (int e3 : {1, -1}) prod *= curve_equations({TypeIV{e2, e3}, 2 * k, 3}).front();
    }
    led.verified = prod == q2 && led.identities[0].balanced() && led.identities[1].balanced();
    return led;
  }
  if (std::holds_alternative<EpsilonCurve>(base.kind) || std::holds_alternative<PullbackRn>(base.kind)) {
    throw CatalogError("pullback_ledger: base is not a plane catalog curve");
  }
  // C_alpha (alpha not in 4..n), C_inf and the axes pull back to one reduced curve.
  led.components.push_back({CurveSpec{base.kind, k, n}, 1});
  const Integer plane_degree = std::holds_alternative<Axis>(base.kind) ? Integer(1) : Integer(k);
  led.degree_check = {plane_degree * rho_degree, plane_degree * rho_degree};
  led.identities.push_back({"degree of the pullback", plane_degree * rho_degree, plane_degree * rho_degree});
  led.verified = true;
  return led;
}

LowGenusReport low_genus_report(const SurfaceId& s, int g) {
  if (s.n < 4) throw std::invalid_argument("low_genus_report: needs n >= 4");
  LowGenusReport rep{s, g, s.n < threshold_n(s.k, g), {}};
  const int k = s.k;
  const int n = s.n;
  auto genus = [&](GenusType t) { return genus_of_type(t, s); };
  if (genus(GenusType::a) <= g) rep.curves.push_back({{Calpha{Calpha::Symbolic{}}, k, n}, genus(GenusType::a)});
  if (genus(GenusType::a_prime) <= g) {
    for (int i = 4; i <= n; ++i) rep.curves.push_back({{PullbackRn{i}, k, n}, genus(GenusType::a_prime)});
  }
  if (genus(GenusType::b) <= g) rep.curves.push_back({{Cinfinity{}, k, n}, genus(GenusType::b)});
  if (genus(GenusType::c) <= g) {
    for (int i = 1; i <= 3; ++i) rep.curves.push_back({{Axis{i}, k, n}, genus(GenusType::c)});
  }
  if (k % 2 == 0 && genus(GenusType::d) <= g) {
    for (const auto& eps : sign_vectors(n - 1)) rep.curves.push_back({{EpsilonCurve{eps}, k, n}, genus(GenusType::d)});
  }
  if (k % 2 == 1 && genus(GenusType::e) <= g) rep.curves.push_back({{TypeV{}, k, n}, genus(GenusType::e)});
  return rep;
}

TwistLedger twist_ledger(const SurfaceId& s, int g) {
  if (s.n < 4) throw std::invalid_argument("twist_ledger: needs n >= 4");
  const int k = s.k;
  const int n = s.n;
  TwistLedger t;
  t.start = 2 * k + 3;
  t.subtracted = (k - 1) * (n - 3);
  t.final_twist = t.start - t.subtracted;
  if (t.final_twist != n * (1 - k) + 5 * k) throw std::logic_error("twist_ledger: arithmetic mismatch");
  t.degree_bound = t.final_twist + 4 * std::max(g, 1) - 4;
  t.degree_bound_literal = t.final_twist + 4 * g - 4;
  t.negative = t.degree_bound < 0;
  return t;
}

}  // namespace powerseq
