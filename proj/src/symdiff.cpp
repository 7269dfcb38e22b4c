#include "powerseq/symdiff.hpp"

#include <array>

#include "powerseq/upoly.hpp"

namespace powerseq {

std::string Chart::name() const {
  switch (id) {
    case ChartId::U1:
      return "U1";
    case ChartId::U2:
      return "U2";
    case ChartId::U3:
      return "U3";
  }
  return "?";
}

Chart chart(ChartId id) {
  switch (id) {
    case ChartId::U1:
      return {id, "x2", "x3"};
    case ChartId::U2:
      return {id, "x1", "x3"};
    case ChartId::U3:
      return {id, "x1", "x2"};
  }
  throw std::invalid_argument("chart: bad id");
}

Chart chart_of_index(int i) {
  if (i == 1) return chart(ChartId::U1);
  if (i == 2) return chart(ChartId::U2);
  if (i == 3) return chart(ChartId::U3);
  throw std::invalid_argument("chart_of_index: index must be 1, 2 or 3");
}

namespace {

Poly mono(const VarList& vars, int e1, int e2, long c) {
  return Poly::monomial(vars, {e1, e2}, Rat(c));
}

}  // namespace

Omega build_omega(int k, ChartId id) {
  if (k < 2) throw std::invalid_argument("build_omega: k must be >= 2");
  const Chart c = chart(id);
  const VarList v = c.vars();
  Omega w{c, k, 2 * k + 3, Poly(v), Poly(v), Poly(v)};
  switch (id) {
    case ChartId::U3:
      w.a0 = mono(v, 2 * k - 2, 2, 1);
      w.a1 = mono(v, k - 1, 1, 1) + mono(v, k - 1, k + 1, -4) + mono(v, 2 * k - 1, 1, -1);
      w.a2 = mono(v, k, k, 4);
      break;
    case ChartId::U1:
      w.a0 = mono(v, k, 1, 4);
      w.a1 = mono(v, 1, k, -1) + mono(v, 1, 0, 1) + mono(v, k + 1, 0, -4);
      w.a2 = mono(v, 2, k - 1, 1);
      break;
    case ChartId::U2:
      w.a0 = mono(v, 2 * k - 2, 1, 1);
      w.a1 = mono(v, 2 * k - 1, 0, -1) + mono(v, k - 1, k, -1) + mono(v, k - 1, 0, 4);
      // The dx3 dx3 coefficient is x1^k x3^(k-1); this is what the chart change produces.
      w.a2 = mono(v, k, k - 1, 1);
      break;
  }
  return w;
}

SymDiff<RatFunc> to_alpha(const Omega& w) {
  return map_coeffs<RatFunc>(w, [](const Rat& c) { return RatFunc(c); });
}

bool transition_verify(const Omega& u3, const Omega& target) {
  if (u3.chart.id != ChartId::U3 || target.chart.id == ChartId::U3 || u3.k != target.k) {
    throw std::invalid_argument("transition_verify: expects a U3 form and a U1/U2 form of equal k");
  }
  const VarList vars = target.chart.vars();
  const Poly a = Poly::variable(vars, vars[0]);
  const Poly b = Poly::variable(vars, vars[1]);
  const Poly one(vars, Rat(1));
  // U3 coordinates are (P/b, Q/b) with (P, Q) = (1, a) on U1 and (a, 1) on U2.
  const bool on_u1 = target.chart.id == ChartId::U1;
  const Poly p = on_u1 ? one : a;
  const Poly q = on_u1 ? a : one;
  const Poly pa = on_u1 ? Poly(vars) : one;
  const Poly qa = on_u1 ? one : Poly(vars);
  // b^2 du = pa*b da - p db, b^2 dv = qa*b da - q db; each as (da, db) coefficients.
  const std::array<Poly, 2> nu{pa * b, -p};
  const std::array<Poly, 2> nv{qa * b, -q};

  int degree = 0;
  for (const Poly* x : {&u3.a0, &u3.a1, &u3.a2}) degree = std::max(degree, x->total_degree());
  auto homogenized = [&](const Poly& f) {
    Poly out(vars);
    for (const auto& [e, c] : f.terms()) {
      out += pow(p, e[0]) * pow(q, e[1]) * pow(b, degree - e[0] - e[1]) * c;
    }
    return out;
  };
  const Poly h0 = homogenized(u3.a0);
  const Poly h1 = homogenized(u3.a1);
  const Poly h2 = homogenized(u3.a2);

  // sum_i A_i(P/b, Q/b) N_i / b^4 = b^-(degree+4) sum_i h_i N_i must equal
  // b^-twist times the target form.
  const Poly lhs_dada = h0 * nu[0] * nu[0] + h1 * nu[0] * nv[0] + h2 * nv[0] * nv[0];
  const Poly lhs_dadb = h0 * nu[0] * nu[1] * Rat(2) + h1 * (nu[0] * nv[1] + nu[1] * nv[0]) +
                        h2 * nv[0] * nv[1] * Rat(2);
  const Poly lhs_dbdb = h0 * nu[1] * nu[1] + h1 * nu[1] * nv[1] + h2 * nv[1] * nv[1];
  const int shift = degree + 4 - target.twist;
  if (shift < 0) return false;
  const Poly scale = pow(b, shift);
  return lhs_dada == scale * target.a0 && lhs_dadb == scale * target.a1 &&
         lhs_dbdb == scale * target.a2;
}

bool transition_verify(int k) {
  const Omega u3 = build_omega(k, ChartId::U3);
  return transition_verify(u3, build_omega(k, ChartId::U1)) &&
         transition_verify(u3, build_omega(k, ChartId::U2));
}

namespace {

// Restriction of g to the line (u, v) = (s0 + s1 t, r0 + r1 t).
UPoly restrict_to_line(const Poly& g, const std::array<long, 4>& line) {
  UPoly total;
  const UPoly u(std::vector<Rat>{Rat(line[0]), Rat(line[1])});
  const UPoly v(std::vector<Rat>{Rat(line[2]), Rat(line[3])});
  for (const auto& [e, c] : g.terms()) {
    total += pow(u, static_cast<unsigned>(e[0])) * pow(v, static_cast<unsigned>(e[1])) * UPoly(c);
  }
  return total;
}

constexpr std::array<std::array<long, 4>, 4> kLines{{{3, 1, -2, 5}, {-7, 2, 11, 3}, {5, -3, 2, 7}, {13, 5, -1, 2}}};

}  // namespace

bool looks_squarefree(const Poly& g) {
  if (g.vars().size() != 2) throw std::invalid_argument("looks_squarefree: expects a chart polynomial");
  for (const auto& line : kLines) {
    const UPoly r = restrict_to_line(g, line);
    if (r.degree() != g.total_degree()) continue;
    if (gcd(r, derivative(r)).degree() == 0) return true;
  }
  // Every restriction repeated a root: either a repeated factor or unlucky lines.
  for (const auto& line : kLines) {
    const UPoly r = restrict_to_line(g, line);
    if (r.degree() == g.total_degree()) return false;
  }
  return true;
}

bool looks_squarefree(const PolyA& g) {
  for (long a : {7L, -11L, 23L}) {
    try {
      if (looks_squarefree(specialize_alpha(g, Rat(a)))) return true;
    } catch (const std::domain_error&) {
    }
  }
  return false;
}

Poly q_polynomial(int k) {
  const VarList v = x_vars(2);
  return mono(v, 2 * k, 0, 1) + mono(v, k, k, -8) + mono(v, k, 0, -2) + mono(v, 0, 2 * k, 16) +
         mono(v, 0, k, -8) + mono(v, 0, 0, 1);
}

Poly q_homogeneous(int k) { return homogenize(q_polynomial(k), "x3", 2); }

std::vector<Poly> q_factors(int k) {
  if (k % 2 != 0) throw std::invalid_argument("q_factors: k must be even");
  const VarList v = x_vars(2);
  std::vector<Poly> out;
  for (int e2 : {1, -1}) {
    for (int e3 : {1, -1}) out.push_back(mono(v, k / 2, 0, 1) + mono(v, 0, k / 2, 2 * e2) + mono(v, 0, 0, e3));
  }
  return out;
}

}  // namespace powerseq
