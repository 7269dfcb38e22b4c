#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "powerseq/mpoly.hpp"

namespace powerseq {

enum class ChartId { U1, U2, U3 };

/// Affine chart of P^2: U_i is x_i != 0 with the other two coordinates kept in order.
struct Chart {
  ChartId id = ChartId::U3;
  std::string u;
  std::string v;

  std::string name() const;
  VarList vars() const { return {u, v}; }
  friend bool operator==(const Chart& a, const Chart& b) { return a.id == b.id; }
};

Chart chart(ChartId id);
/// The chart whose inverted coordinate is x_i (i in 1..3).
Chart chart_of_index(int i);

/// A0 du^2 + A1 du dv + A2 dv^2 on one chart; `twist` is the degree of the
/// twisting line bundle, kept as metadata instead of a polynomial factor.
template <class C>
struct SymDiff {
  Chart chart;
  int k = 2;
  int twist = 7;
  MPoly<C> a0;
  MPoly<C> a1;
  MPoly<C> a2;
};

using Omega = SymDiff<Rat>;

/// The differential on the given chart. Throws std::invalid_argument for k < 2.
Omega build_omega(int k, ChartId id);

template <class D, class C, class F>
SymDiff<D> map_coeffs(const SymDiff<C>& w, F&& f) {
  return SymDiff<D>{w.chart, w.k, w.twist, w.a0.map_coeffs(f), w.a1.map_coeffs(f), w.a2.map_coeffs(f)};
}
SymDiff<RatFunc> to_alpha(const Omega& w);

/// True iff the U3 form, rewritten in the coordinates (a, b) of `target`, equals
/// b^-(2k+3) times the target form. Checked as an exact polynomial identity.
bool transition_verify(const Omega& u3, const Omega& target);
/// Both transitions U3 -> U1 and U3 -> U2 of the built differential.
bool transition_verify(int k);

/// R = A0 g_v^2 - A1 g_u g_v + A2 g_u^2 for the chart coordinates (u, v).
template <class C>
MPoly<C> criterion_polynomial(const MPoly<C>& g, const SymDiff<C>& w) {
  const VarList vars = w.chart.vars();
  const MPoly<C> curve = g.promoted(vars);
  const MPoly<C> gu = partial_derivative(curve, w.chart.u);
  const MPoly<C> gv = partial_derivative(curve, w.chart.v);
  return w.a0 * gv * gv - w.a1 * gu * gv + w.a2 * gu * gu;
}

template <class C>
struct IntegralityCertificate {
  int k = 2;
  Chart chart;
  MPoly<C> curve;
  MPoly<C> criterion;
  MPoly<C> quotient;
  bool verified = false;
};

/// Heuristic squarefreeness test: restrictions to a few fixed lines.
bool looks_squarefree(const Poly& g);
bool looks_squarefree(const PolyA& g);

/// Certificate iff g divides the criterion polynomial; nullopt means not integral.
/// Throws std::invalid_argument for constant or visibly non-squarefree g.
template <class C>
std::optional<IntegralityCertificate<C>> integrality_criterion(const MPoly<C>& g,
                                                               const SymDiff<C>& w) {
  const MPoly<C> curve = g.promoted(w.chart.vars());
  if (curve.is_constant()) throw std::invalid_argument("integrality_criterion: constant curve");
  if (!looks_squarefree(curve)) {
    throw std::invalid_argument("integrality_criterion: curve equation is not squarefree");
  }
  MPoly<C> r = criterion_polynomial(curve, w);
  auto q = divide_exact(r, curve);
  if (!q) return std::nullopt;
  IntegralityCertificate<C> cert{w.k, w.chart, curve, r, *q, false};
  cert.verified = cert.quotient * cert.curve == cert.criterion;
  return cert;
}

/// A1^2 - 4 A0 A2.
template <class C>
MPoly<C> discriminant(const SymDiff<C>& w) {
  return w.a1 * w.a1 - w.a0 * w.a2 * MPoly<C>::constant(C(4));
}

/// Q = x1^2k - 8x1^k x2^k - 2x1^k + 16x2^2k - 8x2^k + 1 on U3.
Poly q_polynomial(int k);
/// Its homogenization in x1, x2, x3.
Poly q_homogeneous(int k);
/// x1^(k/2) + e2*2x2^(k/2) + e3 for the four sign pairs (k even).
std::vector<Poly> q_factors(int k);

/// Dehomogenizes a form in x1, x2, x3 on the first chart (U3, U1, U2) where it
/// stays nonconstant. Throws if none does.
template <class C>
std::pair<Chart, MPoly<C>> affine_equation(const MPoly<C>& form) {
  const VarList xyz = x_vars(3);
  const MPoly<C> h = form.promoted(xyz);
  for (ChartId id : {ChartId::U3, ChartId::U1, ChartId::U2}) {
    const Chart c = chart(id);
    const std::string drop = id == ChartId::U3 ? "x3" : id == ChartId::U1 ? "x1" : "x2";
    MPoly<C> g = specialize(h, drop, C(1));
    if (!g.is_constant()) return {c, g.promoted(c.vars())};
  }
  throw std::invalid_argument("affine_equation: constant on every chart");
}

}  // namespace powerseq
