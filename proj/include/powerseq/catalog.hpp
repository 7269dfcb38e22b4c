#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "powerseq/surfaces.hpp"
#include "powerseq/symdiff.hpp"

namespace powerseq {

/// C_alpha with alpha symbolic, a rational value, or a root of an irreducible
/// quadratic (index 0 or 1 distinguishes the conjugates).
struct Calpha {
  struct Symbolic {};
  struct QuadraticRoot {
    UPoly minpoly;
    int index = 0;
  };
  std::variant<Symbolic, Rat, QuadraticRoot> alpha;
};
struct Cinfinity {};
struct Axis {
  int i = 1;
};
/// -x1^(k/2) + 2 e2 x2^(k/2) - e3 x3^(k/2) = 0 (k even).
struct TypeIV {
  int e2 = 1;
  int e3 = 1;
};
/// The homogenized Q (k odd).
struct TypeV {};
/// -(j-2) x1^(k/2) + (j-1) e2 x2^(k/2) - e_j x_j^(k/2) = 0 for j = 3..n; eps = (e2, ..., en).
struct EpsilonCurve {
  std::vector<int> eps;
};
/// x_i = 0 on X_{n,k}.
struct PullbackRn {
  int i = 4;
};

using CurveKind = std::variant<Calpha, Cinfinity, Axis, TypeIV, TypeV, EpsilonCurve, PullbackRn>;

struct CurveSpec {
  CurveKind kind;
  int k = 2;
  int n = 3;
};

std::string to_text(const CurveSpec& c);
bool operator==(const CurveSpec& a, const CurveSpec& b);

CurveSpec calpha(const Rat& alpha, int k);
CurveSpec calpha_symbolic(int k);

struct CatalogError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotIntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Homogeneous equations: one for plane curves, n-2 for curves on X_{n,k}.
/// Throws CatalogError for parity mismatches, alpha in {1,2,3} or irrational alpha.
std::vector<Poly> curve_equations(const CurveSpec& spec);
/// The C_alpha form with alpha as a formal parameter.
PolyA calpha_equation(int k);

/// Text form of a certificate, kept independent of the coefficient field.
struct CertificateRecord {
  CurveSpec spec;
  int k = 2;
  Chart chart;
  std::string curve;
  std::string criterion;
  std::string quotient;
  bool verified = false;
};

/// Certifies a plane catalog curve; C_alpha symbolic is certified over Q(alpha).
/// Throws NotIntegralError if the division fails.
CertificateRecord verify_integrality(const CurveSpec& spec);
/// All plane catalog curves applicable to k (symbolic C_alpha, C_inf, axes, type iv or v).
std::vector<CurveSpec> plane_catalog(int k);

struct ThroughPointReport {
  ProjPoint point;
  int k = 2;
  bool on_delta = false;
  UPoly alpha_quadratic;
  std::vector<std::pair<CurveSpec, int>> curves;
  int total_multiplicity = 0;
};

/// Catalog curves through a rational point of P^2.
ThroughPointReport curves_through_point(const ProjPoint& p, int k);
/// Delta on U3: the line x3 = 0, A0 = 0, or Q_h = 0.
bool on_delta(const ProjPoint& p, int k);

struct DegreeIdentity {
  std::string label;
  Integer lhs;
  Integer rhs;
  bool balanced() const { return lhs == rhs; }
};

struct PullbackLedger {
  CurveSpec base;
  int n = 4;
  std::vector<std::pair<CurveSpec, int>> components;
  std::pair<Integer, Integer> degree_check;
  std::vector<DegreeIdentity> identities;
  /// For C_i: the polynomial the pullback reduces to (x_i^k).
  std::optional<Poly> reduces_to;
  bool verified = false;
  std::vector<std::string> notes;
};

PullbackLedger pullback_ledger(const CurveSpec& base, int n);

/// Checks that the epsilon-curve equations imply the equations of X_{n,k}.
bool epsilon_membership(const std::vector<int>& eps, int n, int k);
/// Same check for curves -a_j x1^(k/2) ... written as L_j = a_j x1^(k/2) + b_j x2^(k/2)
/// with e_j x_j^(k/2) = L_j, pairs given for j = 3..n.
bool linear_square_membership(const std::vector<std::pair<Rat, Rat>>& coeffs, int n, int k);

struct LowGenusReport {
  SurfaceId surface;
  int g = 0;
  bool below_threshold = false;  // then the list is only a partial answer
  std::vector<std::pair<CurveSpec, Rat>> curves;
};

LowGenusReport low_genus_report(const SurfaceId& s, int g);

struct TwistLedger {
  int start = 0;
  int subtracted = 0;
  int final_twist = 0;
  Rat degree_bound;          // final + 4 max(g,1) - 4
  Rat degree_bound_literal;  // final + 4g - 4
  bool negative = false;
};

TwistLedger twist_ledger(const SurfaceId& s, int g);

/// All sign vectors of the given length in lexicographic order, +1 before -1.
std::vector<std::vector<int>> sign_vectors(int length);

}  // namespace powerseq
