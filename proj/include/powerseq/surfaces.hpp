#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powerseq/linalg.hpp"
#include "powerseq/powers.hpp"
#include "powerseq/radical.hpp"

namespace powerseq {

/// X_{n,k} in P^{n-1}; X_{3,k} is the plane.
struct SurfaceId {
  int n = 3;
  int k = 2;

  SurfaceId() = default;
  SurfaceId(int n_, int k_);  // throws for n < 3 or k < 2
};

/// A point of projective space. All-rational points are kept in primitive
/// integer form with the first nonzero coordinate positive. Coordinates may
/// be radical elements (each with its own tower).
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<RadicalElem> coords);
  static ProjPoint from_rats(const std::vector<Rat>& coords);
  static ProjPoint from_ints(const std::vector<long>& coords);

  int size() const { return static_cast<int>(coords_.size()); }
  const std::vector<RadicalElem>& coords() const { return coords_; }
  const RadicalElem& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  bool is_zero_at(int i) const { return coords_[static_cast<std::size_t>(i)].is_zero(); }

  std::optional<std::vector<Rat>> rational() const;
  /// x_j^k for every coordinate; throws std::domain_error if one is irrational.
  std::vector<Rat> powers(int k) const;

  ProjPoint scaled(const Rat& lambda) const;
  ProjPoint prefix(int m) const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

 private:
  void normalize();
  std::vector<RadicalElem> coords_;
};

/// "[1:2:3]" for rational points; radical coordinates in their canonical text.
std::string to_text(const ProjPoint& p);

/// g = T f and f = B g as integer matrices (rows index generators).
struct IdealMatrices {
  IntMatrix t;
  IntMatrix b;
  bool verified_linear = false;      // exact identities of the linear forms in y
  bool verified_polynomial = false;  // sum_j T_ij f_j == g_i as polynomials for the given k
  bool lower_unitriangular = false;
};

IdealMatrices ideal_equality_matrices(int n, int k = 2);

bool membership(const ProjPoint& p, const SurfaceId& s);
/// Fewer than three zero coordinates. Throws std::invalid_argument for non-members.
bool no_three_zeros(const ProjPoint& p, const SurfaceId& s);

/// All lifts of a point of X_{n-1,k} to X_{n,k}: x_n^k = c1 x1^k + c2 x2^k + c3 x3^k.
/// Over Q the list may be empty; in radical mode an irrational root becomes a
/// new generator beta with beta^k = RHS.
std::vector<ProjPoint> lift_point(const ProjPoint& p, int k, bool radical = false);
/// Drops the last coordinate (throws for non-members or n < 4).
ProjPoint project(const ProjPoint& p, const SurfaceId& s);

struct JacobianReport {
  ProjPoint point;
  int rank = 0;
  int expected = 0;
  std::vector<int> minor_rows;
  std::vector<int> minor_cols;
  /// det of the integer coefficient minor; the Jacobian minor is this times
  /// prod_j k x_j^(k-1) over the minor's columns.
  Integer coefficient_det;
  /// The Jacobian minor itself when the point is rational.
  std::optional<Rat> minor_det;
};

/// Rank of the (n-3) x n matrix of partials of the g generators at p.
JacobianReport jacobian_rank(const ProjPoint& p, const SurfaceId& s);

int canonical_degree(const SurfaceId& s);
bool general_type(const SurfaceId& s);

/// 1/2 (prod d)(sum d - ambient) + 1.
Rat genus_ci(const std::vector<int>& degrees, int ambient);

enum class GenusType { a, a_prime, b, c, d, e };
std::string to_text(GenusType t);
std::optional<GenusType> parse_genus_type(const std::string& s);
bool applicable(GenusType t, int k);
/// Closed forms for the integral curve families on X_{n,k} (n >= 4).
Rat genus_of_type(GenusType t, const SurfaceId& s);

/// Smallest n above the low-genus threshold; k = 2 uses max(11, 4g+7).
int threshold_n(int k, int g);
/// The two k = 2 readings: n > max(10, 4g+6) and n >= 11 (the latter for g <= 1).
int threshold_n_k2_max_form(int g);
int threshold_n_k2_fixed_form();

/// Seeded points of X_{n,k}: lifting chains from small plane points, radical
/// coordinates where a root is irrational; for k = 2 also arithmetic progressions.
std::vector<ProjPoint> sample_points(const SurfaceId& s, int count, std::uint64_t seed);

}  // namespace powerseq
