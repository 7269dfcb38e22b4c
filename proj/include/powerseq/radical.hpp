#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "powerseq/rational.hpp"

namespace powerseq {

/// Q[beta1, ..., beta_t] / (beta_i^k - r_i) with t <= 2 and a common exponent k.
struct RadicalTower {
  int k = 2;
  std::vector<Rat> radicands;

  int height() const { return static_cast<int>(radicands.size()); }
  friend bool operator==(const RadicalTower& a, const RadicalTower& b) {
    return a.k == b.k && a.radicands == b.radicands;
  }
};

using TowerPtr = std::shared_ptr<const RadicalTower>;

/// Throws std::invalid_argument for k < 2, more than two radicands, or a zero radicand.
TowerPtr make_tower(int k, std::vector<Rat> radicands);

/// Element of a radical tower in reduced normal form: dense coefficients over
/// the monomials beta1^e1 beta2^e2 with 0 <= e_i < k, index e1 + k*e2.
/// A null tower means the element is rational. Elements of different
/// nontrivial towers cannot be combined.
class RadicalElem {
 public:
  RadicalElem() : coeffs_{Rat(0)} {}
  RadicalElem(long c) : coeffs_{Rat(c)} {}        // NOLINT
  RadicalElem(const Rat& c) : coeffs_{c} {}       // NOLINT

  /// beta_{index+1} of the given tower.
  static RadicalElem generator(const TowerPtr& tower, int index);
  /// Coefficients indexed e1 + k*e2; size must be k^height.
  static RadicalElem from_coeffs(const TowerPtr& tower, std::vector<Rat> coeffs);

  const TowerPtr& tower() const { return tower_; }
  int height() const { return tower_ ? tower_->height() : 0; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The rational value when only the constant coefficient is nonzero.
  std::optional<Rat> as_rational() const;

  friend RadicalElem operator+(const RadicalElem& a, const RadicalElem& b);
  friend RadicalElem operator-(const RadicalElem& a, const RadicalElem& b);
  friend RadicalElem operator*(const RadicalElem& a, const RadicalElem& b);
  friend RadicalElem operator-(const RadicalElem& a);
  RadicalElem& operator+=(const RadicalElem& o) { return *this = *this + o; }
  RadicalElem& operator-=(const RadicalElem& o) { return *this = *this - o; }
  RadicalElem& operator*=(const RadicalElem& o) { return *this = *this * o; }

  friend bool operator==(const RadicalElem& a, const RadicalElem& b);
  friend bool operator!=(const RadicalElem& a, const RadicalElem& b) { return !(a == b); }

 private:
  RadicalElem(TowerPtr tower, std::vector<Rat> coeffs)
      : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {}
  /// Re-expresses a rational element in `tower`.
  RadicalElem lifted_to(const TowerPtr& tower) const;
  static TowerPtr common_tower(const RadicalElem& a, const RadicalElem& b);

  TowerPtr tower_;
  std::vector<Rat> coeffs_;
};

inline bool is_zero(const RadicalElem& x) { return x.is_zero(); }
RadicalElem pow(const RadicalElem& x, unsigned e);

/// Terms in beta1/beta2, descending (e2, e1), e.g. "2/1*beta1^2*beta2 + 1/1".
std::string to_text(const RadicalElem& x);
/// "beta1^3 = 22/1; beta2^3 = 5/1" (empty for Q).
std::string tower_text(const RadicalElem& x);

}  // namespace powerseq
