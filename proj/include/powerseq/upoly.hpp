#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerseq/rational.hpp"

namespace powerseq {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has degree -1 and an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(const Rat& c);  // NOLINT: constants promote implicitly
  UPoly(long c) : UPoly(Rat(c)) {}  // NOLINT

  static UPoly monomial(const Rat& c, int degree);
  static UPoly variable() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int i) const;
  const Rat& leading() const { return coeffs_.back(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat operator()(const Rat& t) const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both inputs are zero).
UPoly gcd(UPoly a, UPoly b);
UPoly derivative(const UPoly& p);
UPoly pow(const UPoly& p, unsigned e);

/// Terms in descending degree, coefficients as "num/den", e.g. "1/2*alpha^2 - 3/1".
std::string to_text(const UPoly& p, std::string_view var);

}  // namespace powerseq
