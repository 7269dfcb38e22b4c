#pragma once

#include <string>

#include "powerseq/upoly.hpp"

namespace powerseq {

/// Element of Q(alpha): a gcd-reduced quotient of univariate polynomials with
/// monic denominator. The formal parameter prints as "alpha".
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}          // NOLINT
  RatFunc(const Rat& c) : num_(c), den_(1) {}    // NOLINT
  RatFunc(const UPoly& num) : num_(num), den_(1) {}  // NOLINT
  RatFunc(const UPoly& num, const UPoly& den);

  static RatFunc alpha() { return RatFunc(UPoly::variable()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Specializes alpha; throws std::domain_error when the denominator vanishes.
  Rat evaluate(const Rat& a) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, Reduced{}); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  struct Reduced {};
  RatFunc(UPoly num, UPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// "(num)/(den)" in alpha, or just the numerator text when the denominator is 1.
std::string to_text(const RatFunc& f);

}  // namespace powerseq
