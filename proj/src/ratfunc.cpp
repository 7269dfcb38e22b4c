#include "powerseq/ratfunc.hpp"

#include <stdexcept>

namespace powerseq {

RatFunc::RatFunc(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  const UPoly g = gcd(num, den);
  UPoly n = divmod(num, g).first;
  UPoly d = divmod(den, g).first;
  const Rat lc = d.leading();
  num_ = n * UPoly(Rat(1) / lc);
  den_ = d.monic();
}

Rat RatFunc::evaluate(const Rat& a) const {
  const Rat d = den_(a);
  if (powerseq::is_zero(d)) {
    throw std::domain_error("RatFunc: denominator vanishes at alpha = " + to_text(a));
  }
  return num_(a) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) {
    return RatFunc(a.num_ * b.num_, UPoly(1), RatFunc::Reduced{});
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_text(const RatFunc& f) {
  if (f.is_polynomial()) return to_text(f.num(), "alpha");
  return "(" + to_text(f.num(), "alpha") + ")/(" + to_text(f.den(), "alpha") + ")";
}

}  // namespace powerseq
