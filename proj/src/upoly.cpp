#include "powerseq/upoly.hpp"

#include <stdexcept>

namespace powerseq {

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rat& c) {
  if (!powerseq::is_zero(c)) coeffs_.push_back(c);
}

UPoly UPoly::monomial(const Rat& c, int degree) {
  if (degree < 0) throw std::invalid_argument("UPoly::monomial: negative degree");
  std::vector<Rat> v(static_cast<size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && powerseq::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rat UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rat UPoly::operator()(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly out = *this;
  const Rat lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (powerseq::is_zero(coeffs_[i])) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly division by zero");
  UPoly rem = a;
  if (rem.degree() < b.degree()) return {UPoly(), rem};
  std::vector<Rat> q(static_cast<size_t>(rem.degree() - b.degree() + 1), Rat(0));
  const Rat lc = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rat c = rem.leading() / lc;
    q[static_cast<size_t>(shift)] = c;
    rem -= UPoly::monomial(c, shift) * b;
  }
  return {UPoly(std::move(q)), rem};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly derivative(const UPoly& p) {
  if (p.degree() < 1) return UPoly();
  std::vector<Rat> out(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<size_t>(i - 1)] = p.coeff(i) * i;
  return UPoly(std::move(out));
}

UPoly pow(const UPoly& p, unsigned e) {
  UPoly result(1);
  UPoly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string to_text(const UPoly& p, std::string_view var) {
  if (p.is_zero()) return "0/1";
  std::string out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rat c = p.coeff(d);
    if (is_zero(c)) continue;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    out += to_text(Rat(abs(c)));
    if (d >= 1) {
      out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace powerseq
