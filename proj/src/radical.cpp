#include "powerseq/radical.hpp"

#include <stdexcept>

namespace powerseq {

namespace {

size_t tower_size(const RadicalTower& t) {
  size_t n = 1;
  for (int i = 0; i < t.height(); ++i) n *= static_cast<size_t>(t.k);
  return n;
}

bool same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

TowerPtr make_tower(int k, std::vector<Rat> radicands) {
  if (k < 2) throw std::invalid_argument("radical tower needs k >= 2");
  if (radicands.size() > 2) throw std::invalid_argument("radical tower height is capped at 2");
  for (const auto& r : radicands) {
    if (is_zero(r)) throw std::invalid_argument("radical tower with zero radicand");
  }
  return std::make_shared<const RadicalTower>(RadicalTower{k, std::move(radicands)});
}

RadicalElem RadicalElem::generator(const TowerPtr& tower, int index) {
  if (!tower || index < 0 || index >= tower->height()) {
    throw std::invalid_argument("RadicalElem::generator: index out of range");
  }
  std::vector<Rat> c(tower_size(*tower), Rat(0));
  c[index == 0 ? 1 : static_cast<size_t>(tower->k)] = 1;
  return RadicalElem(tower, std::move(c));
}

RadicalElem RadicalElem::from_coeffs(const TowerPtr& tower, std::vector<Rat> coeffs) {
  if (!tower) {
    if (coeffs.size() != 1) throw std::invalid_argument("rational element takes one coefficient");
    return RadicalElem(coeffs.front());
  }
  if (coeffs.size() != tower_size(*tower)) {
    throw std::invalid_argument("RadicalElem::from_coeffs: wrong coefficient count");
  }
  return RadicalElem(tower, std::move(coeffs));
}

bool RadicalElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!powerseq::is_zero(c)) return false;
  }
  return true;
}

std::optional<Rat> RadicalElem::as_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (!powerseq::is_zero(coeffs_[i])) return std::nullopt;
  }
  return coeffs_.front();
}

RadicalElem RadicalElem::lifted_to(const TowerPtr& tower) const {
  if (same_tower(tower_, tower)) return *this;
  if (tower_) throw std::domain_error("radical elements live in different towers");
  std::vector<Rat> c(tower_size(*tower), Rat(0));
  c[0] = coeffs_.front();
  return RadicalElem(tower, std::move(c));
}

TowerPtr RadicalElem::common_tower(const RadicalElem& a, const RadicalElem& b) {
  if (!a.tower_) return b.tower_;
  if (!b.tower_) return a.tower_;
  if (!same_tower(a.tower_, b.tower_)) {
    throw std::domain_error("radical elements live in different towers");
  }
  return a.tower_;
}

RadicalElem operator+(const RadicalElem& a, const RadicalElem& b) {
  const TowerPtr t = RadicalElem::common_tower(a, b);
  if (!t) return RadicalElem(a.coeffs_.front() + b.coeffs_.front());
  RadicalElem x = a.lifted_to(t);
  const RadicalElem y = b.lifted_to(t);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

RadicalElem operator-(const RadicalElem& a) {
  RadicalElem x = a;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

RadicalElem operator-(const RadicalElem& a, const RadicalElem& b) { return a + (-b); }

RadicalElem operator*(const RadicalElem& a, const RadicalElem& b) {
  const TowerPtr t = RadicalElem::common_tower(a, b);
  if (!t) return RadicalElem(a.coeffs_.front() * b.coeffs_.front());
  const RadicalElem x = a.lifted_to(t);
  const RadicalElem y = b.lifted_to(t);
  const int k = t->k;
  const int h = t->height();
  const size_t size = x.coeffs_.size();
  std::vector<Rat> out(size, Rat(0));
  for (size_t i = 0; i < size; ++i) {
    if (is_zero(x.coeffs_[i])) continue;
    for (size_t j = 0; j < size; ++j) {
      if (is_zero(y.coeffs_[j])) continue;
      Rat c = x.coeffs_[i] * y.coeffs_[j];
      int e1 = static_cast<int>(i % k) + static_cast<int>(j % k);
      int e2 = h == 2 ? static_cast<int>(i / k) + static_cast<int>(j / k) : 0;
      if (e1 >= k) {
        e1 -= k;
        c *= t->radicands[0];
      }
      if (e2 >= k) {
        e2 -= k;
        c *= t->radicands[1];
      }
      out[static_cast<size_t>(e1 + k * e2)] += c;
    }
  }
  return RadicalElem(t, std::move(out));
}

bool operator==(const RadicalElem& a, const RadicalElem& b) {
  if (!a.tower_ && !b.tower_) return a.coeffs_.front() == b.coeffs_.front();
  if (a.tower_ && b.tower_ && !same_tower(a.tower_, b.tower_)) {
    // Both reduce to rationals or they are incomparable; compare rational parts.
    auto ra = a.as_rational();
    auto rb = b.as_rational();
    return ra && rb && *ra == *rb;
  }
  return (a - b).is_zero();
}

RadicalElem pow(const RadicalElem& x, unsigned e) {
  RadicalElem result(1);
  RadicalElem base = x;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string to_text(const RadicalElem& x) {
  if (!x.tower()) return to_text(x.coeffs().front());
  const int k = x.tower()->k;
  std::string out;
  bool first = true;
  for (size_t idx = x.coeffs().size(); idx-- > 0;) {
    const Rat& c = x.coeffs()[idx];
    if (is_zero(c)) continue;
    const int e1 = static_cast<int>(idx) % k;
    const int e2 = static_cast<int>(idx) / k;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    out += to_text(Rat(abs(c)));
    auto factor = [&out](const char* name, int e) {
      if (e == 0) return;
      out += "*";
      out += name;
      if (e > 1) out += "^" + std::to_string(e);
    };
    factor("beta1", e1);
    factor("beta2", e2);
  }
  return first ? "0/1" : out;
}

std::string tower_text(const RadicalElem& x) {
  if (!x.tower()) return "";
  std::string out;
  for (int i = 0; i < x.tower()->height(); ++i) {
    if (i) out += "; ";
    out += "beta" + std::to_string(i + 1) + "^" + std::to_string(x.tower()->k) + " = " +
           to_text(x.tower()->radicands[static_cast<size_t>(i)]);
  }
  return out;
}

}  // namespace powerseq
