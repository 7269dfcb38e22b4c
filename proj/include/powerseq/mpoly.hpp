#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "powerseq/radical.hpp"
#include "powerseq/ratfunc.hpp"
#include "powerseq/rational.hpp"

namespace powerseq {

using Exponents = std::vector<int>;
using VarList = std::vector<std::string>;

/// Graded lex, descending: higher total degree first, then lex with x1 most significant.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = 0;
    int db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse multivariate polynomial over C (Rat, RatFunc or RadicalElem).
/// No zero coefficient is ever stored. A polynomial with an empty variable
/// list is a bare constant and promotes to any variable list.
template <class C>
class MPoly {
 public:
  using Terms = std::map<Exponents, C, GrlexGreater>;

  MPoly() = default;
  explicit MPoly(VarList vars) : vars_(std::move(vars)) {}
  MPoly(VarList vars, const C& c) : vars_(std::move(vars)) {
    if (!is_zero_coeff(c)) terms_.emplace(Exponents(vars_.size(), 0), c);
  }
  static MPoly constant(const C& c) { return MPoly(VarList{}, c); }

  static MPoly monomial(VarList vars, Exponents e, const C& c) {
    if (e.size() != vars.size()) throw std::invalid_argument("monomial: exponent length mismatch");
    for (int x : e) {
      if (x < 0) throw std::invalid_argument("monomial: negative exponent");
    }
    MPoly p(std::move(vars));
    if (!is_zero_coeff(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }

  static MPoly variable(const VarList& vars, std::string_view name) {
    Exponents e(vars.size(), 0);
    e[index_of(vars, name)] = 1;
    return monomial(vars, std::move(e), C(1));
  }

  static std::size_t index_of(const VarList& vars, std::string_view name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars.begin());
  }

  const VarList& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  C constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? C(0) : it->second;
  }
  C coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  int total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (int e : terms_.begin()->first) d += e;
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  bool is_homogeneous() const {
    const int d = total_degree();
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (s != d) return false;
    }
    return true;
  }

  void add_term(const Exponents& e, const C& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("add_term: exponent length mismatch");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    adopt_vars(o);
    if (o.vars_.size() != vars_.size()) return *this += o.promoted(vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    adopt_vars(o);
    if (o.vars_.size() != vars_.size()) return *this -= o.promoted(vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    const VarList vars = joined_vars(a, b);
    const MPoly& x = a.vars_.size() == vars.size() ? a : a.promoted_ref(vars);
    const MPoly& y = b.vars_.size() == vars.size() ? b : b.promoted_ref(vars);
    MPoly out(vars);
    Exponents e(vars.size());
    for (const auto& [ea, ca] : x.terms_) {
      for (const auto& [eb, cb] : y.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend MPoly operator*(MPoly a, const C& s) {
    if (is_zero_coeff(s)) return MPoly(a.vars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend MPoly operator*(const C& s, MPoly a) { return std::move(a) * s; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) {
      // Bare constants compare by value.
      if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
      return false;
    }
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Same polynomial over a (super)list of variables, matched by name.
  MPoly promoted(const VarList& target) const {
    if (target == vars_) return *this;
    std::vector<std::size_t> where(vars_.size(), target.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const bool used = std::any_of(terms_.begin(), terms_.end(),
                                    [i](const auto& t) { return t.first[i] != 0; });
      if (used) where[i] = index_of(target, vars_[i]);
    }
    MPoly out(target);
    for (const auto& [e, c] : terms_) {
      Exponents f(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) f[where[i]] = e[i];
      }
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> MPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    MPoly<D> out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

 private:
  static bool is_zero_coeff(const C& c) {
    using powerseq::is_zero;
    return is_zero(c);
  }
  static VarList joined_vars(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) return a.vars_;
    if (a.vars_.empty()) return b.vars_;
    if (b.vars_.empty()) return a.vars_;
    throw std::invalid_argument("polynomials over different variable lists");
  }
  void adopt_vars(const MPoly& o) {
    const VarList v = joined_vars(*this, o);
    if (v.size() != vars_.size()) *this = promoted(v);
  }
  MPoly promoted_ref(const VarList& target) const { return promoted(target); }

  VarList vars_;
  Terms terms_;
};

template <class C>
inline bool is_zero(const MPoly<C>& p) {
  return p.is_zero();
}

template <class C>
MPoly<C> pow(const MPoly<C>& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  MPoly<C> result(p.vars(), C(1));
  MPoly<C> base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

template <class C>
MPoly<C> partial_derivative(const MPoly<C>& p, std::string_view var) {
  const std::size_t i = MPoly<C>::index_of(p.vars(), var);
  MPoly<C> out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    out.add_term(f, c * C(static_cast<long>(e[i])));
  }
  return out;
}

/// Exact quotient h with p = h*g, or nullopt when g does not divide p.
/// Division by a single polynomial in graded-lex order: one polynomial is a
/// Groebner basis of the ideal it generates, so the remainder is zero iff g | p.
/// The quotient is re-multiplied before it is returned.
template <class C>
std::optional<MPoly<C>> divide_exact(const MPoly<C>& p, const MPoly<C>& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  if (p.is_zero()) return MPoly<C>(g.vars().empty() ? p.vars() : g.vars());
  MPoly<C> r = p + MPoly<C>(g.vars());
  const MPoly<C> div = g.promoted(r.vars());
  const auto& [lead_e, lead_c] = *div.terms().begin();
  MPoly<C> q(r.vars());
  while (!r.is_zero()) {
    const auto [e, c] = *r.terms().begin();
    Exponents shift(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      shift[i] = e[i] - lead_e[i];
      if (shift[i] < 0) return std::nullopt;
    }
    const MPoly<C> t = MPoly<C>::monomial(r.vars(), shift, c / lead_c);
    q += t;
    r -= t * div;
  }
  if (q * div != p.promoted(q.vars())) {
    throw std::logic_error("divide_exact: re-multiplication check failed");
  }
  return q;
}

/// Exact substitution of `point` (one value per variable); S must be constructible from C.
template <class S, class C>
S evaluate(const MPoly<C>& p, const std::vector<S>& point) {
  if (point.size() != p.vars().size()) throw std::invalid_argument("evaluate: point length mismatch");
  std::vector<std::vector<S>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].push_back(S(1));
    const int d = p.degree_in(i);
    for (int j = 1; j <= d; ++j) powers[i].push_back(powers[i].back() * point[i]);
  }
  S total(0);
  for (const auto& [e, c] : p.terms()) {
    S term = S(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
    }
    total = total + term;
  }
  return total;
}

/// Replaces every variable by a polynomial over `target` (images in variable order).
template <class C>
MPoly<C> compose(const MPoly<C>& p, const std::vector<MPoly<C>>& images, const VarList& target) {
  if (images.size() != p.vars().size()) throw std::invalid_argument("compose: image count mismatch");
  std::vector<std::vector<MPoly<C>>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(MPoly<C>(target, C(1)));
    const int d = p.degree_in(i);
    const MPoly<C> img = images[i].promoted(target);
    for (int j = 1; j <= d; ++j) powers[i].push_back(powers[i].back() * img);
  }
  MPoly<C> out(target);
  for (const auto& [e, c] : p.terms()) {
    MPoly<C> term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= powers[i][static_cast<std::size_t>(e[i])];
    }
    out += term;
  }
  return out;
}

/// Substitutes a single variable, keeping the variable list.
template <class C>
MPoly<C> substitute(const MPoly<C>& p, std::string_view var, const MPoly<C>& value) {
  const std::size_t idx = MPoly<C>::index_of(p.vars(), var);
  std::vector<MPoly<C>> images;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    images.push_back(i == idx ? value : MPoly<C>::variable(p.vars(), p.vars()[i]));
  }
  return compose(p, images, p.vars());
}

/// Sets a variable to a constant and drops it from the variable list.
template <class C>
MPoly<C> specialize(const MPoly<C>& p, std::string_view var, const C& value) {
  const std::size_t idx = MPoly<C>::index_of(p.vars(), var);
  VarList rest = p.vars();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
  MPoly<C> out(rest);
  for (const auto& [e, c] : p.terms()) {
    C coef = c;
    for (int j = 0; j < e[idx]; ++j) coef *= value;
    Exponents f = e;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(idx));
    out.add_term(f, coef);
  }
  return out;
}

/// Homogenizes with a new variable (appended or inserted at `position`).
template <class C>
MPoly<C> homogenize(const MPoly<C>& p, const std::string& var, std::size_t position) {
  VarList vars = p.vars();
  vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(position), var);
  const int d = p.total_degree();
  MPoly<C> out(vars);
  for (const auto& [e, c] : p.terms()) {
    int s = 0;
    for (int x : e) s += x;
    Exponents f = e;
    f.insert(f.begin() + static_cast<std::ptrdiff_t>(position), d - s);
    out.add_term(f, c);
  }
  return out;
}

namespace detail {

inline bool coeff_negative(const Rat& c) { return sgn(c) < 0; }
inline std::string coeff_body(const Rat& c) { return to_text(Rat(abs(c))); }

template <class C>
bool coeff_negative(const C&) {
  return false;
}
template <class C>
std::string coeff_body(const C& c) {
  return "(" + to_text(c) + ")";
}

}  // namespace detail

/// Canonical text: graded-lex descending terms, every coefficient printed,
/// e.g. "1/1*x1^2 - 1/1*x2^2"; the zero polynomial is "0/1".
template <class C>
std::string to_text(const MPoly<C>& p) {
  if (p.is_zero()) return "0/1";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = detail::coeff_negative(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += detail::coeff_body(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*" + p.vars()[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

using Poly = MPoly<Rat>;
using PolyA = MPoly<RatFunc>;
using PolyR = MPoly<RadicalElem>;

/// Variables x1..xn.
VarList x_vars(int n);

/// Parses sums of products of numbers, variables, parenthesized groups and
/// nonnegative integer powers; '/' is allowed only by nonzero constants.
/// Accepts the canonical text form. Throws std::invalid_argument.
Poly parse_poly(std::string_view text, const VarList& vars);

/// Coefficient-wise embeddings Q -> Q(alpha) and Q -> radical elements.
PolyA to_alpha(const Poly& p);
PolyR to_radical(const Poly& p);
/// alpha -> value; throws std::domain_error when a denominator vanishes.
Poly specialize_alpha(const PolyA& p, const Rat& value);

}  // namespace powerseq
