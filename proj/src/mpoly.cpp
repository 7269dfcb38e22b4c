#include "powerseq/mpoly.hpp"

#include <cctype>

namespace powerseq {

VarList x_vars(int n) {
  VarList v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : s_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(vars_);
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Poly t = term();
    acc += neg ? -t : t;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        const Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc * Rat(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (eat('-')) return -factor();
    Poly base = primary();
    if (eat('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(vars_, Rat(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(s_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(vars_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarList& vars) { return Parser(text, vars).parse(); }

PolyA to_alpha(const Poly& p) {
  return p.map_coeffs([](const Rat& c) { return RatFunc(c); });
}

PolyR to_radical(const Poly& p) {
  return p.map_coeffs([](const Rat& c) { return RadicalElem(c); });
}

Poly specialize_alpha(const PolyA& p, const Rat& value) {
  return p.map_coeffs([&value](const RatFunc& c) { return c.evaluate(value); });
}

}  // namespace powerseq
