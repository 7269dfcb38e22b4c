#include "powerseq/rational.hpp"

#include <stdexcept>

namespace powerseq {

std::string to_text(const Integer& z) { return z.get_str(); }

std::string to_text(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
    }
  }
  std::string buf(s);
  if (buf.front() == '+') buf.erase(0, 1);
  return Integer(buf, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = 1;
  if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Integer int_pow(const Integer& base, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rat rat_pow(const Rat& base, unsigned e) {
  Rat out(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
  out.canonicalize();
  return out;
}

std::optional<Integer> exact_root(const Integer& n, unsigned k) {
  if (k == 0) throw std::invalid_argument("exact_root: k must be positive");
  if (k == 1) return n;
  if (sgn(n) < 0 && k % 2 == 0) return std::nullopt;
  Integer mag = abs(n);
  Integer root;
  if (mpz_root(root.get_mpz_t(), mag.get_mpz_t(), k) == 0) return std::nullopt;
  if (sgn(n) < 0) root = -root;
  return root;
}

std::optional<Rat> exact_root(const Rat& r, unsigned k) {
  auto num = exact_root(r.get_num(), k);
  if (!num) return std::nullopt;
  auto den = exact_root(r.get_den(), k);
  if (!den) return std::nullopt;
  Rat out(*num, *den);
  out.canonicalize();
  return out;
}

}  // namespace powerseq
