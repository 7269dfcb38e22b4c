#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace powerseq {

using Integer = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Canonical text: always "num/den", e.g. "3/1", "-1/2".
std::string to_text(const Rat& r);
std::string to_text(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input or q = 0.
Rat parse_rat(std::string_view text);

Integer int_pow(const Integer& base, unsigned e);
Rat rat_pow(const Rat& base, unsigned e);

/// Exact k-th root if one exists in Z (negative radicands only for odd k).
std::optional<Integer> exact_root(const Integer& n, unsigned k);
std::optional<Rat> exact_root(const Rat& r, unsigned k);

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace powerseq
