#pragma once

#include <vector>

#include "powerseq/linalg.hpp"
#include "powerseq/mpoly.hpp"

namespace powerseq {

/// The two generator families of X_{n,k}:
///   f_i = x_i^k - 3x_{i+1}^k + 3x_{i+2}^k - x_{i+3}^k
///   g_i = i(i+1)/2 x1^k - ((i+1)^2-1) x2^k + (i+1)(i+2)/2 x3^k - x_{i+3}^k
/// for i = 1..n-3.
enum class Basis { f, g };

/// Coefficients of the generators as linear forms in y_j = x_j^k, one row per generator.
RatMatrix generator_forms(int n, Basis basis);

/// The generators as polynomials in x1..xn. Throws for n < 4 or k < 1.
std::vector<Poly> generators(int n, int k, Basis basis);

/// (c1, c2, c3) with y_m = c1*y1 + c2*y2 + c3*y3 modulo the generators (m >= 1).
std::vector<Rat> power_relation(int m);

/// Normal form of p modulo the ideal spanned by the generators. p must be a
/// polynomial in x1^k..xn^k; the remainder involves only x1^k, x2^k, x3^k and
/// is zero iff p lies in the ideal. Throws std::invalid_argument otherwise.
Poly reduce_linear_in_powers(const Poly& p, int n, int k, Basis basis);

/// x_j^e -> x_j^(e*factor) for every variable.
Poly scale_exponents(const Poly& p, int factor);

}  // namespace powerseq
