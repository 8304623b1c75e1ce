#pragma once

// Independent test oracles. Nothing here may call the implementation
// path it is used to check.

#include "ribet/numutil.hpp"

#include <vector>

namespace ribet::test {

/// B_n via truncated series division of t by (e^t - 1): reciprocal of
/// sum_j t^j/(j+1)! computed term by term over Q.
BigRational bernoulli_series_oracle(unsigned n);

/// (1/(m+1)) sum_k C(m+1,k) B_k n^{m+1-k}, with B_k from the series
/// oracle above.
BigRational power_sum_formula_oracle(unsigned m, unsigned long n);

/// Exact determinant of an integer matrix (Bareiss, fraction-free).
BigInt integer_determinant(std::vector<std::vector<BigInt>> m);

/// Relative class number h^- of Q(mu_p) from the Maillet determinant
/// D_p = det(R(i * j^{-1} mod p)), i,j = 1..(p-1)/2: |D_p| = p^{(p-3)/2} h^-.
BigInt maillet_h_minus(long p);

/// Irregular indices of p detected without Bernoulli numbers: p | B_k
/// iff sum_{a=1}^{p-1} a^k = 0 mod p^2, for even k in [2, p-3].
std::vector<long> irregular_indices_modular(long p);

} // namespace ribet::test
