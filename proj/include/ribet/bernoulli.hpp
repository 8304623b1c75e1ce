#pragma once

#include "ribet/numutil.hpp"

#include <vector>

namespace ribet {

/// Exact Bernoulli number B_n (B_1 = -1/2). Backed by a process-wide
/// append-only cache; safe for concurrent callers.
BigRational bernoulli_number(unsigned n);

/// Coefficients of the Bernoulli polynomial B_n(X), ascending in X,
/// degree n, leading coefficient 1.
std::vector<BigRational> bernoulli_polynomial(unsigned n);

/// S_m(n) = sum_{a=0}^{n-1} a^m.
BigRational power_sum(unsigned m, unsigned long n);

struct IrregularPair {
    long p;
    long k;
    bool operator==(const IrregularPair&) const = default;
};

/// True iff p divides the numerator of B_k. Requires k even in [2, p-3].
bool is_irregular_pair(long p, long k);

/// All even k in [2, p-3] with p | numerator(B_k), ascending.
std::vector<long> irregular_indices(long p);

/// Checks p*B_m == sum_{a=1}^{p-1} a^m mod p^2 (both sides p-adically).
bool verify_power_sum_congruence(long p, unsigned m);

} // namespace ribet
