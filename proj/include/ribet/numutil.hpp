#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace ribet {

using BigRational = mpq_class;
using BigInt = mpz_class;

bool is_prime(long n);
std::vector<long> primes_up_to(long bound);

long euler_phi(long n);

/// p-adic valuation of a nonzero integer.
int valuation_int(const BigInt& n, long p);
/// v_p(q) for a nonzero rational (may be negative).
int valuation_rat(const BigRational& q, long p);

BigInt binomial(unsigned long n, unsigned long k);
BigInt pow_int(long base, unsigned exp);

/// Smallest positive primitive root mod an odd prime p, by exhaustive
/// order check. Deterministic across runs.
long smallest_primitive_root(long p);

} // namespace ribet
