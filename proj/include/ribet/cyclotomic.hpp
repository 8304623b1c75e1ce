#pragma once

#include "ribet/numutil.hpp"
#include "ribet/padic.hpp"

#include <vector>

namespace ribet {

/// Integer coefficients of the m-th cyclotomic polynomial, ascending,
/// degree phi(m).
const std::vector<BigInt>& cyclotomic_polynomial(long m);

/// Exact element of Q(zeta_{p-1}) as a polynomial in a fixed primitive
/// (p-1)-th root of unity, reduced modulo Phi_{p-1}. Immutable.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(long p); // zero

    static CyclotomicNumber from_rational(long p, const BigRational& q);
    static CyclotomicNumber zeta(long p);
    /// zeta_{p-1}^j, any integer j (reduced mod p-1).
    static CyclotomicNumber zeta_power(long p, long j);

    long prime() const { return p_; }
    long root_order() const { return p_ - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    BigRational rational_value() const; // requires is_rational()

    CyclotomicNumber operator+(const CyclotomicNumber& other) const;
    CyclotomicNumber operator-(const CyclotomicNumber& other) const;
    CyclotomicNumber operator*(const CyclotomicNumber& other) const;
    CyclotomicNumber operator*(const BigRational& s) const;

    bool operator==(const CyclotomicNumber& other) const;

    /// Push through the embedding zeta -> teichmuller(g) for the smallest
    /// primitive root g mod p.
    PadicNum embed(int abs_precision) const;

private:
    long p_;
    std::vector<BigRational> coeffs_; // length phi(p-1)
};

} // namespace ribet
