#pragma once

#include "ribet/numutil.hpp"

#include <gmpxx.h>

namespace ribet {

/// Element of Z_p known modulo p^A (absolute precision A >= 1).
/// Negative-valuation values are not representable; callers scale by
/// powers of p first. Immutable.
class PadicNum {
public:
    PadicNum(long p, int abs_precision, BigInt residue);

    static PadicNum zero(long p, int abs_precision);
    static PadicNum one(long p, int abs_precision);

    long prime() const { return p_; }
    int precision() const { return precision_; }
    const BigInt& residue() const { return residue_; }
    const BigInt& modulus() const { return modulus_; }

    /// min(v_p(residue), A). valuation_exact() is false exactly when the
    /// residue is 0 mod p^A, i.e. the true valuation may exceed A.
    int valuation() const;
    bool valuation_exact() const;
    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const { return valuation() == 0; }

    PadicNum operator+(const PadicNum& other) const;
    PadicNum operator-(const PadicNum& other) const;
    PadicNum operator-() const;
    PadicNum operator*(const PadicNum& other) const;

    /// Division by a p-adic unit; precision min(A_x, A_y).
    PadicNum div_unit(const PadicNum& y) const;
    /// Exact division by p; drops one digit of precision.
    PadicNum div_by_p() const;

    PadicNum pow(const BigInt& e) const;

    /// Forget digits down to absolute precision a < A.
    PadicNum reduced_to(int abs_precision) const;

    bool operator==(const PadicNum& other) const;

private:
    long p_;
    int precision_;
    BigInt modulus_; // p^A
    BigInt residue_; // in [0, p^A)
};

/// Embed a rational with p-free denominator into Z_p at precision A.
PadicNum embed_rational(const BigRational& q, long p, int abs_precision);

/// Teichmueller lift: the unique (p-1)-th root of unity in Z_p congruent
/// to n mod p, computed as n^(p^(A-1)) mod p^A.
PadicNum teichmuller(const BigInt& n, long p, int abs_precision);

} // namespace ribet
