#include "ribet/padic.hpp"

#include "ribet/errors.hpp"

namespace ribet {

namespace {

void check_same_field(const PadicNum& x, const PadicNum& y) {
    if (x.prime() != y.prime())
        throw MismatchedField("p-adic operands have different primes");
}

int common_precision(const PadicNum& x, const PadicNum& y) {
    return std::min(x.precision(), y.precision());
}

} // namespace

PadicNum::PadicNum(long p, int abs_precision, BigInt residue)
    : p_(p), precision_(abs_precision) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("PadicNum: p must be an odd prime");
    if (abs_precision < 1)
        throw PrecisionExhausted("PadicNum: precision must be positive");
    mpz_ui_pow_ui(modulus_.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(abs_precision));
    mpz_mod(residue_.get_mpz_t(), residue.get_mpz_t(), modulus_.get_mpz_t());
}

PadicNum PadicNum::zero(long p, int abs_precision) {
    return PadicNum(p, abs_precision, 0);
}

PadicNum PadicNum::one(long p, int abs_precision) {
    return PadicNum(p, abs_precision, 1);
}

int PadicNum::valuation() const {
    if (residue_ == 0) return precision_;
    return std::min(valuation_int(residue_, p_), precision_);
}

bool PadicNum::valuation_exact() const {
    return !is_zero();
}

PadicNum PadicNum::operator+(const PadicNum& other) const {
    check_same_field(*this, other);
    return PadicNum(p_, common_precision(*this, other), residue_ + other.residue_);
}

PadicNum PadicNum::operator-(const PadicNum& other) const {
    check_same_field(*this, other);
    return PadicNum(p_, common_precision(*this, other), residue_ - other.residue_);
}

PadicNum PadicNum::operator-() const {
    return PadicNum(p_, precision_, -residue_);
}

PadicNum PadicNum::operator*(const PadicNum& other) const {
    check_same_field(*this, other);
    return PadicNum(p_, common_precision(*this, other), residue_ * other.residue_);
}

PadicNum PadicNum::div_unit(const PadicNum& y) const {
    check_same_field(*this, y);
    if (!y.is_unit())
        throw NonUnitDivisor("div_unit: divisor has positive valuation");
    const int a = common_precision(*this, y);
    BigInt mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(a));
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), y.residue_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw NonUnitDivisor("div_unit: residue not invertible");
    return PadicNum(p_, a, residue_ * inv);
}

PadicNum PadicNum::div_by_p() const {
    if (!mpz_divisible_ui_p(residue_.get_mpz_t(), static_cast<unsigned long>(p_)))
        throw NotDivisibleByP("div_by_p: residue not divisible by p");
    if (precision_ <= 1)
        throw PrecisionExhausted("div_by_p: no precision left");
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), residue_.get_mpz_t(), static_cast<unsigned long>(p_));
    return PadicNum(p_, precision_ - 1, q);
}

PadicNum PadicNum::pow(const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("PadicNum::pow: negative exponent");
    BigInt r;
    mpz_powm(r.get_mpz_t(), residue_.get_mpz_t(), e.get_mpz_t(), modulus_.get_mpz_t());
    return PadicNum(p_, precision_, r);
}

PadicNum PadicNum::reduced_to(int abs_precision) const {
    if (abs_precision > precision_)
        throw PrecisionTooLow("reduced_to: cannot raise precision");
    return PadicNum(p_, abs_precision, residue_);
}

bool PadicNum::operator==(const PadicNum& other) const {
    return p_ == other.p_ && precision_ == other.precision_ &&
           residue_ == other.residue_;
}

PadicNum embed_rational(const BigRational& q, long p, int abs_precision) {
    BigInt mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(abs_precision));
    const BigInt& den = q.get_den();
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw DenominatorDivisibleByP("embed_rational: p divides denominator");
    return PadicNum(p, abs_precision, q.get_num() * inv);
}

PadicNum teichmuller(const BigInt& n, long p, int abs_precision) {
    BigInt r = n % p;
    if (r < 0) r += p;
    if (r == 0) throw NotCoprime("teichmuller: p divides n");
    BigInt exponent;
    mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(abs_precision - 1));
    BigInt mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(abs_precision));
    BigInt out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
    return PadicNum(p, abs_precision, out);
}

} // namespace ribet
