#include "ribet/cyclotomic.hpp"

#include "ribet/errors.hpp"

#include <map>
#include <mutex>

namespace ribet {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<BigInt> poly_divide_exact(const std::vector<BigInt>& num,
                                      const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    std::vector<BigInt> quot(rem.size() - den.size() + 1, BigInt(0));
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        BigInt c = rem[i] / den.back(); // den is monic in all uses
        long shift = i - (static_cast<long>(den.size()) - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[shift + j] -= c * den[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw InternalInconsistency("poly_divide_exact: nonzero remainder");
    return quot;
}

std::vector<BigInt> compute_cyclotomic(long m) {
    // x^m - 1 divided by all proper Phi_d.
    std::vector<BigInt> num(m + 1, BigInt(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial(d));
    return num;
}

// x^j mod Phi_m for j in [0, m), as integer coefficient rows.
const std::vector<std::vector<BigInt>>& power_basis(long m) {
    static std::mutex mu;
    static std::map<long, std::vector<std::vector<BigInt>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    const auto& phi = cyclotomic_polynomial(m);
    const long deg = static_cast<long>(phi.size()) - 1;
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(m);
    std::vector<BigInt> cur(deg, BigInt(0));
    cur[0] = 1;
    for (long j = 0; j < m; ++j) {
        rows.push_back(cur);
        // multiply by x, reduce once by the monic Phi_m
        BigInt lead = cur[deg - 1];
        for (long i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (lead != 0)
            for (long i = 0; i < deg; ++i) cur[i] -= lead * phi[i];
    }
    return cache.emplace(m, std::move(rows)).first->second;
}

void check_same_field(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    if (x.prime() != y.prime())
        throw MismatchedField("cyclotomic operands have different primes");
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long m) {
    static std::mutex mu;
    static std::map<long, std::vector<BigInt>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(poly)).first->second;
}

CyclotomicNumber::CyclotomicNumber(long p) : p_(p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("CyclotomicNumber: p must be an odd prime");
    coeffs_.assign(euler_phi(p - 1), BigRational(0));
}

CyclotomicNumber CyclotomicNumber::from_rational(long p, const BigRational& q) {
    CyclotomicNumber out(p);
    out.coeffs_[0] = q;
    return out;
}

CyclotomicNumber CyclotomicNumber::zeta(long p) {
    return zeta_power(p, 1);
}

CyclotomicNumber CyclotomicNumber::zeta_power(long p, long j) {
    CyclotomicNumber out(p);
    const long m = p - 1;
    j %= m;
    if (j < 0) j += m;
    const auto& row = power_basis(m)[j];
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = BigRational(row[i]);
    return out;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

BigRational CyclotomicNumber::rational_value() const {
    if (!is_rational())
        throw InternalInconsistency("rational_value: element is not rational");
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& other) const {
    check_same_field(*this, other);
    CyclotomicNumber out(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& other) const {
    check_same_field(*this, other);
    CyclotomicNumber out(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& other) const {
    check_same_field(*this, other);
    const long deg = static_cast<long>(coeffs_.size());
    std::vector<BigRational> prod(2 * deg - 1, BigRational(0));
    for (long i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (other.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    // reduce degrees >= deg by the monic cyclotomic modulus
    const auto& phi = cyclotomic_polynomial(p_ - 1);
    for (long i = static_cast<long>(prod.size()) - 1; i >= deg; --i) {
        if (prod[i] == 0) continue;
        BigRational lead = prod[i];
        prod[i] = 0;
        for (long j = 0; j < deg; ++j)
            prod[i - deg + j] -= lead * BigRational(phi[j]);
    }
    CyclotomicNumber out(p_);
    for (long i = 0; i < deg; ++i) out.coeffs_[i] = prod[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::operator*(const BigRational& s) const {
    CyclotomicNumber out(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] * s;
    return out;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& other) const {
    return p_ == other.p_ && coeffs_ == other.coeffs_;
}

PadicNum CyclotomicNumber::embed(int abs_precision) const {
    // The coordinates may carry p in their denominators even when the
    // element itself is p-integral, so clear the common denominator D,
    // evaluate the scaled element, then divide back out.
    BigInt denom(1);
    for (const auto& c : coeffs_)
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
    const int extra = valuation_int(denom, p_);
    const int working = abs_precision + extra;

    const long g = smallest_primitive_root(p_);
    const PadicNum zeta_image = teichmuller(g, p_, working);
    PadicNum acc = PadicNum::zero(p_, working);
    // Horner, highest coefficient first.
    for (long i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
        BigRational scaled = coeffs_[i] * denom;
        acc = acc * zeta_image + embed_rational(scaled, p_, working);
    }
    for (int j = 0; j < extra; ++j) acc = acc.div_by_p();
    BigInt unit = denom / pow_int(p_, static_cast<unsigned>(extra));
    if (unit != 1) acc = acc.div_unit(PadicNum(p_, abs_precision, unit));
    return acc.reduced_to(abs_precision);
}

} // namespace ribet
