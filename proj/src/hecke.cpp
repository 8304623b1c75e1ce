#include "ribet/hecke.hpp"

#include "ribet/characters.hpp"
#include "ribet/errors.hpp"

#include <numeric>

namespace ribet {

namespace {

QExpansion scale(const QExpansion& f, const PadicNum& s) {
    std::vector<PadicNum> coeffs;
    coeffs.reserve(f.truncation() + 1);
    const int a = std::min(f.precision(), s.precision());
    for (long n = 0; n <= f.truncation(); ++n)
        coeffs.push_back((f.coeff(n) * s).reduced_to(a));
    return QExpansion(f.prime(), f.weight(), f.char_exponent(), std::move(coeffs));
}

// eps(l) * l^{k-1} at f's precision; eps(l) = 0 when l = p.
PadicNum twisted_weight_factor(const QExpansion& f, long l) {
    const DirichletCharacter eps(f.prime(), f.char_exponent());
    const PadicNum chi_l = eps.value_padic(l, f.precision());
    BigInt lk;
    mpz_ui_pow_ui(lk.get_mpz_t(), static_cast<unsigned long>(l), f.weight() - 1);
    return chi_l * PadicNum(f.prime(), f.precision(), lk);
}

// T_{l^r} by the displayed recursion.
QExpansion hecke_Tl_power(const QExpansion& f, long l, unsigned r) {
    if (r == 0) return f;
    if (r == 1) return hecke_Tl(f, l);
    const QExpansion upper = hecke_Tl(hecke_Tl_power(f, l, r - 1), l);
    const QExpansion lower = diamond(hecke_Tl_power(f, l, r - 2), l);
    const int a = f.precision();
    BigInt lk;
    mpz_ui_pow_ui(lk.get_mpz_t(), static_cast<unsigned long>(l), f.weight() - 1);
    return qexp_linear(upper, lower, PadicNum::one(f.prime(), a),
                       -PadicNum(f.prime(), a, lk));
}

} // namespace

QExpansion hecke_Tl(const QExpansion& f, long l) {
    if (!is_prime(l)) throw std::invalid_argument("hecke_Tl: l must be prime");
    const long trunc = f.truncation() / l;
    if (trunc < 1) throw TruncationTooShort("hecke_Tl: truncation below l");
    const int a = f.precision();
    const PadicNum factor = twisted_weight_factor(f, l);
    std::vector<PadicNum> coeffs;
    coeffs.reserve(trunc + 1);
    coeffs.push_back(((PadicNum::one(f.prime(), a) + factor) * f.coeff(0)).reduced_to(a));
    for (long n = 1; n <= trunc; ++n) {
        PadicNum c = f.coeff(n * l);
        if (n % l == 0) c = c + factor * f.coeff(n / l);
        coeffs.push_back(c.reduced_to(a));
    }
    return QExpansion(f.prime(), f.weight(), f.char_exponent(), std::move(coeffs));
}

QExpansion diamond(const QExpansion& f, long d) {
    if (std::gcd(d, f.prime()) != 1)
        throw NotCoprime("diamond: d must be coprime to p");
    const DirichletCharacter eps(f.prime(), f.char_exponent());
    return scale(f, eps.value_padic(d, f.precision()));
}

QExpansion hecke_Tn(const QExpansion& f, long n) {
    if (n < 1) throw std::invalid_argument("hecke_Tn: n must be positive");
    if (f.truncation() < n) throw TruncationTooShort("hecke_Tn: truncation below n");
    if (n == 1) return f;
    long l = 2;
    while (n % l != 0) ++l;
    unsigned r = 0;
    long rest = n;
    while (rest % l == 0) {
        rest /= l;
        ++r;
    }
    QExpansion g = rest > 1 ? hecke_Tn(f, rest) : f;
    return hecke_Tl_power(g, l, r);
}

EigenResult is_eigen_mod(const QExpansion& f, long l, const PadicNum& lambda,
                         int m) {
    const QExpansion lhs = hecke_Tl(f, l);
    const QExpansion rhs = scale(f, lambda);
    const CongruenceResult res = qexp_congruent_mod(lhs, rhs, m);
    return {res.congruent, res.first_failing_index};
}

} // namespace ribet
