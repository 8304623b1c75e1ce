#include "ribet/eisenstein.hpp"

#include "ribet/bernoulli.hpp"
#include "ribet/characters.hpp"
#include "ribet/errors.hpp"

namespace ribet {

namespace {

void require_even_nontrivial(const DirichletCharacter& eps) {
    if (eps.is_trivial() || eps.is_odd())
        throw BadCharacterParity("character must be even and nontrivial");
}

QExpansion scale(const QExpansion& f, const PadicNum& s) {
    std::vector<PadicNum> coeffs;
    coeffs.reserve(f.truncation() + 1);
    const int a = std::min(f.precision(), s.precision());
    for (long n = 0; n <= f.truncation(); ++n)
        coeffs.push_back((f.coeff(n) * s).reduced_to(a));
    return QExpansion(f.prime(), f.weight(), f.char_exponent(), std::move(coeffs),
                      f.label());
}

} // namespace

QExpansion eis_G2_char(long p, long i, long truncation, int abs_precision) {
    const DirichletCharacter eps(p, i);
    require_even_nontrivial(eps);
    const auto chi = eps.value_table(abs_precision);
    const PadicNum two(p, abs_precision, 2);
    std::vector<PadicNum> coeffs(truncation + 1, PadicNum::zero(p, abs_precision));
    coeffs[0] = l_value(-1, eps, abs_precision).div_unit(two);
    for (long d = 1; d <= truncation; ++d) {
        const PadicNum val = chi[d % p] * PadicNum(p, abs_precision, d);
        if (val.is_zero()) continue;
        for (long n = d; n <= truncation; n += d) coeffs[n] = coeffs[n] + val;
    }
    return QExpansion(p, 2, i, std::move(coeffs), "G2eps");
}

QExpansion eis_s2_char(long p, long i, long truncation, int abs_precision) {
    const DirichletCharacter eps(p, i);
    require_even_nontrivial(eps);
    const auto chi = eps.value_table(abs_precision);
    std::vector<PadicNum> coeffs(truncation + 1, PadicNum::zero(p, abs_precision));
    for (long c = 1; c <= truncation; ++c) {
        const PadicNum& val = chi[c % p];
        if (val.is_zero()) continue;
        for (long d = 1; c * d <= truncation; ++d)
            coeffs[c * d] = coeffs[c * d] + val * PadicNum(p, abs_precision, d);
    }
    return QExpansion(p, 2, i, std::move(coeffs), "s2eps");
}

QExpansion eis_G1_char(long p, long i, long truncation, int abs_precision) {
    const DirichletCharacter eps(p, i);
    if (eps.is_even())
        throw BadCharacterParity("weight-1 series needs an odd character");
    const auto chi = eps.value_table(abs_precision);
    const PadicNum two(p, abs_precision, 2);
    std::vector<PadicNum> coeffs(truncation + 1, PadicNum::zero(p, abs_precision));
    coeffs[0] = l_value(0, eps, abs_precision).div_unit(two);
    for (long d = 1; d <= truncation; ++d) {
        const PadicNum& val = chi[d % p];
        if (val.is_zero()) continue;
        for (long n = d; n <= truncation; n += d) coeffs[n] = coeffs[n] + val;
    }
    return QExpansion(p, 1, i, std::move(coeffs), "G1eps");
}

RationalSeries eis_Gk_level1_exact(unsigned k, long truncation) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("eis_Gk_level1: k must be even and >= 4");
    RationalSeries s;
    s.weight = k;
    s.coeffs.assign(truncation + 1, BigRational(0));
    BigRational c0 = -bernoulli_number(k) / BigRational(2 * k);
    c0.canonicalize();
    s.coeffs[0] = c0;
    for (long d = 1; d <= truncation; ++d) {
        BigInt dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k - 1);
        const BigRational val(dk);
        for (long n = d; n <= truncation; n += d) s.coeffs[n] += val;
    }
    return s;
}

QExpansion eis_Gk_level1(unsigned k, long truncation, long p, int abs_precision) {
    const RationalSeries s = eis_Gk_level1_exact(k, truncation);
    std::vector<PadicNum> coeffs;
    coeffs.reserve(truncation + 1);
    for (const auto& c : s.coeffs) {
        try {
            coeffs.push_back(embed_rational(c, p, abs_precision));
        } catch (const DenominatorDivisibleByP&) {
            throw EmbeddingFailure("eis_Gk_level1: constant term has p in denominator");
        }
    }
    return QExpansion(p, k, 0, std::move(coeffs), "Gk");
}

RationalSeries eis_G2_level_p_exact(long p, long truncation) {
    RationalSeries s;
    s.weight = 2;
    s.coeffs.assign(truncation + 1, BigRational(0));
    BigRational c0(p - 1, 24);
    c0.canonicalize();
    s.coeffs[0] = c0;
    // sigma_1(n), then subtract p*sigma_1(n/p) at multiples of p
    for (long d = 1; d <= truncation; ++d)
        for (long n = d; n <= truncation; n += d) s.coeffs[n] += BigRational(d);
    for (long n = p; n <= truncation; n += p) {
        BigRational sig(0);
        for (long d = 1; d <= n / p; ++d)
            if ((n / p) % d == 0) sig += BigRational(d);
        s.coeffs[n] -= BigRational(p) * sig;
    }
    return s;
}

QExpansion eis_G2_level_p(long p, long truncation, int abs_precision) {
    const RationalSeries s = eis_G2_level_p_exact(p, truncation);
    std::vector<PadicNum> coeffs;
    coeffs.reserve(truncation + 1);
    for (const auto& c : s.coeffs) coeffs.push_back(embed_rational(c, p, abs_precision));
    return QExpansion(p, 2, 0, std::move(coeffs), "G2p");
}

UnitFormResult build_unit_constant_form(long p, long k, long truncation,
                                        int abs_precision) {
    if (k % 2 != 0 || k < 2 || k > p - 3)
        throw IndexOutOfRange("build_unit_constant_form: k must be even in [2, p-3]");

    if (k >= 4 && !is_irregular_pair(p, k)) {
        QExpansion g = eis_G2_char(p, k - 2, truncation, abs_precision);
        const PadicNum raw = g.coeff(0);
        if (!raw.is_unit())
            throw InternalInconsistency("case (i): constant term is not a unit");
        const PadicNum one = PadicNum::one(p, abs_precision);
        return UnitFormResult{scale(g, one.div_unit(raw)), UnitFormCase::case_i, 0, 0,
                              raw};
    }

    // Case (ii): first pair (n,m), n <= m even, n+m in {k, k+(p-1)},
    // p dividing neither B_n nor B_m.
    for (long n = 2; n <= p - 3; n += 2) {
        for (const long s : {k, k + (p - 1)}) {
            const long m = s - n;
            if (m < n || m > p - 3 || m % 2 != 0) continue;
            if (is_irregular_pair(p, n) || is_irregular_pair(p, m)) continue;
            const QExpansion g1 = eis_G1_char(p, n - 1, truncation, abs_precision);
            const QExpansion g2 = eis_G1_char(p, m - 1, truncation, abs_precision);
            QExpansion g = qexp_mul(g1, g2);
            const PadicNum raw = g.coeff(0);
            if (!raw.is_unit())
                throw InternalInconsistency("case (ii): constant term is not a unit");
            const PadicNum one = PadicNum::one(p, abs_precision);
            return UnitFormResult{scale(g, one.div_unit(raw)), UnitFormCase::case_ii,
                                  n, m, raw};
        }
    }

    // Would contradict the Carlitz bound; confirm before failing.
    carlitz_check(p);
    throw CaseThreeViolation("no unit-constant form found; Carlitz bound violated");
}

} // namespace ribet
