#include "ribet/characters.hpp"

#include "ribet/bernoulli.hpp"
#include "ribet/errors.hpp"

namespace ribet {

namespace {

// dlog[g^j mod p] = j for the smallest primitive root g.
std::vector<long> discrete_log_table(long p) {
    const long g = smallest_primitive_root(p);
    std::vector<long> dlog(p, 0);
    long x = 1;
    for (long j = 0; j < p - 1; ++j) {
        dlog[x] = j;
        x = static_cast<long>((static_cast<__int128>(x) * g) % p);
    }
    return dlog;
}

} // namespace

DirichletCharacter::DirichletCharacter(long p, long exponent) : p_(p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("DirichletCharacter: p must be an odd prime");
    exponent_ = exponent % (p - 1);
    if (exponent_ < 0) exponent_ += p - 1;
}

PadicNum DirichletCharacter::value_padic(const BigInt& n, int abs_precision) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    if (r == 0) return PadicNum::zero(p_, abs_precision);
    return teichmuller(r, p_, abs_precision).pow(exponent_);
}

CyclotomicNumber DirichletCharacter::value_cyclotomic(const BigInt& n) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    if (r == 0) return CyclotomicNumber(p_);
    const auto dlog = discrete_log_table(p_);
    const long j = dlog[r.get_si()];
    return CyclotomicNumber::zeta_power(p_, exponent_ * j);
}

std::vector<PadicNum> DirichletCharacter::value_table(int abs_precision) const {
    std::vector<PadicNum> table;
    table.reserve(p_);
    table.push_back(PadicNum::zero(p_, abs_precision));
    // omega(g)^i generates all values; walk residues as powers of g.
    const long g = smallest_primitive_root(p_);
    const PadicNum step = teichmuller(g, p_, abs_precision).pow(exponent_);
    std::vector<PadicNum> by_residue(p_, PadicNum::zero(p_, abs_precision));
    long x = 1;
    PadicNum v = PadicNum::one(p_, abs_precision);
    for (long j = 0; j < p_ - 1; ++j) {
        by_residue[x] = v;
        x = static_cast<long>((static_cast<__int128>(x) * g) % p_);
        v = v * step;
    }
    for (long n = 1; n < p_; ++n) table.push_back(by_residue[n]);
    return table;
}

PadicNum generalized_bernoulli(unsigned n, const DirichletCharacter& chi,
                               int abs_precision) {
    if (chi.is_trivial())
        throw TrivialCharacter("generalized_bernoulli: trivial character excluded");
    if (n == 0)
        throw std::invalid_argument("generalized_bernoulli: n must be positive");
    const long p = chi.prime();

    // R_a = p^n B_n(a/p) = sum_j c_j a^j p^{n-j} with B_n(X) = sum_j c_j X^j.
    const auto poly = bernoulli_polynomial(n);
    std::vector<BigRational> scaled(poly.size());
    for (unsigned j = 0; j <= n; ++j) {
        scaled[j] = poly[j] * BigRational(pow_int(p, n - j));
        scaled[j].canonicalize();
    }

    std::vector<BigRational> r(p);
    int extra = 0; // p-power needed to clear p in denominators (nonzero only when n >= p-1)
    for (long a = 1; a < p; ++a) {
        BigRational val(0);
        BigRational apow(1);
        for (unsigned j = 0; j <= n; ++j) {
            val += scaled[j] * apow;
            apow *= a;
        }
        val.canonicalize();
        r[a] = val;
        if (val != 0) {
            const int vden = valuation_int(val.get_den(), p);
            if (vden > extra) extra = vden;
        }
    }

    const int working = abs_precision + static_cast<int>(n) + extra;
    const BigRational p_scale(pow_int(p, static_cast<unsigned>(extra)));
    const auto chi_table = chi.value_table(working);
    PadicNum acc = PadicNum::zero(p, working);
    for (long a = 1; a < p; ++a)
        acc = acc + chi_table[a] * embed_rational(r[a] * p_scale, p, working);

    // B_{n,chi} = (1/p) sum_a chi(a) R_a; undo the p_scale as well.
    for (int i = 0; i < extra + 1; ++i) acc = acc.div_by_p();
    return acc.reduced_to(abs_precision);
}

CyclotomicNumber generalized_bernoulli1_cyclotomic(const DirichletCharacter& chi) {
    if (chi.is_trivial())
        throw TrivialCharacter("generalized_bernoulli1_cyclotomic: trivial character excluded");
    const long p = chi.prime();
    const auto dlog = discrete_log_table(p);
    CyclotomicNumber sum(p);
    for (long a = 1; a < p; ++a) {
        const long j = chi.exponent() * dlog[a];
        sum = sum + CyclotomicNumber::zeta_power(p, j) * BigRational(a);
    }
    return sum * BigRational(1, p);
}

PadicNum l_value(int s, const DirichletCharacter& chi, int abs_precision) {
    if (chi.is_trivial())
        throw TrivialCharacter("l_value: trivial character excluded");
    if (s == 0)
        return -generalized_bernoulli(1, chi, abs_precision);
    if (s == -1) {
        const PadicNum b2 = generalized_bernoulli(2, chi, abs_precision);
        const PadicNum two(chi.prime(), abs_precision, 2);
        return -b2.div_unit(two);
    }
    throw std::invalid_argument("l_value: s must be 0 or -1");
}

ClassNumberReport relative_class_number(long p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("relative_class_number: p must be a prime >= 5");

    CyclotomicNumber prod = CyclotomicNumber::from_rational(p, BigRational(1));
    const BigRational minus_half(-1, 2);
    for (long i = 1; i <= p - 2; i += 2) {
        const DirichletCharacter chi(p, i);
        prod = prod * (generalized_bernoulli1_cyclotomic(chi) * minus_half);
    }

    const CyclotomicNumber h_cyclo = prod * BigRational(2 * p);
    if (!h_cyclo.is_rational())
        throw InternalInconsistency("relative_class_number: product is not rational");
    const BigRational h_rat = h_cyclo.rational_value();
    if (h_rat.get_den() != 1 || h_rat <= 0)
        throw InternalInconsistency("relative_class_number: product is not a positive integer");

    ClassNumberReport report;
    report.p = p;
    report.h_minus = h_rat.get_num();
    report.p_part_exponent =
        mpz_divisible_ui_p(report.h_minus.get_mpz_t(), static_cast<unsigned long>(p))
            ? static_cast<unsigned>(valuation_int(report.h_minus, p))
            : 0u;
    report.irregular_count = static_cast<unsigned>(irregular_indices(p).size());
    report.carlitz_bound = BigRational(p - 1, 4);
    report.carlitz_bound.canonicalize();
    return report;
}

bool carlitz_check(long p) {
    const ClassNumberReport report = relative_class_number(p);
    const bool below_bound =
        BigRational(report.irregular_count) < report.carlitz_bound;
    const bool p_power_divides = report.p_part_exponent >= report.irregular_count;
    return below_bound && p_power_divides;
}

} // namespace ribet
