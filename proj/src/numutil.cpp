#include "ribet/numutil.hpp"

#include <stdexcept>

namespace ribet {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    for (long n = 2; n <= bound; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

long euler_phi(long n) {
    long result = n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int valuation_int(const BigInt& n, long p) {
    if (n == 0) throw std::invalid_argument("valuation_int: zero");
    BigInt m = abs(n);
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

int valuation_rat(const BigRational& q, long p) {
    if (q == 0) throw std::invalid_argument("valuation_rat: zero");
    int v = 0;
    if (q.get_num() != 0) v += valuation_int(q.get_num(), p);
    v -= valuation_int(q.get_den(), p);
    return v;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pow_int(long base, unsigned exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

long smallest_primitive_root(long p) {
    if (p == 2) return 1;
    for (long g = 2; g < p; ++g) {
        long x = g % p;
        long order = 1;
        while (x != 1) {
            x = static_cast<long>((static_cast<__int128>(x) * g) % p);
            ++order;
        }
        if (order == p - 1) return g;
    }
    throw std::invalid_argument("smallest_primitive_root: not a prime");
}

} // namespace ribet
