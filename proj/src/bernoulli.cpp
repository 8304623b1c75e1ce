#include "ribet/bernoulli.hpp"

#include "ribet/errors.hpp"
#include "ribet/padic.hpp"

#include <mutex>

namespace ribet {

namespace {

// Append-only table of exact Bernoulli numbers, extended via the
// recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1.
class BernoulliCache {
public:
    BigRational get(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (table_.size() <= n) extend();
        return table_[n];
    }

private:
    void extend() {
        const unsigned m = static_cast<unsigned>(table_.size());
        if (m == 0) {
            table_.emplace_back(1);
            return;
        }
        if (m == 1) {
            table_.emplace_back(-1, 2);
            return;
        }
        if (m % 2 == 1) {
            table_.emplace_back(0);
            return;
        }
        BigRational sum(0);
        for (unsigned k = 0; k < m; ++k) {
            if (table_[k] == 0) continue;
            sum += BigRational(binomial(m + 1, k)) * table_[k];
        }
        BigRational b = -sum / BigRational(static_cast<unsigned long>(m) + 1);
        b.canonicalize();
        table_.push_back(b);
    }

    std::mutex mu_;
    std::vector<BigRational> table_;
};

BernoulliCache& cache() {
    static BernoulliCache instance;
    return instance;
}

void check_pair_range(long p, long k) {
    if (k % 2 != 0 || k < 2 || k > p - 3)
        throw IndexOutOfRange("irregular pair index k must be even in [2, p-3]");
}

} // namespace

BigRational bernoulli_number(unsigned n) {
    return cache().get(n);
}

std::vector<BigRational> bernoulli_polynomial(unsigned n) {
    // B_n(X) = sum_i C(n,i) B_i X^{n-i}
    std::vector<BigRational> coeffs(n + 1, BigRational(0));
    for (unsigned i = 0; i <= n; ++i) {
        BigRational c = BigRational(binomial(n, i)) * bernoulli_number(i);
        c.canonicalize();
        coeffs[n - i] = c;
    }
    return coeffs;
}

BigRational power_sum(unsigned m, unsigned long n) {
    BigInt total(0);
    BigInt term;
    for (unsigned long a = 0; a < n; ++a) {
        mpz_ui_pow_ui(term.get_mpz_t(), a, m);
        total += term;
    }
    return BigRational(total);
}

bool is_irregular_pair(long p, long k) {
    if (p < 5 || !is_prime(p))
        throw IndexOutOfRange("is_irregular_pair: p must be a prime >= 5");
    check_pair_range(p, k);
    const BigRational b = bernoulli_number(static_cast<unsigned>(k));
    return mpz_divisible_ui_p(b.get_num().get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

std::vector<long> irregular_indices(long p) {
    std::vector<long> out;
    for (long k = 2; k <= p - 3; k += 2)
        if (is_irregular_pair(p, k)) out.push_back(k);
    return out;
}

bool verify_power_sum_congruence(long p, unsigned m) {
    if (p < 5 || m < 2 || m % 2 != 0)
        throw IndexOutOfRange("verify_power_sum_congruence: need p >= 5 and even m >= 2");
    BigInt mod = pow_int(p, 2);
    BigInt rhs(0);
    BigInt e(m);
    BigInt base, t;
    for (long a = 1; a < p; ++a) {
        base = a;
        mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        rhs += t;
    }
    rhs %= mod;
    BigRational lhs_rat = BigRational(p) * bernoulli_number(m); // p-integral
    PadicNum lhs = embed_rational(lhs_rat, p, 2);
    return lhs.residue() == rhs;
}

} // namespace ribet
