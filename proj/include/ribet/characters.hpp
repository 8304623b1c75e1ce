#pragma once

#include "ribet/cyclotomic.hpp"
#include "ribet/numutil.hpp"
#include "ribet/padic.hpp"

#include <vector>

namespace ribet {

/// Dirichlet character mod p, a power omega^i of the Teichmueller
/// character. Values are available in two backends: p-adic (omega(n) is
/// the Teichmueller lift) and exact cyclotomic (omega(g^j) = zeta^j for
/// the smallest primitive root g).
class DirichletCharacter {
public:
    DirichletCharacter(long p, long exponent);

    long prime() const { return p_; }
    long exponent() const { return exponent_; }

    bool is_trivial() const { return exponent_ == 0; }
    bool is_even() const { return exponent_ % 2 == 0; }
    bool is_odd() const { return !is_even(); }

    /// omega(n)^i at precision A; zero when p | n.
    PadicNum value_padic(const BigInt& n, int abs_precision) const;

    /// Exact value in Q(zeta_{p-1}); zero when p | n.
    CyclotomicNumber value_cyclotomic(const BigInt& n) const;

    /// Values for residues 0..p-1 at precision A (index n -> chi(n)).
    std::vector<PadicNum> value_table(int abs_precision) const;

private:
    long p_;
    long exponent_; // normalized to [0, p-2]
};

/// Generalized Bernoulli number B_{n,chi} as a p-adic number at absolute
/// precision >= A, via B_{n,chi} = p^{n-1} sum_a chi(a) B_n(a/p).
/// Requires chi nontrivial; works internally at precision A + n.
PadicNum generalized_bernoulli(unsigned n, const DirichletCharacter& chi,
                               int abs_precision);

/// Exact cyclotomic-backend B_{1,chi} = (1/p) sum_{a=1}^{p-1} chi(a) a.
CyclotomicNumber generalized_bernoulli1_cyclotomic(const DirichletCharacter& chi);

/// L(0,chi) = -B_{1,chi}; L(-1,chi) = -B_{2,chi}/2. s must be 0 or -1,
/// chi nontrivial.
PadicNum l_value(int s, const DirichletCharacter& chi, int abs_precision);

struct ClassNumberReport {
    long p;
    BigInt h_minus;
    unsigned p_part_exponent;
    unsigned irregular_count;
    BigRational carlitz_bound; // (p-1)/4
};

/// Relative class number h^- of Q(mu_p) via the exact odd-character
/// product h^- = 2p * prod_{chi odd} (-B_{1,chi}/2).
ClassNumberReport relative_class_number(long p);

/// t < (p-1)/4 and p^t | h^- , with t the count of irregular indices.
bool carlitz_check(long p);

} // namespace ribet
