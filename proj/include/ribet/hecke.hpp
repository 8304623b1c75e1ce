#pragma once

#include "ribet/qexpansion.hpp"

namespace ribet {

/// T_l on q-expansions: (T_l f)_n = a_{nl} + eps(l) l^{k-1} a_{n/l}
/// (second term only when l | n), (T_l f)_0 = (1 + eps(l) l^{k-1}) a_0.
/// Truncation of the result is floor(M/l).
QExpansion hecke_Tl(const QExpansion& f, long l);

/// Diamond operator: scalar multiplication by eps(d), gcd(d,p)=1.
QExpansion diamond(const QExpansion& f, long d);

/// T_n for any positive n, by prime factorization, the recursion
/// T_{l^{r+1}} = T_l T_{l^r} - l^{k-1} <l> T_{l^{r-1}}, and
/// multiplicativity at coprime arguments. Truncation floor(M/n).
QExpansion hecke_Tn(const QExpansion& f, long n);

struct EigenResult {
    bool ok;
    long first_failing_index; // -1 when ok
};

/// T_l f == lambda f mod p^m, compared through q^floor(M/l).
EigenResult is_eigen_mod(const QExpansion& f, long l, const PadicNum& lambda,
                         int m);

} // namespace ribet
