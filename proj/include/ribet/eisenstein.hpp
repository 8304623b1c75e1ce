#pragma once

#include "ribet/qexpansion.hpp"

#include <vector>

namespace ribet {

/// Exact-rational q-series used for the trivial-character Eisenstein
/// expansions before p-adic embedding.
struct RationalSeries {
    unsigned weight;
    std::vector<BigRational> coeffs; // a_0..a_M
};

/// G_{2,eps} = L(-1,eps)/2 + sum_n sum_{d|n} eps(d) d q^n for
/// eps = omega^i even nontrivial.
QExpansion eis_G2_char(long p, long i, long truncation, int abs_precision);

/// s_{2,eps} = sum_n sum_{d|n} eps(n/d) d q^n (semi-cusp).
QExpansion eis_s2_char(long p, long i, long truncation, int abs_precision);

/// G_{1,eps} = L(0,eps)/2 + sum_n sum_{d|n} eps(d) q^n for eps odd.
QExpansion eis_G1_char(long p, long i, long truncation, int abs_precision);

/// Level-1 G_k = -B_k/2k + sum sigma_{k-1}(n) q^n, k >= 4 even, exact.
RationalSeries eis_Gk_level1_exact(unsigned k, long truncation);
/// The same series embedded p-adically.
QExpansion eis_Gk_level1(unsigned k, long truncation, long p, int abs_precision);

/// Weight-2 level-p G_2 = E_2(z) - p E_2(pz), exact and embedded.
RationalSeries eis_G2_level_p_exact(long p, long truncation);
QExpansion eis_G2_level_p(long p, long truncation, int abs_precision);

enum class UnitFormCase { case_i, case_ii, case_iii_violation };

/// Weight-2 form of type omega^{k-2} with unit constant term, normalized
/// so the constant term is exactly 1.
struct UnitFormResult {
    QExpansion g;
    UnitFormCase case_tag;
    long n = 0; // case (ii) pair, zero otherwise
    long m = 0;
    PadicNum raw_constant;
};

UnitFormResult build_unit_constant_form(long p, long k, long truncation,
                                        int abs_precision);

} // namespace ribet
