#pragma once

#include "ribet/bernoulli.hpp"
#include "ribet/eisenstein.hpp"
#include "ribet/hecke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ribet {

struct SeriesVerdict {
    bool ok = false;
    long first_failing_index = -1;
};

struct EigenVerdict {
    long l;
    BigInt lambda_residue; // 1 + eps(l) l mod p
    bool ok;
    long checked_up_to;
    long first_failing_index;
};

struct DistinguishResult {
    long l;
    BigInt lhs; // 1 + eps(l) l mod p
    BigInt rhs; // l + eps(l) mod p
};

struct PipelineReport {
    IrregularPair pair;
    long epsilon_exponent = 0;
    long truncation = 0;
    int precision = 0;
    std::optional<PadicNum> constant_c;
    int constant_valuation = 0;
    std::string unit_form_case; // "case_i" | "case_ii" | partial
    long unit_pair_n = 0;
    long unit_pair_m = 0;
    SeriesVerdict g2eps_vs_Gk;
    SeriesVerdict g1eps_vs_Gk;
    bool semicusp_verdict = false;
    SeriesVerdict congruence_to_Gk;
    std::vector<EigenVerdict> eigen_verdicts;
    std::optional<DistinguishResult> distinguishing_prime;
    bool overall_pass = false;
    std::string error; // set when the run aborted early

    std::string to_json() const;
    std::string to_text() const;
};

/// Full construction and verification run for an irregular pair (p,k):
/// builds G_{2,eps}, the unit-constant form g, the semi-cusp form
/// f = G_{2,eps} - c g, and checks the mod-p congruences and Hecke
/// eigen-identities.
PipelineReport ribet_construct(long p, long k, long truncation, int abs_precision,
                               long eigen_prime_bound = 13);

/// Smallest prime l != p with eps(l) != 1 and l != 1 mod p, so that the
/// eigenvalues 1 + eps(l) l and l + eps(l) differ mod p.
DistinguishResult distinguish_from_s2(long p, long k, long l_bound = 100);

/// All irregular pairs with p < bound, ordered by (p, k).
std::vector<IrregularPair> scan_irregular(long bound);

} // namespace ribet
