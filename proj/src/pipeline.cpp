#include "ribet/pipeline.hpp"

#include "ribet/characters.hpp"
#include "ribet/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace ribet {

namespace {

nlohmann::ordered_json verdict_json(const SeriesVerdict& v) {
    nlohmann::ordered_json j;
    j["ok"] = v.ok;
    j["first_failing_index"] = v.first_failing_index;
    return j;
}

} // namespace

std::string PipelineReport::to_json() const {
    nlohmann::ordered_json j;
    j["pair"] = {{"p", pair.p}, {"k", pair.k}};
    j["epsilon_exponent"] = epsilon_exponent;
    j["parameters"] = {{"M", truncation}, {"A", precision}};
    if (constant_c) {
        j["constant_c"] = {{"residue", constant_c->residue().get_str()},
                           {"precision", constant_c->precision()},
                           {"valuation", constant_valuation}};
    } else {
        j["constant_c"] = nullptr;
    }
    j["unit_form_case"] = {{"tag", unit_form_case},
                           {"n", unit_pair_n},
                           {"m", unit_pair_m}};
    j["eisenstein_congruences"] = {{"G2eps", verdict_json(g2eps_vs_Gk)},
                             {"G1eps", verdict_json(g1eps_vs_Gk)}};
    j["semicusp_verdict"] = semicusp_verdict;
    j["congruence_to_Gk"] = verdict_json(congruence_to_Gk);
    auto& eig = j["eigen_verdicts"] = nlohmann::ordered_json::array();
    for (const auto& e : eigen_verdicts) {
        eig.push_back({{"l", e.l},
                       {"lambda", e.lambda_residue.get_str()},
                       {"ok", e.ok},
                       {"checked_up_to", e.checked_up_to},
                       {"first_failing_index", e.first_failing_index}});
    }
    if (distinguishing_prime) {
        j["distinguishing_prime"] = {{"l", distinguishing_prime->l},
                                     {"lhs", distinguishing_prime->lhs.get_str()},
                                     {"rhs", distinguishing_prime->rhs.get_str()}};
    } else {
        j["distinguishing_prime"] = nullptr;
    }
    j["provenance"] = {
        {"deligne_serre_lift", "asserted by citation, not computed"},
        {"newform_promotion", "asserted by citation, not computed"}};
    j["overall_pass"] = overall_pass;
    if (!error.empty()) j["error"] = error;
    return j.dump(2);
}

std::string PipelineReport::to_text() const {
    std::ostringstream out;
    out << "pair (" << pair.p << ", " << pair.k << "), M=" << truncation
        << ", A=" << precision << "\n";
    out << "epsilon = omega^" << epsilon_exponent << "\n";
    if (constant_c)
        out << "constant c: residue " << constant_c->residue()
            << ", valuation >= " << constant_valuation << "\n";
    out << "unit form: " << unit_form_case;
    if (unit_form_case == "case_ii")
        out << " (n=" << unit_pair_n << ", m=" << unit_pair_m << ")";
    out << "\n";
    out << "G2eps = G_k mod p: " << (g2eps_vs_Gk.ok ? "ok" : "FAIL") << "\n";
    out << "G1eps = G_k mod p: " << (g1eps_vs_Gk.ok ? "ok" : "FAIL") << "\n";
    out << "semi-cusp: " << (semicusp_verdict ? "ok" : "FAIL") << "\n";
    out << "f = G_k mod p: " << (congruence_to_Gk.ok ? "ok" : "FAIL") << "\n";
    for (const auto& e : eigen_verdicts)
        out << "T_" << e.l << " eigen mod p (lambda=" << e.lambda_residue
            << "): " << (e.ok ? "ok" : "FAIL") << " through q^" << e.checked_up_to
            << "\n";
    if (distinguishing_prime)
        out << "distinguishing prime l=" << distinguishing_prime->l << " ("
            << distinguishing_prime->lhs << " vs " << distinguishing_prime->rhs
            << " mod p)\n";
    if (!error.empty()) out << "error: " << error << "\n";
    out << "overall: " << (overall_pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

PipelineReport ribet_construct(long p, long k, long truncation, int abs_precision,
                               long eigen_prime_bound) {
    if (truncation < 50 || abs_precision < 2)
        throw std::invalid_argument("ribet_construct: need M >= 50 and A >= 2");
    if (!is_irregular_pair(p, k))
        throw InputNotIrregular("ribet_construct: p does not divide B_k");

    PipelineReport report;
    report.pair = {p, k};
    report.epsilon_exponent = k - 2;
    report.truncation = truncation;
    report.precision = abs_precision;

    try {
        const QExpansion g2 = eis_G2_char(p, k - 2, truncation, abs_precision);
        const PadicNum c = g2.coeff(0);
        report.constant_c = c;
        report.constant_valuation = c.valuation();
        if (c.valuation() < 1)
            throw InternalInconsistency("constant of G_{2,eps} is a unit despite p|B_k");

        const UnitFormResult unit =
            build_unit_constant_form(p, k, truncation, abs_precision);
        report.unit_form_case =
            unit.case_tag == UnitFormCase::case_i ? "case_i" : "case_ii";
        report.unit_pair_n = unit.n;
        report.unit_pair_m = unit.m;

        const PadicNum one = PadicNum::one(p, abs_precision);
        const QExpansion f = qexp_linear(g2, unit.g, one, -c);
        report.semicusp_verdict = f.coeff(0).residue() == 0;

        const QExpansion gk =
            eis_Gk_level1(static_cast<unsigned>(k), truncation, p, abs_precision);
        const auto cong_f = qexp_congruent_mod(f, gk, 1);
        report.congruence_to_Gk = {cong_f.congruent, cong_f.first_failing_index};

        const auto cong_g2 = qexp_congruent_mod(g2, gk, 1);
        report.g2eps_vs_Gk = {cong_g2.congruent, cong_g2.first_failing_index};
        const QExpansion g1 = eis_G1_char(p, k - 1, truncation, abs_precision);
        const auto cong_g1 = qexp_congruent_mod(g1, gk, 1);
        report.g1eps_vs_Gk = {cong_g1.congruent, cong_g1.first_failing_index};

        const DirichletCharacter eps(p, k - 2);
        for (long l : primes_up_to(eigen_prime_bound)) {
            if (l == p) continue;
            const PadicNum lambda =
                one + eps.value_padic(l, abs_precision) * PadicNum(p, abs_precision, l);
            const EigenResult res = is_eigen_mod(f, l, lambda, 1);
            report.eigen_verdicts.push_back({l, lambda.reduced_to(1).residue(), res.ok,
                                             truncation / l,
                                             res.first_failing_index});
        }

        report.distinguishing_prime = distinguish_from_s2(p, k);

        bool pass = report.semicusp_verdict && report.congruence_to_Gk.ok &&
                    report.g2eps_vs_Gk.ok && report.g1eps_vs_Gk.ok;
        for (const auto& e : report.eigen_verdicts) pass = pass && e.ok;
        report.overall_pass = pass && report.distinguishing_prime.has_value();
    } catch (const Error& err) {
        report.error = err.what();
        report.overall_pass = false;
    }
    return report;
}

DistinguishResult distinguish_from_s2(long p, long k, long l_bound) {
    const long exponent = (k - 2) % (p - 1);
    if (exponent == 0)
        throw TrivialCharacter("distinguish_from_s2: epsilon must be nontrivial");
    for (long l : primes_up_to(l_bound)) {
        if (l == p || l % p == 1) continue;
        BigInt base(l);
        BigInt mod(p);
        BigInt eps_l;
        BigInt e(exponent);
        mpz_powm(eps_l.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        if (eps_l == 1) continue;
        BigInt lhs = (1 + eps_l * l) % p;
        BigInt rhs = (l + eps_l) % p;
        return {l, lhs, rhs};
    }
    throw NoWitnessFound("distinguish_from_s2: no witness prime below bound");
}

std::vector<IrregularPair> scan_irregular(long bound) {
    if (bound > 1000)
        throw std::invalid_argument("scan_irregular: bound must be <= 1000");
    std::vector<IrregularPair> out;
    for (long p : primes_up_to(bound - 1))
        if (p >= 5)
            for (long k : irregular_indices(p)) out.push_back({p, k});
    return out;
}

} // namespace ribet
