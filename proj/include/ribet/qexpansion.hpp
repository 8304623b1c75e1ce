#pragma once

#include "ribet/padic.hpp"

#include <string>
#include <vector>

namespace ribet {

/// Truncated q-series with level/weight/character metadata. Coefficients
/// a_0..a_M all share one prime and one absolute precision. Immutable.
class QExpansion {
public:
    QExpansion(long p, unsigned weight, long char_exponent,
               std::vector<PadicNum> coeffs, std::string label = "");

    long prime() const { return p_; }
    unsigned weight() const { return weight_; }
    long char_exponent() const { return char_exponent_; }
    int precision() const { return coeffs_[0].precision(); }
    long truncation() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::string& label() const { return label_; }

    const PadicNum& coeff(long n) const { return coeffs_.at(n); }
    const std::vector<PadicNum>& coeffs() const { return coeffs_; }

    /// Constant term zero to precision.
    bool is_semicusp() const { return coeffs_[0].is_zero(); }

    /// JSON object {p, k, eps_exponent, precision, truncation, coeffs}
    /// with residues as decimal strings.
    std::string to_json() const;
    static QExpansion from_json(const std::string& text);

private:
    long p_;
    unsigned weight_;
    long char_exponent_;
    std::vector<PadicNum> coeffs_;
    std::string label_;
};

/// alpha*f + beta*g; requires same p, weight and character.
QExpansion qexp_linear(const QExpansion& f, const QExpansion& g,
                       const PadicNum& alpha, const PadicNum& beta);

/// Cauchy product truncated to min(M_f, M_g); weights add, character
/// exponents add mod (p-1).
QExpansion qexp_mul(const QExpansion& f, const QExpansion& g);

struct CongruenceResult {
    bool congruent;
    long first_failing_index; // -1 when congruent
};

/// a_n == b_n mod p^m for all n <= min(M_f, M_g); same p required,
/// grading ignored.
CongruenceResult qexp_congruent_mod(const QExpansion& f, const QExpansion& g,
                                    int m);

} // namespace ribet
