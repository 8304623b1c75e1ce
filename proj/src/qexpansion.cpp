#include "ribet/qexpansion.hpp"

#include "ribet/errors.hpp"

#include <json.hpp>

namespace ribet {

QExpansion::QExpansion(long p, unsigned weight, long char_exponent,
                       std::vector<PadicNum> coeffs, std::string label)
    : p_(p), weight_(weight), label_(std::move(label)) {
    if (coeffs.empty())
        throw std::invalid_argument("QExpansion: needs at least a constant term");
    char_exponent_ = char_exponent % (p - 1);
    if (char_exponent_ < 0) char_exponent_ += p - 1;
    const int a = coeffs[0].precision();
    for (const auto& c : coeffs) {
        if (c.prime() != p)
            throw MismatchedField("QExpansion: coefficient prime mismatch");
        if (c.precision() != a)
            throw PrecisionTooLow("QExpansion: coefficients must share one precision");
    }
    coeffs_ = std::move(coeffs);
}

QExpansion qexp_linear(const QExpansion& f, const QExpansion& g,
                       const PadicNum& alpha, const PadicNum& beta) {
    if (f.prime() != g.prime())
        throw MismatchedField("qexp_linear: prime mismatch");
    if (f.weight() != g.weight() || f.char_exponent() != g.char_exponent())
        throw GradingMismatch("qexp_linear: weight or character mismatch");
    const long m = std::min(f.truncation(), g.truncation());
    const int a = std::min({f.precision(), g.precision(), alpha.precision(),
                            beta.precision()});
    std::vector<PadicNum> coeffs;
    coeffs.reserve(m + 1);
    for (long n = 0; n <= m; ++n)
        coeffs.push_back((alpha * f.coeff(n) + beta * g.coeff(n)).reduced_to(a));
    return QExpansion(f.prime(), f.weight(), f.char_exponent(), std::move(coeffs));
}

QExpansion qexp_mul(const QExpansion& f, const QExpansion& g) {
    if (f.prime() != g.prime())
        throw MismatchedField("qexp_mul: prime mismatch");
    const long m = std::min(f.truncation(), g.truncation());
    const int a = std::min(f.precision(), g.precision());
    const long p = f.prime();
    BigInt mod = pow_int(p, static_cast<unsigned>(a));
    std::vector<BigInt> acc(m + 1, BigInt(0));
    for (long i = 0; i <= m; ++i) {
        const BigInt& fi = f.coeff(i).residue();
        if (fi == 0) continue;
        for (long j = 0; i + j <= m; ++j) acc[i + j] += fi * g.coeff(j).residue();
    }
    std::vector<PadicNum> coeffs;
    coeffs.reserve(m + 1);
    for (long n = 0; n <= m; ++n) coeffs.push_back(PadicNum(p, a, acc[n] % mod));
    return QExpansion(p, f.weight() + g.weight(),
                      f.char_exponent() + g.char_exponent(), std::move(coeffs));
}

CongruenceResult qexp_congruent_mod(const QExpansion& f, const QExpansion& g,
                                    int m) {
    if (f.prime() != g.prime())
        throw MismatchedField("qexp_congruent_mod: prime mismatch");
    if (m < 1 || m > std::min(f.precision(), g.precision()))
        throw PrecisionTooLow("qexp_congruent_mod: modulus exceeds precision");
    const long trunc = std::min(f.truncation(), g.truncation());
    const BigInt mod = pow_int(f.prime(), static_cast<unsigned>(m));
    for (long n = 0; n <= trunc; ++n) {
        BigInt d = (f.coeff(n).residue() - g.coeff(n).residue()) % mod;
        if (d != 0) return {false, n};
    }
    return {true, -1};
}

std::string QExpansion::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p_;
    j["k"] = weight_;
    j["eps_exponent"] = char_exponent_;
    j["precision"] = precision();
    j["truncation"] = truncation();
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : coeffs_) arr.push_back(c.residue().get_str());
    return j.dump();
}

QExpansion QExpansion::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const long p = j.at("p").get<long>();
    const int a = j.at("precision").get<int>();
    std::vector<PadicNum> coeffs;
    for (const auto& s : j.at("coeffs"))
        coeffs.emplace_back(p, a, BigInt(s.get<std::string>()));
    return QExpansion(p, j.at("k").get<unsigned>(), j.at("eps_exponent").get<long>(),
                      std::move(coeffs));
}

} // namespace ribet
