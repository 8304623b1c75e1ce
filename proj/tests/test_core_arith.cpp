#include "ribet/cyclotomic.hpp"
#include "ribet/errors.hpp"
#include "ribet/padic.hpp"

#include <doctest.h>

#include <random>

using namespace ribet;

TEST_CASE("embed_rational basics") {
    CHECK(embed_rational(BigRational(0), 37, 4).residue() == 0);
    CHECK(embed_rational(BigRational(1, 12), 5, 1).residue() == 3);
    CHECK(embed_rational(BigRational(1, 6), 37, 1).residue() == 31);
    CHECK_THROWS_AS(embed_rational(BigRational(1, 10), 5, 2), DenominatorDivisibleByP);
}

TEST_CASE("p-adic ring operations") {
    const PadicNum seven(5, 2, 7);
    CHECK((seven * seven).residue() == 24);

    const PadicNum x(5, 3, 65);
    const PadicNum q = x.div_by_p();
    CHECK(q.residue() == 13);
    CHECK(q.precision() == 2);

    const PadicNum one(5, 2, 1);
    const PadicNum six(5, 2, 6);
    CHECK(one.div_unit(six).residue() == 21);

    CHECK_THROWS_AS(PadicNum(5, 1, 5).div_by_p(), PrecisionExhausted);
    CHECK_THROWS_AS(one.div_unit(PadicNum(5, 2, 5)), NonUnitDivisor);
    CHECK_THROWS_AS(PadicNum(5, 2, 7).div_by_p(), NotDivisibleByP);
    CHECK_THROWS_AS(seven + PadicNum(7, 2, 1), MismatchedField);
}

TEST_CASE("valuation reporting") {
    CHECK(PadicNum(5, 4, 50).valuation() == 2);
    CHECK(PadicNum(5, 4, 50).valuation_exact());
    CHECK(PadicNum(5, 4, 0).valuation() == 4);
    CHECK_FALSE(PadicNum(5, 4, 0).valuation_exact());
    CHECK(PadicNum(5, 2, 7).is_unit());
}

TEST_CASE("teichmuller examples") {
    for (long p : {5L, 13L, 37L})
        for (int a : {1, 2, 4})
            CHECK(teichmuller(1, p, a).residue() == 1);
    CHECK(teichmuller(2, 5, 2).residue() == 7);
    CHECK(teichmuller(4, 5, 2).residue() == 24);
    CHECK_THROWS_AS(teichmuller(10, 5, 2), NotCoprime);
}

TEST_CASE("teichmuller is a (p-1)-th root of unity congruent to n") {
    for (long p : {5L, 37L, 97L, 199L}) {
        for (int a = 1; a <= 8; ++a) {
            for (long n = 1; n < p; n += (p > 40 ? 7 : 1)) {
                const PadicNum w = teichmuller(n, p, a);
                CHECK(w.pow(p - 1).residue() == 1);
                CHECK((w.residue() - n) % p == 0);
            }
        }
    }
}

TEST_CASE("teichmuller multiplicativity and the mod-p^2 refinement") {
    std::mt19937 rng(7);
    for (long p : {5L, 13L, 37L, 101L}) {
        std::uniform_int_distribution<long> pick(1, p - 1);
        for (int trial = 0; trial < 30; ++trial) {
            const long m = pick(rng), n = pick(rng);
            const PadicNum lhs = teichmuller(BigInt(m) * n, p, 8);
            const PadicNum rhs = teichmuller(m, p, 8) * teichmuller(n, p, 8);
            CHECK(lhs == rhs);
        }
        for (long n = 1; n < p; ++n) {
            BigInt expect, base(n), mod = pow_int(p, 2), e(p);
            mpz_powm(expect.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
            CHECK(teichmuller(n, p, 2).residue() == expect);
        }
    }
}

TEST_CASE("reduction compatibility") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> pick(0, 2400);
    for (int trial = 0; trial < 50; ++trial) {
        const PadicNum x(7, 4, pick(rng));
        const PadicNum y(7, 4, pick(rng));
        for (int a = 1; a < 4; ++a) {
            CHECK((x + y).reduced_to(a) == x.reduced_to(a) + y.reduced_to(a));
            CHECK((x * y).reduced_to(a) == x.reduced_to(a) * y.reduced_to(a));
            CHECK((x - y).reduced_to(a) == x.reduced_to(a) - y.reduced_to(a));
        }
    }
}

TEST_CASE("cyclotomic root-of-unity relations at p=5") {
    const auto zeta = CyclotomicNumber::zeta(5);
    const auto one = CyclotomicNumber::from_rational(5, BigRational(1));
    CHECK(zeta * CyclotomicNumber::zeta_power(5, 3) == one);

    const auto a = one + zeta;
    const auto b = one - zeta;
    CHECK((a + b).rational_value() == 2);
    CHECK((a * b).rational_value() == 2); // zeta^2 = -1 under Phi_4
}

TEST_CASE("cyclotomic ring laws on random triples") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(-5, 5);
    const long p = 13;
    auto random_elt = [&] {
        CyclotomicNumber out(p);
        for (long j = 0; j < p - 1; ++j) {
            BigRational c(pick(rng), 1 + std::abs(pick(rng)));
            c.canonicalize();
            out = out + CyclotomicNumber::zeta_power(p, j) * c;
        }
        return out;
    };
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_elt(), y = random_elt(), z = random_elt();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
    CHECK_THROWS_AS(CyclotomicNumber::zeta(5) * CyclotomicNumber::zeta(7),
                    MismatchedField);
}

TEST_CASE("cyclotomic embedding sends zeta to the Teichmuller lift of g") {
    // g = 2 is the smallest primitive root mod 5
    const auto zeta = CyclotomicNumber::zeta(5);
    CHECK(zeta.embed(3) == teichmuller(2, 5, 3));
    const auto r = CyclotomicNumber::from_rational(5, BigRational(3, 7));
    CHECK(r.embed(2) == embed_rational(BigRational(3, 7), 5, 2));
}
