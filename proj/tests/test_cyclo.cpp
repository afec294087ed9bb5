#include "doctest.h"

#include "bicross/cyclo.hpp"

#include <random>

using namespace bicross;

namespace {

// independent reduction oracle: long-divide X^k by Phi_N over Q, keep the remainder
std::vector<Rational> reduce_monomial_oracle(int k, int N) {
    auto phi = cyclotomic_poly(N);
    std::vector<Rational> r(k + 1, Rational(0));
    r[k] = 1;
    int deg = static_cast<int>(phi.size()) - 1;
    for (int i = k; i >= deg; --i) {
        Rational lead = r[i];
        if (lead.is_zero()) continue;
        for (int j = 0; j <= deg; ++j) r[i - deg + j] -= lead * Rational(phi[j]);
    }
    r.resize(deg, Rational(0));
    r.resize(deg);
    return r;
}

int mult_order(const CycloNum& z) {
    CycloNum acc = z;
    int k = 1;
    while (!acc.is_one()) {
        acc *= z;
        ++k;
        REQUIRE(k <= 10000);
    }
    return k;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<BigInt>{1, 1});
    CHECK(cyclotomic_poly(3) == std::vector<BigInt>{1, 1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<BigInt>{1, -1, 1});
    CHECK(cyclotomic_poly(8) == std::vector<BigInt>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
    CHECK(euler_phi(24) == 8);
    CHECK(static_cast<int>(cyclotomic_poly(24).size()) - 1 == 8);
}

TEST_CASE("embed basics over N = 4") {
    CHECK(CycloNum::zeta_pow(RootExp(0, 4)) == CycloNum::one(4));
    // zeta_4 = i has coefficient vector [0,1] over Phi_4 = X^2 + 1
    auto i4 = CycloNum::zeta_pow(RootExp(1, 4));
    CHECK(i4.coeffs() == std::vector<Rational>{Rational(0), Rational(1)});
    // zeta_4^2 = -1, frozen from the long-division oracle for X^2 mod X^2+1
    auto oracle = reduce_monomial_oracle(2, 4);
    CHECK(oracle == std::vector<Rational>{Rational(-1), Rational(0)});
    CHECK(CycloNum::zeta_pow(RootExp(2, 4)).coeffs() == oracle);
}

TEST_CASE("embed is a homomorphism, exhaustive for N <= 24") {
    for (int N = 1; N <= 24; ++N)
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                auto lhs = CycloNum::zeta_pow(RootExp(a, N)) * CycloNum::zeta_pow(RootExp(b, N));
                auto rhs = CycloNum::zeta_pow(RootExp(a, N) * RootExp(b, N));
                REQUIRE(lhs == rhs);
            }
}

TEST_CASE("multiplicative order of zeta_N^n is N/gcd(n,N)") {
    for (int N = 1; N <= 16; ++N)
        for (int n = 0; n < N; ++n) {
            int expect = N / std::gcd(n, N);
            CHECK(mult_order(CycloNum::zeta_pow(RootExp(n, N))) == expect);
        }
}

TEST_CASE("field arithmetic") {
    // (1+i)(1-i) = 2
    auto one = CycloNum::one(4);
    auto i4 = CycloNum::zeta_pow(RootExp(1, 4));
    CHECK((one + i4) * (one - i4) == CycloNum(4, Rational(2)));

    // inv(zeta_3) = zeta_3^2 = -1 - zeta_3 mod Phi_3
    auto z3 = CycloNum::zeta_pow(RootExp(1, 3));
    auto inv = z3.inverse();
    CHECK(inv == CycloNum::zeta_pow(RootExp(2, 3)));
    CHECK(inv.coeffs() == std::vector<Rational>{Rational(-1), Rational(-1)});

    // a + (-a) = 0
    CycloNum a = CycloNum::from_coeffs(12, {Rational(3, 7), Rational(-2), Rational(1, 5)});
    CHECK((a + (-a)).is_zero());
}

TEST_CASE("inverse of 100 randomized nonzero elements") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> numd(-6, 6), dend(1, 5);
    for (int N : {3, 4, 5, 8, 12}) {
        int count = 0;
        while (count < 20) {
            std::vector<Rational> cs(euler_phi(N));
            for (auto& c : cs) c = Rational(numd(rng), dend(rng));
            auto a = CycloNum::from_coeffs(N, cs);
            if (a.is_zero()) continue;
            ++count;
            CHECK(a.inverse() * a == CycloNum::one(N));
        }
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(CycloNum(4).inverse(), std::domain_error);
}

TEST_CASE("field embedding Q(zeta_N) -> Q(zeta_M)") {
    for (int N : {2, 3, 4, 6}) {
        int M = 12;
        for (int n = 0; n < N; ++n) {
            auto lhs = CycloNum::zeta_pow(RootExp(n, N)).embedded(M);
            auto rhs = CycloNum::zeta_pow(RootExp(n * (M / N), M));
            CHECK(lhs == rhs);
        }
    }
    // embedding is a ring map on random elements
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<Rational> ca(euler_phi(6)), cb(euler_phi(6));
        for (auto& c : ca) c = d(rng);
        for (auto& c : cb) c = d(rng);
        auto a = CycloNum::from_coeffs(6, ca), b = CycloNum::from_coeffs(6, cb);
        CHECK((a * b).embedded(24) == a.embedded(24) * b.embedded(24));
        CHECK((a + b).embedded(24) == a.embedded(24) + b.embedded(24));
    }
}
