#pragma once

#include "bicross/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bicross {

/// Exponent of an N-th root of unity: the scalar zeta_N^n, 0 <= n < N.
/// Multiplying scalars adds exponents mod N.
struct RootExp {
    int n = 0;
    int N = 1;

    RootExp() = default;
    RootExp(long long n_, int N_);

    RootExp operator*(const RootExp& o) const;
    RootExp inv() const;
    RootExp pow(long long k) const;
    bool operator==(const RootExp&) const = default;
};

/// Coefficients of the N-th cyclotomic polynomial Phi_N, low degree first, monic.
std::vector<BigInt> cyclotomic_poly(int N);

/// Euler phi.
int euler_phi(int N);

/// An element of Q(zeta_N) = Q[X]/(Phi_N), stored as phi(N) rational
/// coefficients in canonical reduced form. Equality is coefficient-wise.
class CycloNum {
public:
    CycloNum() : CycloNum(1) {}
    explicit CycloNum(int N);
    CycloNum(int N, const Rational& constant);

    /// zeta_N^n reduced mod Phi_N. Group homomorphism mu_N -> Q(zeta_N)^x.
    static CycloNum zeta_pow(const RootExp& r);
    static CycloNum from_coeffs(int N, std::vector<Rational> coeffs);
    static CycloNum one(int N) { return CycloNum(N, Rational(1)); }

    int torsion() const { return N_; }
    int degree() const { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    /// Field inverse via extended gcd with Phi_N. Throws on zero.
    CycloNum inverse() const;

    bool operator==(const CycloNum& o) const { return N_ == o.N_ && c_ == o.c_; }
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N |-> zeta_M^{M/N}. Requires N | M.
    CycloNum embedded(int M) const;

    std::string str() const;

private:
    int N_;
    std::vector<Rational> c_;
    void check_same_field(const CycloNum& o) const;
};

} // namespace bicross
