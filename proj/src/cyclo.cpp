#include "bicross/cyclo.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace bicross {

RootExp::RootExp(long long n_, int N_) {
    if (N_ < 1) throw std::invalid_argument("RootExp: torsion order must be positive");
    N = N_;
    n = static_cast<int>(imod(n_, N_));
}

RootExp RootExp::operator*(const RootExp& o) const {
    if (N != o.N) throw std::invalid_argument("RootExp: mixed torsion orders");
    return RootExp(static_cast<long long>(n) + o.n, N);
}

RootExp RootExp::inv() const { return RootExp(-static_cast<long long>(n), N); }

RootExp RootExp::pow(long long k) const {
    return RootExp(static_cast<long long>(n) * k % N, N);
}

int euler_phi(int N) {
    int result = N, n = N;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// dense integer polynomials, low degree first
using IPoly = std::vector<BigInt>;

IPoly ipoly_trim(IPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// exact division, caller guarantees divisibility
IPoly ipoly_div(IPoly a, const IPoly& b) {
    a = ipoly_trim(a);
    IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
    while (a.size() >= b.size() && !a.empty()) {
        BigInt lead = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        a = ipoly_trim(a);
    }
    return q;
}

} // namespace

std::vector<BigInt> cyclotomic_poly(int N) {
    static std::map<int, IPoly> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    // X^N - 1 divided by the product of Phi_d over proper divisors d
    IPoly p(N + 1, BigInt(0));
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) p = ipoly_div(p, cyclotomic_poly(d));
    cache[N] = p;
    return p;
}

namespace {

// Per-N arithmetic context: Phi_N and reduction rows for X^k, k < max(N, 2deg-1).
struct CycloContext {
    int N = 1;
    int deg = 1;
    std::vector<Rational> phi;                 // Phi_N as rationals, monic
    std::vector<std::vector<Rational>> xpow;   // xpow[k] = X^k mod Phi_N, size deg
};

const CycloContext& cyclo_context(int N) {
    static std::map<int, CycloContext> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    CycloContext ctx;
    ctx.N = N;
    auto ip = cyclotomic_poly(N);
    ctx.deg = static_cast<int>(ip.size()) - 1;
    ctx.phi.assign(ip.begin(), ip.end());

    int kmax = std::max(N, 2 * ctx.deg - 1);
    ctx.xpow.resize(kmax);
    std::vector<Rational> cur(ctx.deg, Rational(0));
    cur[0] = 1;
    ctx.xpow[0] = cur;
    for (int k = 1; k < kmax; ++k) {
        // multiply by X, reduce the overflow coefficient with X^deg = -(low part of Phi)
        Rational top = cur[ctx.deg - 1];
        for (int i = ctx.deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (!top.is_zero())
            for (int i = 0; i < ctx.deg; ++i) cur[i] -= top * ctx.phi[i];
        ctx.xpow[k] = cur;
    }
    return cache[N] = ctx;
}

} // namespace

CycloNum::CycloNum(int N) : N_(N) {
    if (N < 1) throw std::invalid_argument("CycloNum: torsion order must be positive");
    c_.assign(cyclo_context(N).deg, Rational(0));
}

CycloNum::CycloNum(int N, const Rational& constant) : CycloNum(N) { c_[0] = constant; }

CycloNum CycloNum::zeta_pow(const RootExp& r) {
    CycloNum z(r.N);
    z.c_ = cyclo_context(r.N).xpow[r.n];
    return z;
}

CycloNum CycloNum::from_coeffs(int N, std::vector<Rational> coeffs) {
    const auto& ctx = cyclo_context(N);
    CycloNum z(N);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (static_cast<int>(k) < ctx.deg) {
            z.c_[k] += coeffs[k];
        } else {
            if (k >= ctx.xpow.size())
                throw std::invalid_argument("CycloNum::from_coeffs: degree out of range");
            const auto& row = ctx.xpow[k];
            for (int i = 0; i < ctx.deg; ++i) z.c_[i] += coeffs[k] * row[i];
        }
    }
    return z;
}

void CycloNum::check_same_field(const CycloNum& o) const {
    if (N_ != o.N_) throw std::invalid_argument("CycloNum: mixed cyclotomic fields");
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycloNum::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    check_same_field(o);
    CycloNum r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
    check_same_field(o);
    CycloNum r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycloNum CycloNum::operator-() const {
    CycloNum r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    check_same_field(o);
    const auto& ctx = cyclo_context(N_);
    int d = ctx.deg;
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    CycloNum r(N_);
    for (int i = 0; i < d; ++i) r.c_[i] = prod[i];
    for (int k = d; k < 2 * d - 1; ++k) {
        if (prod[k].is_zero()) continue;
        const auto& row = ctx.xpow[k];
        for (int i = 0; i < d; ++i) r.c_[i] += prod[k] * row[i];
    }
    return r;
}

namespace {

// rational polynomials, low degree first, for the extended gcd
using RPoly = std::vector<Rational>;

RPoly rpoly_trim(RPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

RPoly rpoly_sub_scaled(RPoly a, const RPoly& b, const Rational& s, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    return rpoly_trim(std::move(a));
}

// returns (q, r) with a = q b + r, deg r < deg b
std::pair<RPoly, RPoly> rpoly_divmod(RPoly a, const RPoly& b) {
    a = rpoly_trim(std::move(a));
    RPoly q;
    while (a.size() >= b.size() && !a.empty()) {
        Rational s = a.back() / b.back();
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] = s;
        a = rpoly_sub_scaled(std::move(a), b, s, shift);
    }
    return {q, a};
}

} // namespace

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNum: division by zero");
    const auto& ctx = cyclo_context(N_);
    // extended Euclid: s*a + t*Phi = gcd = const (Phi irreducible over Q)
    RPoly r0(ctx.phi.begin(), ctx.phi.end());
    RPoly r1 = rpoly_trim(c_);
    RPoly s0 = {};          // coefficient of `a` in r0
    RPoly s1 = {Rational(1)};
    while (true) {
        auto [q, rem] = rpoly_divmod(r0, r1);
        if (rem.empty()) break;
        // s_next = s0 - q * s1
        RPoly snext = s0;
        for (size_t i = 0; i < q.size(); ++i)
            if (!q[i].is_zero()) snext = rpoly_sub_scaled(std::move(snext), s1, q[i], i);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    if (r1.size() != 1)
        throw std::logic_error("CycloNum: gcd with Phi_N not constant (non-invertible element?)");
    Rational g = r1[0];
    for (auto& x : s1) x /= g;
    return from_coeffs(N_, s1);
}

CycloNum CycloNum::embedded(int M) const {
    if (M % N_ != 0) throw std::invalid_argument("CycloNum::embedded: N must divide M");
    if (M == N_) return *this;
    int step = M / N_;
    CycloNum r(M);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        CycloNum mono = zeta_pow(RootExp(static_cast<long long>(i) * step, M));
        for (int j = 0; j < r.degree(); ++j) r.c_[j] += c_[i] * mono.coeffs()[j];
    }
    return r;
}

std::string CycloNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*z" << N_ << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace bicross
