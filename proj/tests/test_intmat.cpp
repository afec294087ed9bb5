#include "doctest.h"

#include "bicross/intmat.hpp"

#include <random>

using namespace bicross;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    IntMat m(static_cast<long>(rows.size()), rows.empty() ? 0 : static_cast<long>(rows[0].size()));
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

IntMat random_mat(std::mt19937_64& rng, long r, long c, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMat m(r, c);
    for (auto& v : m.a) v = d(rng);
    return m;
}

bool is_diag_with(const IntMat& s, const std::vector<BigInt>& d) {
    for (long i = 0; i < s.rows; ++i)
        for (long j = 0; j < s.cols; ++j) {
            BigInt expect = (i == j && i < static_cast<long>(d.size())) ? d[i] : BigInt(0);
            if (s.at(i, j) != expect) return false;
        }
    return true;
}

} // namespace

TEST_CASE("smith normal form of a known matrix") {
    // d1 = gcd of entries = 2, d1*d2 = gcd of 2x2 minors = |8-24| ... = 8 -> (2, 4)
    IntMat A = from_rows({{2, 4}, {6, 8}});
    SmithOptions opt;
    opt.want_U = opt.want_V = opt.want_Uinv = opt.want_Vinv = true;
    auto s = smith_normal_form(A, opt);
    CHECK(s.rank == 2);
    CHECK(s.d == std::vector<BigInt>{2, 4});
    CHECK(is_diag_with(s.U.mul(A).mul(s.V), s.d));
    CHECK(s.U.mul(s.Uinv) == IntMat::identity(2));
    CHECK(s.V.mul(s.Vinv) == IntMat::identity(2));
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 40; ++rep) {
        long r = 1 + static_cast<long>(rng() % 6), c = 1 + static_cast<long>(rng() % 6);
        IntMat A = random_mat(rng, r, c);
        SmithOptions opt;
        opt.want_U = opt.want_V = opt.want_Uinv = opt.want_Vinv = true;
        auto s = smith_normal_form(A, opt);
        CHECK(is_diag_with(s.U.mul(A).mul(s.V), s.d));
        CHECK(s.U.mul(s.Uinv) == IntMat::identity(r));
        CHECK(s.Uinv.mul(s.U) == IntMat::identity(r));
        CHECK(s.V.mul(s.Vinv) == IntMat::identity(c));
        for (long i = 0; i + 1 < s.rank; ++i) CHECK(s.d[i + 1] % s.d[i] == 0);
        for (long i = 0; i < s.rank; ++i) CHECK(s.d[i] > 0);
    }
}

TEST_CASE("integer kernel") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        long r = 1 + static_cast<long>(rng() % 5), c = 1 + static_cast<long>(rng() % 5);
        IntMat A = random_mat(rng, r, c);
        IntMat K = kernel_lattice(A);
        if (K.cols > 0) {
            IntMat AK = A.mul(K);
            for (const auto& v : AK.a) CHECK(v == 0);
        }
        auto s = smith_normal_form(A, {});
        CHECK(K.cols == A.cols - s.rank);
    }
}

TEST_CASE("kernel mod N lattice") {
    // x = (x1,x2) with 2 x1 + 4 x2 = 0 mod 8
    IntMat A = from_rows({{2, 4}});
    BigInt N = 8;
    IntMat K = kernel_mod_lattice(A, N);
    REQUIRE(K.rows == 2);
    REQUIRE(K.cols == 2);
    // full rank; every column solves the congruence; determinant index matches count
    auto s = smith_normal_form(K, {});
    CHECK(s.rank == 2);
    long count = 0;  // brute-force count of solutions mod 8
    for (long x1 = 0; x1 < 8; ++x1)
        for (long x2 = 0; x2 < 8; ++x2)
            if ((2 * x1 + 4 * x2) % 8 == 0) ++count;
    BigInt det = s.d[0] * s.d[1];  // index of lattice in Z^2
    CHECK(BigInt(64) / det == count);
    for (long j = 0; j < K.cols; ++j) {
        BigInt v = 2 * K.at(0, j) + 4 * K.at(1, j);
        CHECK(v % 8 == 0);
    }
}

TEST_CASE("solve mod N") {
    IntMat A = from_rows({{2, 0}, {0, 3}});
    auto sol = solve_mod(A, {BigInt(4), BigInt(0)}, BigInt(6));
    REQUIRE(sol.has_value());
    CHECK(((*sol)[0] * 2) % 6 == 4);
    CHECK(((*sol)[1] * 3) % 6 == 0);

    // zero rhs yields the zero solution, canonically
    auto z = solve_mod(A, {BigInt(0), BigInt(0)}, BigInt(6));
    REQUIRE(z.has_value());
    CHECK((*z)[0] == 0);
    CHECK((*z)[1] == 0);

    // infeasible: 2x = 1 mod 4
    IntMat B = from_rows({{2}});
    CHECK(!solve_mod(B, {BigInt(1)}, BigInt(4)).has_value());

    // randomized solvable systems
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 30; ++rep) {
        long r = 1 + static_cast<long>(rng() % 4), c = 1 + static_cast<long>(rng() % 4);
        IntMat M = random_mat(rng, r, c);
        BigInt N = 2 + static_cast<long>(rng() % 11);
        std::vector<BigInt> x(c);
        for (auto& v : x) v = static_cast<long>(rng() % 13);
        std::vector<BigInt> b(r, BigInt(0));
        for (long i = 0; i < r; ++i) {
            for (long j = 0; j < c; ++j) b[i] += M.at(i, j) * x[j];
            b[i] = ((b[i] % N) + N) % N;
        }
        auto got = solve_mod(M, b, N);
        REQUIRE(got.has_value());
        for (long i = 0; i < r; ++i) {
            BigInt acc = 0;
            for (long j = 0; j < c; ++j) acc += M.at(i, j) * (*got)[j];
            CHECK(((acc - b[i]) % N) == 0);
        }
    }
}

TEST_CASE("lattice quotient invariant factors") {
    // Z^2 / <(2,0),(0,4)> = Z2 + Z4
    IntMat K = IntMat::identity(2);
    IntMat L = from_rows({{2, 0}, {0, 4}});
    auto q = lattice_quotient(K, L);
    CHECK(q.factors == std::vector<BigInt>{2, 4});

    // 2Z x Z / <(4,0),(0,3)>: in basis (2,0),(0,1) the relations are (2,0),(0,3) -> Z2 + Z3
    IntMat K2 = from_rows({{2, 0}, {0, 1}});
    IntMat L2 = from_rows({{4, 0}, {0, 3}});
    auto q2 = lattice_quotient(K2, L2);
    std::vector<BigInt> want{6};  // Z2 + Z3 = Z6 in invariant-factor form
    CHECK(q2.factors == want);
}

TEST_CASE("hermite column basis spans the same lattice") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 25; ++rep) {
        long r = 1 + static_cast<long>(rng() % 4);
        long c = r + static_cast<long>(rng() % 4);
        IntMat A = random_mat(rng, r, c);
        IntMat H = hermite_column_basis(A);
        auto sA = smith_normal_form(A, {});
        CHECK(H.cols == sA.rank);
        // lattice(A) and lattice(H) both sit inside lattice([A|H]); equal Smith
        // invariants under containment force equality of the lattices
        auto sAH = smith_normal_form(A.hstack(H), {});
        auto sH = smith_normal_form(H, {});
        auto invs = [](const SmithForm& s) {
            return std::vector<BigInt>(s.d.begin(), s.d.begin() + s.rank);
        };
        CHECK(invs(sAH) == invs(sA));
        CHECK(invs(sAH) == invs(sH));
    }
}
