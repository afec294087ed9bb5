#include "bicross/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicross {

IntMat IntMat::identity(long n) {
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("IntMat::mul: shape mismatch");
    IntMat r(rows, o.cols);
    for (long i = 0; i < rows; ++i)
        for (long k = 0; k < cols; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < o.cols; ++j) {
                const BigInt& w = o.at(k, j);
                if (w != 0) r.at(i, j) += v * w;
            }
        }
    return r;
}

IntMat IntMat::hstack(const IntMat& o) const {
    if (rows != o.rows) throw std::invalid_argument("IntMat::hstack: row mismatch");
    IntMat r(rows, cols + o.cols);
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (long j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

IntMat IntMat::column(long c) const {
    IntMat r(rows, 1);
    for (long i = 0; i < rows; ++i) r.at(i, 0) = at(i, c);
    return r;
}

IntMat IntMat::columns(const std::vector<long>& idx) const {
    IntMat r(rows, static_cast<long>(idx.size()));
    for (long j = 0; j < r.cols; ++j)
        for (long i = 0; i < rows; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

namespace {

struct SnfWork {
    IntMat A;
    SmithOptions opt;
    IntMat U, Uinv, V, Vinv;

    explicit SnfWork(IntMat m, const SmithOptions& o) : A(std::move(m)), opt(o) {
        if (opt.want_U) U = IntMat::identity(A.rows);
        if (opt.want_Uinv) Uinv = IntMat::identity(A.rows);
        if (opt.want_V) V = IntMat::identity(A.cols);
        if (opt.want_Vinv) Vinv = IntMat::identity(A.cols);
    }

    // row r1 <- row r1 - q * row r2 ; U <- E U, Uinv <- Uinv E^{-1}
    void row_sub(long r1, long r2, const BigInt& q) {
        if (q == 0) return;
        for (long j = 0; j < A.cols; ++j) A.at(r1, j) -= q * A.at(r2, j);
        if (opt.want_U)
            for (long j = 0; j < U.cols; ++j) U.at(r1, j) -= q * U.at(r2, j);
        if (opt.want_Uinv)
            for (long i = 0; i < Uinv.rows; ++i) Uinv.at(i, r2) += q * Uinv.at(i, r1);
    }

    void row_swap(long r1, long r2) {
        if (r1 == r2) return;
        for (long j = 0; j < A.cols; ++j) std::swap(A.at(r1, j), A.at(r2, j));
        if (opt.want_U)
            for (long j = 0; j < U.cols; ++j) std::swap(U.at(r1, j), U.at(r2, j));
        if (opt.want_Uinv)
            for (long i = 0; i < Uinv.rows; ++i) std::swap(Uinv.at(i, r1), Uinv.at(i, r2));
    }

    void row_negate(long r) {
        for (long j = 0; j < A.cols; ++j) A.at(r, j) = -A.at(r, j);
        if (opt.want_U)
            for (long j = 0; j < U.cols; ++j) U.at(r, j) = -U.at(r, j);
        if (opt.want_Uinv)
            for (long i = 0; i < Uinv.rows; ++i) Uinv.at(i, r) = -Uinv.at(i, r);
    }

    void col_sub(long c1, long c2, const BigInt& q) {
        if (q == 0) return;
        for (long i = 0; i < A.rows; ++i) A.at(i, c1) -= q * A.at(i, c2);
        if (opt.want_V)
            for (long i = 0; i < V.rows; ++i) V.at(i, c1) -= q * V.at(i, c2);
        if (opt.want_Vinv)
            for (long j = 0; j < Vinv.cols; ++j) Vinv.at(c2, j) += q * Vinv.at(c1, j);
    }

    void col_swap(long c1, long c2) {
        if (c1 == c2) return;
        for (long i = 0; i < A.rows; ++i) std::swap(A.at(i, c1), A.at(i, c2));
        if (opt.want_V)
            for (long i = 0; i < V.rows; ++i) std::swap(V.at(i, c1), V.at(i, c2));
        if (opt.want_Vinv)
            for (long j = 0; j < Vinv.cols; ++j) std::swap(Vinv.at(c1, j), Vinv.at(c2, j));
    }

    void col_negate(long c) {
        for (long i = 0; i < A.rows; ++i) A.at(i, c) = -A.at(i, c);
        if (opt.want_V)
            for (long i = 0; i < V.rows; ++i) V.at(i, c) = -V.at(i, c);
        if (opt.want_Vinv)
            for (long j = 0; j < Vinv.cols; ++j) Vinv.at(c, j) = -Vinv.at(c, j);
    }
};

// floor division quotient for the remainder-shrinking step
BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

} // namespace

SmithForm smith_normal_form(IntMat A0, const SmithOptions& opt) {
    SnfWork w(std::move(A0), opt);
    IntMat& A = w.A;
    long n = std::min(A.rows, A.cols);
    long t = 0;

    for (; t < n; ++t) {
        // smallest nonzero pivot in the trailing block
        long pr = -1, pc = -1;
        for (long i = t; i < A.rows; ++i)
            for (long j = t; j < A.cols; ++j) {
                const BigInt& v = A.at(i, j);
                if (v == 0) continue;
                if (pr < 0 || abs(v) < abs(A.at(pr, pc))) { pr = i; pc = j; }
            }
        if (pr < 0) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        // clear row and column t; repeat until clean (remainders can reappear)
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (long i = t + 1; i < A.rows; ++i) {
                if (A.at(i, t) == 0) continue;
                BigInt q = fdiv(A.at(i, t), A.at(t, t));
                w.row_sub(i, t, q);
                if (A.at(i, t) != 0) {  // remainder smaller than pivot: swap up
                    w.row_swap(t, i);
                    dirty = true;
                }
            }
            for (long j = t + 1; j < A.cols; ++j) {
                if (A.at(t, j) == 0) continue;
                BigInt q = fdiv(A.at(t, j), A.at(t, t));
                w.col_sub(j, t, q);
                if (A.at(t, j) != 0) {
                    w.col_swap(t, j);
                    dirty = true;
                }
            }
        }
        if (A.at(t, t) < 0) w.row_negate(t);
    }

    // enforce the divisibility chain d[i] | d[i+1]
    bool changed = true;
    while (changed) {
        changed = false;
        for (long i = 0; i + 1 < t; ++i) {
            if (A.at(i + 1, i + 1) % A.at(i, i) == 0) continue;
            changed = true;
            // standard trick: fold entry (i+1,i+1) into row i, re-reduce the 2x2 block
            w.row_sub(i, i + 1, BigInt(-1));  // row i += row i+1
            // now A(i, i+1) = d_{i+1}; run gcd steps on the 2x2 block
            while (A.at(i, i + 1) != 0 || A.at(i + 1, i) != 0) {
                if (A.at(i, i + 1) != 0) {
                    BigInt q = fdiv(A.at(i, i + 1), A.at(i, i));
                    w.col_sub(i + 1, i, q);
                    if (A.at(i, i + 1) != 0) w.col_swap(i, i + 1);
                }
                if (A.at(i + 1, i) != 0) {
                    BigInt q = fdiv(A.at(i + 1, i), A.at(i, i));
                    w.row_sub(i + 1, i, q);
                    if (A.at(i + 1, i) != 0) w.row_swap(i, i + 1);
                }
            }
            if (A.at(i, i) < 0) w.row_negate(i);
            if (A.at(i + 1, i + 1) < 0) w.row_negate(i + 1);
        }
    }

    SmithForm out;
    out.rank = t;
    out.d.resize(n);
    for (long i = 0; i < n; ++i) out.d[i] = (i < t) ? A.at(i, i) : BigInt(0);
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    return out;
}

IntMat kernel_mod_lattice(const IntMat& A, const BigInt& N) {
    SmithOptions opt;
    opt.want_V = true;
    SmithForm s = smith_normal_form(A, opt);
    // x = V y; A x = 0 mod N  <=>  d[i] y[i] = 0 mod N for i < rank
    IntMat B(A.cols, A.cols);
    for (long j = 0; j < A.cols; ++j) {
        BigInt scale = (j < s.rank) ? N / gcd(s.d[j], N) : BigInt(1);
        for (long i = 0; i < A.cols; ++i) B.at(i, j) = s.V.at(i, j) * scale;
    }
    return B;
}

IntMat kernel_lattice(const IntMat& A) {
    SmithOptions opt;
    opt.want_V = true;
    SmithForm s = smith_normal_form(A, opt);
    std::vector<long> idx;
    for (long j = s.rank; j < A.cols; ++j) idx.push_back(j);
    return s.V.columns(idx);
}

std::optional<std::vector<BigInt>> solve_mod(const IntMat& A, const std::vector<BigInt>& b,
                                             const BigInt& N) {
    if (static_cast<long>(b.size()) != A.rows) throw std::invalid_argument("solve_mod: rhs size");
    SmithOptions opt;
    opt.want_U = true;
    opt.want_V = true;
    SmithForm s = smith_normal_form(A, opt);
    std::vector<BigInt> ub(A.rows, BigInt(0));
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < A.rows; ++j)
            if (s.U.at(i, j) != 0 && b[j] != 0) ub[i] += s.U.at(i, j) * b[j];

    std::vector<BigInt> y(A.cols, BigInt(0));
    for (long i = 0; i < A.rows; ++i) {
        BigInt rhs = ((ub[i] % N) + N) % N;
        if (i >= std::min<long>(s.rank, A.cols)) {
            if (rhs != 0) return std::nullopt;
            continue;
        }
        BigInt g = gcd(s.d[i], N);
        if (rhs % g != 0) return std::nullopt;
        // solve d[i] y = rhs (mod N): y = (rhs/g) * inv(d[i]/g) mod N/g, least nonneg
        BigInt n2 = N / g, d2 = (s.d[i] / g) % n2, r2 = (rhs / g) % n2;
        if (n2 == 1) { y[i] = 0; continue; }
        // modular inverse of d2 mod n2 by extended gcd
        BigInt t0 = 0, t1 = 1, a = n2, c = d2;
        while (c != 0) {
            BigInt q = a / c;
            a -= q * c; std::swap(a, c);
            t0 -= q * t1; std::swap(t0, t1);
        }
        BigInt inv = ((t0 % n2) + n2) % n2;
        y[i] = (r2 * inv) % n2;
    }
    std::vector<BigInt> x(A.cols, BigInt(0));
    for (long i = 0; i < A.cols; ++i) {
        BigInt acc = 0;
        for (long j = 0; j < A.cols; ++j)
            if (s.V.at(i, j) != 0 && y[j] != 0) acc += s.V.at(i, j) * y[j];
        x[i] = ((acc % N) + N) % N;
    }
    return x;
}

IntMat solve_integral(const IntMat& K, const IntMat& B) {
    if (K.rows != K.cols || K.rows != B.rows)
        throw std::invalid_argument("solve_integral: shape mismatch");
    SmithOptions opt;
    opt.want_U = true;
    opt.want_V = true;
    SmithForm s = smith_normal_form(K, opt);
    if (s.rank != K.rows) throw std::invalid_argument("solve_integral: singular lattice basis");
    IntMat ub = s.U.mul(B);
    IntMat y(K.rows, B.cols);
    for (long i = 0; i < K.rows; ++i)
        for (long j = 0; j < B.cols; ++j) {
            if (ub.at(i, j) % s.d[i] != 0)
                throw std::invalid_argument("solve_integral: non-integral solution");
            y.at(i, j) = ub.at(i, j) / s.d[i];
        }
    return s.V.mul(y);
}

IntMat hermite_column_basis(const IntMat& A) {
    IntMat M = A;
    long r = 0;
    for (long i = 0; i < M.rows && r < M.cols; ++i) {
        // gcd-reduce row i across columns r..end
        while (true) {
            long p = -1;
            for (long j = r; j < M.cols; ++j)
                if (M.at(i, j) != 0 && (p < 0 || abs(M.at(i, j)) < abs(M.at(i, p)))) p = j;
            if (p < 0) break;
            if (p != r)
                for (long ii = 0; ii < M.rows; ++ii) std::swap(M.at(ii, p), M.at(ii, r));
            bool clean = true;
            for (long j = r + 1; j < M.cols; ++j) {
                if (M.at(i, j) == 0) continue;
                BigInt q = fdiv(M.at(i, j), M.at(i, r));
                for (long ii = 0; ii < M.rows; ++ii) M.at(ii, j) -= q * M.at(ii, r);
                if (M.at(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (M.at(i, r) != 0) {
            if (M.at(i, r) < 0)
                for (long ii = 0; ii < M.rows; ++ii) M.at(ii, r) = -M.at(ii, r);
            ++r;
        }
    }
    std::vector<long> idx;
    for (long j = 0; j < r; ++j) idx.push_back(j);
    return M.columns(idx);
}

LatticeQuotient lattice_quotient(const IntMat& K, const IntMat& L) {
    IntMat M = solve_integral(K, L);
    SmithOptions opt;
    opt.want_Uinv = true;
    SmithForm s = smith_normal_form(M, opt);
    LatticeQuotient q;
    for (long i = 0; i < K.rows; ++i) {
        BigInt d = (i < static_cast<long>(s.d.size())) ? s.d[i] : BigInt(0);
        if (d == 1) continue;
        q.factors.push_back(d);
        IntMat gen = K.mul(s.Uinv.column(i));
        if (q.generators.rows == 0) q.generators = gen;
        else q.generators = q.generators.hstack(gen);
    }
    return q;
}

} // namespace bicross
