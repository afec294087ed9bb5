#include "bicross/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicross {

SparseVec sparse_normalize(std::map<int, CycloNum> acc) {
    SparseVec v;
    for (auto& [i, c] : acc)
        if (!c.is_zero()) v.emplace_back(i, std::move(c));
    return v;
}

SparseVec sparse_from_dense(const std::vector<CycloNum>& v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
    return s;
}

std::vector<CycloNum> dense_from_sparse(const SparseVec& v, int dim, int N) {
    std::vector<CycloNum> d(dim, CycloNum(N));
    for (const auto& [i, c] : v) d[i] = c;
    return d;
}

namespace {

/// reusable dense accumulator with a touched list, for hot verification loops
struct DenseAccum {
    std::vector<CycloNum> val;
    std::vector<char> used;
    std::vector<long> touched;
    int N;

    DenseAccum(long size, int torsion) : val(size, CycloNum(torsion)), used(size, 0), N(torsion) {}

    void clear() {
        for (long i : touched) {
            val[i] = CycloNum(N);
            used[i] = 0;
        }
        touched.clear();
    }

    void add(long i, const CycloNum& c) {
        if (!used[i]) {
            used[i] = 1;
            touched.push_back(i);
        }
        val[i] += c;
    }

    void add_mul(long i, const CycloNum& c1, const CycloNum& c2) { add(i, c1 * c2); }

    bool equals(const DenseAccum& o) const {
        for (long i : touched)
            if (!val[i].is_zero() && (!o.used[i] || !(o.val[i] == val[i]))) return false;
        for (long i : o.touched)
            if (!o.val[i].is_zero() && (!used[i] || !(val[i] == o.val[i]))) return false;
        return true;
    }

    bool is_dense_vector(const std::vector<CycloNum>& v) const {
        for (size_t i = 0; i < v.size(); ++i) {
            const CycloNum& have = used[i] ? val[i] : CycloNum(N);
            if (!(have == v[i])) return false;
        }
        return true;
    }
};

void elt_add(SparseElt& out, long idx, const CycloNum& c) {
    auto it = out.find(idx);
    if (it == out.end()) {
        if (!c.is_zero()) out.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
}

} // namespace

CMat::CMat(int r, int c, int torsion) : rows(r), cols(c), N(torsion) {
    a.assign(static_cast<size_t>(r) * c, CycloNum(torsion));
}

CMat CMat::identity(int n, int torsion) {
    CMat m(n, n, torsion);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycloNum::one(torsion);
    return m;
}

CMat CMat::mul(const CMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("CMat::mul: shape mismatch");
    CMat r(rows, o.cols, N);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const CycloNum& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const CycloNum& w = o.at(k, j);
                if (!w.is_zero()) r.at(i, j) += v * w;
            }
        }
    return r;
}

std::vector<CycloNum> CMat::apply(const std::vector<CycloNum>& v) const {
    std::vector<CycloNum> r(rows, CycloNum(N));
    for (int j = 0; j < cols; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows; ++i)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    }
    return r;
}

namespace {

// Gaussian elimination in place; returns pivot columns. If rhs != nullptr it is
// carried along (augmented).
std::vector<int> eliminate(CMat& m, std::vector<CycloNum>* rhs) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
            if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
        }
        CycloNum inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        if (rhs) (*rhs)[row] *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            CycloNum f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
            if (rhs) (*rhs)[i] -= f * (*rhs)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int CMat::rank() const {
    CMat m = *this;
    return static_cast<int>(eliminate(m, nullptr).size());
}

std::optional<CMat> CMat::inverse() const {
    if (rows != cols) throw std::invalid_argument("CMat::inverse: not square");
    CMat aug(rows, 2 * cols, N);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols + i) = CycloNum::one(N);
    }
    auto piv = eliminate(aug, nullptr);
    if (static_cast<int>(piv.size()) != rows) return std::nullopt;
    CMat inv(rows, cols, N);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) inv.at(i, j) = aug.at(i, cols + j);
    return inv;
}

CMat CMat::null_space() const {
    CMat m = *this;
    auto piv = eliminate(m, nullptr);
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < cols; ++c) {
            if (pi < piv.size() && piv[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    CMat ns(cols, static_cast<int>(free_cols.size()), N);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        ns.at(fc, static_cast<int>(k)) = CycloNum::one(N);
        for (size_t r = 0; r < piv.size(); ++r)
            ns.at(piv[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
    }
    return ns;
}

std::optional<std::vector<CycloNum>> CMat::solve(const std::vector<CycloNum>& b) const {
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("CMat::solve: rhs size");
    CMat m = *this;
    std::vector<CycloNum> r = b;
    auto piv = eliminate(m, &r);
    for (int i = static_cast<int>(piv.size()); i < rows; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    std::vector<CycloNum> x(cols, CycloNum(N));
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r[k];
    return x;
}

std::optional<CMat> CMat::solve_many(const CMat& B) const {
    if (B.rows != rows) throw std::invalid_argument("CMat::solve_many: rhs rows");
    CMat aug(rows, cols + B.cols, N);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
        for (int j = 0; j < B.cols; ++j) aug.at(i, cols + j) = B.at(i, j);
    }
    // eliminate using only the left block for pivots
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (!aug.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(p, j), aug.at(row, j));
        CycloNum inv = aug.at(row, col).inverse();
        for (int j = col; j < aug.cols; ++j) aug.at(row, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            CycloNum f = aug.at(i, col);
            for (int j = col; j < aug.cols; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    for (int i = static_cast<int>(piv.size()); i < rows; ++i)
        for (int j = 0; j < B.cols; ++j)
            if (!aug.at(i, cols + j).is_zero()) return std::nullopt;
    CMat X(cols, B.cols, N);
    for (size_t k = 0; k < piv.size(); ++k)
        for (int j = 0; j < B.cols; ++j) X.at(piv[k], j) = aug.at(static_cast<int>(k), cols + j);
    return X;
}

std::vector<CycloNum> StructureAlgebra::apply_left(const std::vector<CycloNum>& x,
                                                   const std::vector<CycloNum>& y) const {
    std::vector<CycloNum> r(dim, CycloNum(N));
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            CycloNum f = x[i] * y[j];
            for (const auto& [k, c] : prod(i, j)) r[k] += f * c;
        }
    }
    return r;
}

SparseElt StructureAlgebra::tensor_mul(int k, const SparseElt& A, const SparseElt& B) const {
    SparseElt out;
    std::vector<int> ia(k), ib(k);
    for (const auto& [idxa, ca] : A)
        for (const auto& [idxb, cb] : B) {
            long ra = idxa, rb = idxb;
            for (int leg = k - 1; leg >= 0; --leg) {
                ia[leg] = static_cast<int>(ra % dim);
                ra /= dim;
                ib[leg] = static_cast<int>(rb % dim);
                rb /= dim;
            }
            // expand the product leg by leg
            std::vector<std::pair<long, CycloNum>> partial = {{0L, ca * cb}};
            for (int leg = 0; leg < k && !partial.empty(); ++leg) {
                const SparseVec& pv = prod(ia[leg], ib[leg]);
                std::vector<std::pair<long, CycloNum>> next;
                next.reserve(partial.size() * pv.size());
                for (const auto& [pidx, pc] : partial)
                    for (const auto& [t, c] : pv) next.emplace_back(pidx * dim + t, pc * c);
                partial = std::move(next);
            }
            for (auto& [idx, c] : partial) elt_add(out, idx, c);
        }
    return out;
}

SparseElt StructureHopf::comult_elt(int i) const {
    SparseElt e;
    for (const auto& [j, k, c] : comult[i]) elt_add(e, static_cast<long>(j) * dim() + k, c);
    return e;
}

Report verify_algebra(const StructureAlgebra& A) {
    Report rep;
    rep.subject = "algebra";
    int d = A.dim;
    DenseAccum lhs(d, A.N), rhs(d, A.N);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                ++rep.checks;
                lhs.clear();
                rhs.clear();
                for (const auto& [t, c] : A.prod(i, j))
                    for (const auto& [l, c2] : A.prod(t, k)) lhs.add_mul(l, c, c2);
                for (const auto& [t, c] : A.prod(j, k))
                    for (const auto& [l, c2] : A.prod(i, t)) rhs.add_mul(l, c, c2);
                if (!lhs.equals(rhs)) rep.add("(e_i e_j) e_k = e_i (e_j e_k)", {i, j, k});
            }
    // unit laws
    std::vector<CycloNum> basis_vec(d, CycloNum(A.N));
    DenseAccum acc(d, A.N);
    for (int i = 0; i < d; ++i) {
        acc.clear();
        for (int j = 0; j < d; ++j) {
            if (A.unit[j].is_zero()) continue;
            for (const auto& [k, c] : A.prod(j, i)) acc.add_mul(k, A.unit[j], c);
        }
        basis_vec.assign(d, CycloNum(A.N));
        basis_vec[i] = CycloNum::one(A.N);
        ++rep.checks;
        if (!acc.is_dense_vector(basis_vec)) rep.add("1 * e_i = e_i", {i});
        acc.clear();
        for (int j = 0; j < d; ++j) {
            if (A.unit[j].is_zero()) continue;
            for (const auto& [k, c] : A.prod(i, j)) acc.add_mul(k, A.unit[j], c);
        }
        ++rep.checks;
        if (!acc.is_dense_vector(basis_vec)) rep.add("e_i * 1 = e_i", {i});
    }
    return rep;
}

Report verify_coalgebra(const StructureHopf& H) {
    Report rep;
    rep.subject = "coalgebra";
    int d = H.dim();
    int N = H.torsion();
    long d2 = static_cast<long>(d) * d;
    DenseAccum lhs(d2 * d, N), rhs(d2 * d, N);
    for (int i = 0; i < d; ++i) {
        ++rep.checks;
        lhs.clear();
        rhs.clear();
        for (const auto& [j, k, c] : H.comult[i]) {
            for (const auto& [a, b, c2] : H.comult[j])
                lhs.add_mul((static_cast<long>(a) * d + b) * d + k, c, c2);
            for (const auto& [a, b, c2] : H.comult[k])
                rhs.add_mul((static_cast<long>(j) * d + a) * d + b, c, c2);
        }
        if (!lhs.equals(rhs)) rep.add("coassociativity", {i});
    }
    DenseAccum acc(d, N);
    std::vector<CycloNum> basis_vec(d, CycloNum(N));
    for (int i = 0; i < d; ++i) {
        basis_vec.assign(d, CycloNum(N));
        basis_vec[i] = CycloNum::one(N);
        acc.clear();
        for (const auto& [j, k, c] : H.comult[i]) acc.add_mul(k, H.counit[j], c);
        ++rep.checks;
        if (!acc.is_dense_vector(basis_vec)) rep.add("(eps x id) Delta = id", {i});
        acc.clear();
        for (const auto& [j, k, c] : H.comult[i]) acc.add_mul(j, H.counit[k], c);
        ++rep.checks;
        if (!acc.is_dense_vector(basis_vec)) rep.add("(id x eps) Delta = id", {i});
    }
    return rep;
}

Report verify_bialgebra(const StructureHopf& H) {
    Report rep = verify_algebra(H.alg);
    rep.subject = "bialgebra";
    rep.merge(verify_coalgebra(H));
    int d = H.dim();
    int N = H.torsion();
    long d2 = static_cast<long>(d) * d;
    DenseAccum lhs(d2, N), rhs(d2, N);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ++rep.checks;
            lhs.clear();
            rhs.clear();
            for (const auto& [t, c] : H.alg.prod(i, j))
                for (const auto& [a, b, c2] : H.comult[t])
                    lhs.add_mul(static_cast<long>(a) * d + b, c, c2);
            for (const auto& [a1, b1, c1] : H.comult[i])
                for (const auto& [a2, b2, c2] : H.comult[j]) {
                    CycloNum f = c1 * c2;
                    for (const auto& [p, cp] : H.alg.prod(a1, a2))
                        for (const auto& [q, cq] : H.alg.prod(b1, b2))
                            rhs.add(static_cast<long>(p) * d + q, f * cp * cq);
                }
            if (!lhs.equals(rhs)) rep.add("Delta(e_i e_j) = Delta(e_i) Delta(e_j)", {i, j});
            // counit is an algebra map
            ++rep.checks;
            CycloNum eps_prod(N);
            for (const auto& [t, c] : H.alg.prod(i, j)) eps_prod += c * H.counit[t];
            if (!(eps_prod == H.counit[i] * H.counit[j]))
                rep.add("eps(e_i e_j) = eps(e_i) eps(e_j)", {i, j});
        }
    // Delta(1) = 1 x 1 and eps(1) = 1
    {
        DenseAccum d1(d2, N);
        for (int i = 0; i < d; ++i) {
            if (H.alg.unit[i].is_zero()) continue;
            for (const auto& [a, b, c] : H.comult[i])
                d1.add_mul(static_cast<long>(a) * d + b, H.alg.unit[i], c);
        }
        DenseAccum uu(d2, N);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                if (H.alg.unit[a].is_zero() || H.alg.unit[b].is_zero()) continue;
                uu.add(static_cast<long>(a) * d + b, H.alg.unit[a] * H.alg.unit[b]);
            }
        ++rep.checks;
        if (!d1.equals(uu)) rep.add("Delta(1) = 1 x 1", {});
        CycloNum e1(N);
        for (int i = 0; i < d; ++i) e1 += H.alg.unit[i] * H.counit[i];
        ++rep.checks;
        if (!e1.is_one()) rep.add("eps(1) = 1", {});
    }
    return rep;
}

Report verify_antipode(const StructureHopf& H) {
    Report rep;
    rep.subject = "antipode";
    if (!H.antipode) {
        rep.add("antipode present", {});
        return rep;
    }
    const CMat& S = *H.antipode;
    int d = H.dim();
    int N = H.torsion();
    DenseAccum acc(d, N);
    std::vector<CycloNum> want(d, CycloNum(N));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) want[j] = H.counit[i] * H.alg.unit[j];
        acc.clear();
        for (const auto& [a, b, c] : H.comult[i])
            for (int t = 0; t < d; ++t) {
                if (S.at(t, a).is_zero()) continue;
                CycloNum f = c * S.at(t, a);
                for (const auto& [k, ck] : H.alg.prod(t, b)) acc.add(k, f * ck);
            }
        ++rep.checks;
        if (!acc.is_dense_vector(want)) rep.add("m(S x id)Delta = u eps", {i});
        acc.clear();
        for (const auto& [a, b, c] : H.comult[i])
            for (int t = 0; t < d; ++t) {
                if (S.at(t, b).is_zero()) continue;
                CycloNum f = c * S.at(t, b);
                for (const auto& [k, ck] : H.alg.prod(a, t)) acc.add(k, f * ck);
            }
        ++rep.checks;
        if (!acc.is_dense_vector(want)) rep.add("m(id x S)Delta = u eps", {i});
    }
    return rep;
}

Report verify_hopf(const StructureHopf& H) {
    Report rep = verify_bialgebra(H);
    rep.subject = "hopf algebra";
    if (H.antipode) rep.merge(verify_antipode(H));
    return rep;
}

namespace {

CMat convolve(const StructureHopf& H, const CMat& f, const CMat& g) {
    int d = H.dim();
    CMat r(d, d, H.torsion());
    std::vector<CycloNum> fa(d), gb(d);
    for (int k = 0; k < d; ++k) {
        for (const auto& [a, b, c] : H.comult[k]) {
            for (int t = 0; t < d; ++t) {
                fa[t] = f.at(t, a);
                gb[t] = g.at(t, b);
            }
            auto prod = H.alg.apply_left(fa, gb);
            for (int t = 0; t < d; ++t)
                if (!prod[t].is_zero()) r.at(t, k) += c * prod[t];
        }
    }
    return r;
}

} // namespace

std::optional<CMat> solve_antipode(const StructureHopf& B) {
    int d = B.dim();
    int N = B.torsion();
    long d2 = static_cast<long>(d) * d;

    // convolution powers of the identity
    CMat ueps(d, d, N);
    for (int k = 0; k < d; ++k)
        for (int t = 0; t < d; ++t) ueps.at(t, k) = B.counit[k] * B.alg.unit[t];
    std::vector<CMat> powers = {ueps, CMat::identity(d, N)};

    // incremental echelon with coefficient tracking over the original powers
    struct Row {
        std::vector<CycloNum> vec;     // reduced matrix, vectorized
        std::vector<CycloNum> coeffs;  // expression in powers
        long pivot;
    };
    std::vector<Row> echelon;

    // seed the echelon with the convolution unit so dependencies can reach it
    {
        std::vector<CycloNum> v0 = powers[0].a;
        long piv0 = -1;
        for (long i = 0; i < d2; ++i)
            if (!v0[i].is_zero()) { piv0 = i; break; }
        if (piv0 < 0) throw std::invalid_argument("solve_antipode: zero counit/unit");
        CycloNum inv0 = v0[piv0].inverse();
        for (auto& x : v0) x *= inv0;
        echelon.push_back({std::move(v0), {inv0}, piv0});
    }

    for (long step = 0;; ++step) {
        if (step > d2 + 1) throw std::logic_error("solve_antipode: minimal polynomial overflow");
        const CMat& cur = powers.back();
        std::vector<CycloNum> v = cur.a;
        std::vector<CycloNum> coeff(powers.size(), CycloNum(N));
        coeff.back() = CycloNum::one(N);
        for (const auto& row : echelon) {
            if (v[row.pivot].is_zero()) continue;
            CycloNum f = v[row.pivot];
            for (long i = 0; i < d2; ++i)
                if (!row.vec[i].is_zero()) v[i] -= f * row.vec[i];
            for (size_t i = 0; i < row.coeffs.size(); ++i)
                if (!row.coeffs[i].is_zero()) {
                    if (coeff.size() <= i) coeff.resize(i + 1, CycloNum(N));
                    coeff[i] -= f * row.coeffs[i];
                }
        }
        long piv = -1;
        for (long i = 0; i < d2; ++i)
            if (!v[i].is_zero()) { piv = i; break; }
        if (piv < 0) {
            // dependency: sum coeff[i] * powers[i] = 0 with coeff.back() = 1
            // powers[0] = u eps, powers[i] = id^{*i}; invertible iff coeff[0] != 0
            if (coeff[0].is_zero()) return std::nullopt;
            // id * X = u eps with X = -(1/c0) sum_{i>=1} coeff[i] id^{*(i-1)}
            CycloNum inv_c0 = -(coeff[0].inverse());
            CMat S(d, d, N);
            for (size_t i = 1; i < coeff.size(); ++i) {
                if (coeff[i].is_zero()) continue;
                const CMat& p = powers[i - 1];
                CycloNum f = inv_c0 * coeff[i];
                for (long t = 0; t < d2; ++t)
                    if (!p.a[t].is_zero()) S.a[t] += f * p.a[t];
            }
            // the convolution inverse is the antipode; check both laws
            StructureHopf check = B;
            check.antipode = S;
            if (!verify_antipode(check).pass()) return std::nullopt;
            return S;
        }
        CycloNum inv = v[piv].inverse();
        for (auto& x : v) x *= inv;
        for (auto& x : coeff) x *= inv;
        echelon.push_back({std::move(v), std::move(coeff), piv});
        powers.push_back(convolve(B, powers.back(), powers[1]));
    }
}

std::optional<CMat> solve_antipode_dense(const StructureHopf& B) {
    int d = B.dim();
    int N = B.torsion();
    int n = d * d;  // unknowns s_{t,j}, flattened t*d + j
    CMat M(n, n, N);
    std::vector<CycloNum> rhs(n, CycloNum(N));
    // equations: for each k, l: sum_{(a,b,c) in Delta(e_k)} c sum_t s_{t,a} coeff_l(e_t e_b)
    //            = eps(e_k) unit_l
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) rhs[k * d + l] = B.counit[k] * B.alg.unit[l];
        for (const auto& [a, b, c] : B.comult[k])
            for (int t = 0; t < d; ++t)
                for (const auto& [l, cl] : B.alg.prod(t, b)) M.at(k * d + l, t * d + a) += c * cl;
    }
    auto sol = M.solve(rhs);
    if (!sol) return std::nullopt;
    CMat S(d, d, N);
    for (int t = 0; t < d; ++t)
        for (int j = 0; j < d; ++j) S.at(t, j) = (*sol)[t * d + j];
    StructureHopf check = B;
    check.antipode = S;
    if (!verify_antipode(check).pass()) return std::nullopt;
    return S;
}

StructureHopf dual(const StructureHopf& H) {
    int d = H.dim();
    int N = H.torsion();
    StructureHopf D;
    D.alg.dim = d;
    D.alg.N = N;
    D.alg.mult.assign(static_cast<size_t>(d) * d, {});
    std::vector<std::map<int, CycloNum>> acc(static_cast<size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (const auto& [i, j, c] : H.comult[k]) {
            auto& m = acc[static_cast<size_t>(i) * d + j];
            auto it = m.find(k);
            if (it == m.end()) m.emplace(k, c);
            else it->second += c;
        }
    for (size_t idx = 0; idx < acc.size(); ++idx) D.alg.mult[idx] = sparse_normalize(acc[idx]);
    D.alg.unit = H.counit;
    D.counit = H.alg.unit;
    D.comult.assign(d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& [k, c] : H.alg.prod(i, j)) D.comult[k].emplace_back(i, j, c);
    for (auto& row : D.comult) std::sort(row.begin(), row.end(), [](auto& x, auto& y) {
        return std::pair(std::get<0>(x), std::get<1>(x)) < std::pair(std::get<0>(y), std::get<1>(y));
    });
    if (H.antipode) {
        CMat S(d, d, N);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) S.at(i, j) = H.antipode->at(j, i);
        D.antipode = S;
    }
    return D;
}

StructureHopf op(const StructureHopf& H) {
    StructureHopf O = H;
    for (int i = 0; i < H.dim(); ++i)
        for (int j = 0; j < H.dim(); ++j)
            O.alg.mult[static_cast<size_t>(i) * H.dim() + j] =
                H.alg.mult[static_cast<size_t>(j) * H.dim() + i];
    if (H.antipode) {
        auto inv = H.antipode->inverse();
        if (!inv) throw std::invalid_argument("op: antipode not invertible");
        O.antipode = *inv;
    }
    return O;
}

StructureHopf cop(const StructureHopf& H) {
    StructureHopf O = H;
    for (int i = 0; i < H.dim(); ++i) {
        auto& row = O.comult[i];
        for (auto& [a, b, c] : row) std::swap(a, b);
        std::sort(row.begin(), row.end(), [](auto& x, auto& y) {
            return std::pair(std::get<0>(x), std::get<1>(x)) <
                   std::pair(std::get<0>(y), std::get<1>(y));
        });
    }
    if (H.antipode) {
        auto inv = H.antipode->inverse();
        if (!inv) throw std::invalid_argument("cop: antipode not invertible");
        O.antipode = *inv;
    }
    return O;
}

StructureHopf tensor(const StructureHopf& H1, const StructureHopf& H2) {
    if (H1.torsion() != H2.torsion())
        throw std::invalid_argument("tensor: mixed cyclotomic fields");
    int d1 = H1.dim(), d2 = H2.dim(), d = d1 * d2;
    int N = H1.torsion();
    auto enc = [&](int a, int b) { return a * d2 + b; };
    StructureHopf T;
    T.alg.dim = d;
    T.alg.N = N;
    T.alg.mult.assign(static_cast<size_t>(d) * d, {});
    for (int i1 = 0; i1 < d1; ++i1)
        for (int i2 = 0; i2 < d2; ++i2)
            for (int j1 = 0; j1 < d1; ++j1)
                for (int j2 = 0; j2 < d2; ++j2) {
                    std::map<int, CycloNum> m;
                    for (const auto& [k1, c1] : H1.alg.prod(i1, j1))
                        for (const auto& [k2, c2] : H2.alg.prod(i2, j2)) {
                            auto [it, fresh] = m.emplace(enc(k1, k2), c1 * c2);
                            if (!fresh) it->second += c1 * c2;
                        }
                    T.alg.mult[static_cast<size_t>(enc(i1, i2)) * d + enc(j1, j2)] =
                        sparse_normalize(std::move(m));
                }
    T.alg.unit.assign(d, CycloNum(N));
    T.counit.assign(d, CycloNum(N));
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) {
            T.alg.unit[enc(a, b)] = H1.alg.unit[a] * H2.alg.unit[b];
            T.counit[enc(a, b)] = H1.counit[a] * H2.counit[b];
        }
    T.comult.assign(d, {});
    for (int i1 = 0; i1 < d1; ++i1)
        for (int i2 = 0; i2 < d2; ++i2) {
            auto& row = T.comult[enc(i1, i2)];
            for (const auto& [a1, b1, c1] : H1.comult[i1])
                for (const auto& [a2, b2, c2] : H2.comult[i2])
                    row.emplace_back(enc(a1, a2), enc(b1, b2), c1 * c2);
            std::sort(row.begin(), row.end(), [](auto& x, auto& y) {
                return std::pair(std::get<0>(x), std::get<1>(x)) <
                       std::pair(std::get<0>(y), std::get<1>(y));
            });
        }
    if (H1.antipode && H2.antipode) {
        CMat S(d, d, N);
        for (int i1 = 0; i1 < d1; ++i1)
            for (int j1 = 0; j1 < d1; ++j1)
                for (int i2 = 0; i2 < d2; ++i2)
                    for (int j2 = 0; j2 < d2; ++j2)
                        S.at(enc(i1, i2), enc(j1, j2)) =
                            H1.antipode->at(i1, j1) * H2.antipode->at(i2, j2);
        T.antipode = S;
    }
    return T;
}

namespace {

/// inverse of an element in the tensor-square algebra via its minimal
/// polynomial; nullopt when not invertible
std::optional<SparseElt> tensor_square_inverse(const StructureAlgebra& A, const SparseElt& J) {
    int N = A.N;
    SparseElt unit2;
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) {
            if (A.unit[a].is_zero() || A.unit[b].is_zero()) continue;
            unit2.emplace(static_cast<long>(a) * A.dim + b, A.unit[a] * A.unit[b]);
        }
    std::vector<SparseElt> powers = {unit2, J};
    struct Row {
        SparseElt vec;
        std::vector<CycloNum> coeffs;
        long pivot;
    };
    std::vector<Row> echelon;
    {
        SparseElt v0 = unit2;
        if (v0.empty()) throw std::invalid_argument("tensor_square_inverse: zero unit");
        CycloNum inv0 = v0.begin()->second.inverse();
        for (auto& [i, c] : v0) c *= inv0;
        long piv0 = v0.begin()->first;
        echelon.push_back({std::move(v0), {inv0}, piv0});
    }
    long cap = static_cast<long>(A.dim) * A.dim + 2;
    for (long step = 0; step <= cap; ++step) {
        SparseElt v = powers.back();
        std::vector<CycloNum> coeff(powers.size(), CycloNum(N));
        coeff.back() = CycloNum::one(N);
        for (const auto& row : echelon) {
            auto it = v.find(row.pivot);
            if (it == v.end()) continue;
            CycloNum f = it->second;
            for (const auto& [i, c] : row.vec) elt_add(v, i, -(f * c));
            for (size_t i = 0; i < row.coeffs.size(); ++i)
                if (!row.coeffs[i].is_zero()) coeff[i] -= f * row.coeffs[i];
        }
        if (v.empty()) {
            if (coeff[0].is_zero()) return std::nullopt;
            CycloNum inv_c0 = -(coeff[0].inverse());
            SparseElt X;
            for (size_t i = 1; i < coeff.size(); ++i) {
                if (coeff[i].is_zero()) continue;
                CycloNum f = inv_c0 * coeff[i];
                for (const auto& [idx, c] : powers[i - 1]) elt_add(X, idx, f * c);
            }
            return X;
        }
        long piv = v.begin()->first;
        CycloNum inv = v.begin()->second.inverse();
        for (auto& [i, c] : v) c *= inv;
        for (auto& c : coeff) c *= inv;
        echelon.push_back({std::move(v), std::move(coeff), piv});
        powers.push_back(A.tensor_mul(2, powers.back(), J));
    }
    throw std::logic_error("tensor_square_inverse: minimal polynomial overflow");
}

} // namespace

StructureHopf twist_comult(const StructureHopf& H, const SparseElt& J) {
    int d = H.dim();
    int N = H.torsion();
    // counit normalization (eps x id)J = 1 = (id x eps)J
    std::vector<CycloNum> left(d, CycloNum(N)), right(d, CycloNum(N));
    for (const auto& [idx, c] : J) {
        int a = static_cast<int>(idx / d), b = static_cast<int>(idx % d);
        left[b] += H.counit[a] * c;
        right[a] += H.counit[b] * c;
    }
    if (left != H.alg.unit || right != H.alg.unit)
        throw std::invalid_argument("twist_comult: J fails the counit normalization");

    auto Jinv = tensor_square_inverse(H.alg, J);
    if (!Jinv) throw std::invalid_argument("twist_comult: J is not invertible");

    StructureHopf T = H;
    for (int i = 0; i < d; ++i) {
        SparseElt m = H.alg.tensor_mul(2, J, H.comult_elt(i));
        m = H.alg.tensor_mul(2, m, *Jinv);
        auto& row = T.comult[i];
        row.clear();
        for (const auto& [idx, c] : m)
            row.emplace_back(static_cast<int>(idx / d), static_cast<int>(idx % d), c);
    }
    T.antipode.reset();
    auto rep = verify_bialgebra(T);
    if (!rep.pass())
        throw std::invalid_argument("twist_comult: twisted structure fails bialgebra check: " +
                                    rep.summary());
    T.antipode = solve_antipode(T);
    if (!T.antipode) throw std::invalid_argument("twist_comult: twisted structure has no antipode");
    return T;
}

int center_dimension(const StructureAlgebra& A) {
    int d = A.dim;
    int N = A.N;
    // rows of the commutator system, reduced incrementally
    struct Row {
        std::vector<CycloNum> v;
        int pivot;
    };
    std::vector<Row> echelon;
    std::vector<CycloNum> row(d);
    for (int j = 0; j < d; ++j) {
        for (int l = 0; l < d; ++l) {
            for (auto& x : row) x = CycloNum(N);
            bool nonzero = false;
            for (int i = 0; i < d; ++i) {
                CycloNum v(N);
                for (const auto& [k, c] : A.prod(i, j))
                    if (k == l) v += c;
                for (const auto& [k, c] : A.prod(j, i))
                    if (k == l) v -= c;
                if (!v.is_zero()) {
                    row[i] = v;
                    nonzero = true;
                }
            }
            if (!nonzero) continue;
            // reduce against the echelon
            for (const auto& er : echelon) {
                if (row[er.pivot].is_zero()) continue;
                CycloNum f = row[er.pivot];
                for (int i = 0; i < d; ++i)
                    if (!er.v[i].is_zero()) row[i] -= f * er.v[i];
            }
            int piv = -1;
            for (int i = 0; i < d; ++i)
                if (!row[i].is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            CycloNum inv = row[piv].inverse();
            Row nr{row, piv};
            for (auto& x : nr.v) x *= inv;
            echelon.push_back(std::move(nr));
            if (static_cast<int>(echelon.size()) == d) return 0;
        }
    }
    return d - static_cast<int>(echelon.size());
}

bool is_commutative(const StructureAlgebra& A) {
    for (int i = 0; i < A.dim; ++i)
        for (int j = i + 1; j < A.dim; ++j)
            if (A.prod(i, j) != A.prod(j, i)) return false;
    return true;
}

bool is_cocommutative(const StructureHopf& H) {
    for (int i = 0; i < H.dim(); ++i) {
        auto row = H.comult[i];
        for (auto& [a, b, c] : row) std::swap(a, b);
        std::sort(row.begin(), row.end(), [](auto& x, auto& y) {
            return std::pair(std::get<0>(x), std::get<1>(x)) <
                   std::pair(std::get<0>(y), std::get<1>(y));
        });
        if (row != H.comult[i]) return false;
    }
    return true;
}

bool equal_structure(const StructureHopf& A, const StructureHopf& B) {
    return A.dim() == B.dim() && A.torsion() == B.torsion() && A.alg.mult == B.alg.mult &&
           A.alg.unit == B.alg.unit && A.comult == B.comult && A.counit == B.counit;
}

CMat left_mult_matrix(const StructureAlgebra& A, const std::vector<CycloNum>& x) {
    CMat m(A.dim, A.dim, A.N);
    for (int i = 0; i < A.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < A.dim; ++j)
            for (const auto& [k, c] : A.prod(i, j)) m.at(k, j) += x[i] * c;
    }
    return m;
}

std::vector<CycloNum> left_regular_traces(const StructureAlgebra& A) {
    std::vector<CycloNum> tr(A.dim, CycloNum(A.N));
    for (int t = 0; t < A.dim; ++t)
        for (int k = 0; k < A.dim; ++k)
            for (const auto& [l, c] : A.prod(t, k))
                if (l == k) tr[t] += c;
    return tr;
}

std::optional<std::vector<CycloNum>> canonical_central_element(const StructureAlgebra& A) {
    int d = A.dim;
    auto tr = left_regular_traces(A);
    CMat gram(d, d, A.N);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& [t, c] : A.prod(i, j)) gram.at(i, j) += c * tr[t];
    auto inv = gram.inverse();
    if (!inv) return std::nullopt;
    std::vector<CycloNum> z(d, CycloNum(A.N));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const CycloNum& f = inv->at(k, j);
            if (f.is_zero()) continue;
            for (const auto& [t, c] : A.prod(j, k)) z[t] += f * c;
        }
    return z;
}

Report verify_quasi(const QuasiBialgebra& Q) {
    const StructureHopf& H = Q.h;
    const StructureAlgebra& A = H.alg;
    int d = H.dim();
    Report rep = verify_algebra(A);
    rep.subject = "quasi-bialgebra";

    // counit laws and Delta/eps algebra maps (coassociativity replaced below)
    {
        int N = H.torsion();
        DenseAccum acc(d, N);
        std::vector<CycloNum> basis_vec(d, CycloNum(N));
        for (int i = 0; i < d; ++i) {
            basis_vec.assign(d, CycloNum(N));
            basis_vec[i] = CycloNum::one(N);
            acc.clear();
            for (const auto& [j, k, c] : H.comult[i]) acc.add_mul(k, H.counit[j], c);
            ++rep.checks;
            if (!acc.is_dense_vector(basis_vec)) rep.add("(eps x id) Delta = id", {i});
            acc.clear();
            for (const auto& [j, k, c] : H.comult[i]) acc.add_mul(j, H.counit[k], c);
            ++rep.checks;
            if (!acc.is_dense_vector(basis_vec)) rep.add("(id x eps) Delta = id", {i});
        }
        long d2 = static_cast<long>(d) * d;
        DenseAccum lhs(d2, N), rhs(d2, N);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                ++rep.checks;
                lhs.clear();
                rhs.clear();
                for (const auto& [t, c] : A.prod(i, j))
                    for (const auto& [a, b, c2] : H.comult[t])
                        lhs.add_mul(static_cast<long>(a) * d + b, c, c2);
                for (const auto& [a1, b1, c1] : H.comult[i])
                    for (const auto& [a2, b2, c2] : H.comult[j]) {
                        CycloNum f = c1 * c2;
                        for (const auto& [p, cp] : A.prod(a1, a2))
                            for (const auto& [q, cq] : A.prod(b1, b2))
                                rhs.add(static_cast<long>(p) * d + q, f * cp * cq);
                    }
                if (!lhs.equals(rhs)) rep.add("Delta(e_i e_j) = Delta(e_i) Delta(e_j)", {i, j});
                ++rep.checks;
                CycloNum eps_prod(N);
                for (const auto& [t, c] : A.prod(i, j)) eps_prod += c * H.counit[t];
                if (!(eps_prod == H.counit[i] * H.counit[j]))
                    rep.add("eps(e_i e_j) = eps(e_i) eps(e_j)", {i, j});
            }
    }

    // Phi invertibility: Phi * Phi_inv = 1 x 1 x 1 = Phi_inv * Phi
    {
        SparseElt unit3;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    CycloNum v = A.unit[a] * A.unit[b] * A.unit[c];
                    if (!v.is_zero())
                        unit3.emplace((static_cast<long>(a) * d + b) * d + c, v);
                }
        ++rep.checks;
        if (A.tensor_mul(3, Q.assoc, Q.assoc_inv) != unit3)
            rep.add("Phi Phi^{-1} = 1", {});
        ++rep.checks;
        if (A.tensor_mul(3, Q.assoc_inv, Q.assoc) != unit3)
            rep.add("Phi^{-1} Phi = 1", {});
    }

    // twisted coassociativity: Phi (Delta x id)Delta(h) = (id x Delta)Delta(h) Phi
    for (int i = 0; i < d; ++i) {
        SparseElt lhs3, rhs3;
        for (const auto& [j, k, c] : H.comult[i]) {
            for (const auto& [a, b, c2] : H.comult[j])
                elt_add(lhs3, (static_cast<long>(a) * d + b) * d + k, c * c2);
            for (const auto& [a, b, c2] : H.comult[k])
                elt_add(rhs3, (static_cast<long>(j) * d + a) * d + b, c * c2);
        }
        ++rep.checks;
        if (A.tensor_mul(3, Q.assoc, lhs3) != A.tensor_mul(3, rhs3, Q.assoc))
            rep.add("Phi (Delta x id)Delta = (id x Delta)Delta Phi", {i});
    }

    // pentagon: (1 x Phi)((id x Delta x id)Phi)(Phi x 1)
    //           = ((id x id x Delta)Phi)((Delta x id x id)Phi)
    {
        long stride = static_cast<long>(d);
        SparseElt one_phi, phi_one, idDid, idIdD, dIdId;
        for (const auto& [idx, c] : Q.assoc) {
            long a = idx / (stride * stride), rest = idx % (stride * stride);
            long b = rest / stride, e = rest % stride;
            // 1 x Phi and Phi x 1
            for (int u = 0; u < d; ++u) {
                if (!A.unit[u].is_zero())
                    elt_add(one_phi, ((u * stride + a) * stride + b) * stride + e,
                            A.unit[u] * c);
                if (!A.unit[u].is_zero())
                    elt_add(phi_one, ((a * stride + b) * stride + e) * stride + u,
                            A.unit[u] * c);
            }
            // (id x Delta x id)Phi
            for (const auto& [p, q, c2] : H.comult[static_cast<int>(b)])
                elt_add(idDid, ((a * stride + p) * stride + q) * stride + e, c * c2);
            // (id x id x Delta)Phi
            for (const auto& [p, q, c2] : H.comult[static_cast<int>(e)])
                elt_add(idIdD, ((a * stride + b) * stride + p) * stride + q, c * c2);
            // (Delta x id x id)Phi
            for (const auto& [p, q, c2] : H.comult[static_cast<int>(a)])
                elt_add(dIdId, ((p * stride + q) * stride + b) * stride + e, c * c2);
        }
        SparseElt lhs = A.tensor_mul(4, one_phi, idDid);
        lhs = A.tensor_mul(4, lhs, phi_one);
        SparseElt rhs = A.tensor_mul(4, idIdD, dIdId);
        ++rep.checks;
        if (lhs != rhs) rep.add("pentagon identity for Phi", {});
    }

    // counit triangles: contracting any leg of Phi with eps gives 1 x 1
    {
        int N = H.torsion();
        long d2 = static_cast<long>(d) * d;
        DenseAccum c0(d2, N), c1(d2, N), c2a(d2, N), want(d2, N);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                CycloNum v = A.unit[a] * A.unit[b];
                if (!v.is_zero()) want.add(static_cast<long>(a) * d + b, v);
            }
        for (const auto& [idx, c] : Q.assoc) {
            long a = idx / (static_cast<long>(d) * d), rest = idx % (static_cast<long>(d) * d);
            long b = rest / d, e = rest % d;
            c0.add(b * d + e, H.counit[a] * c);
            c1.add(a * d + e, H.counit[b] * c);
            c2a.add(a * d + b, H.counit[e] * c);
        }
        rep.checks += 3;
        if (!c0.equals(want)) rep.add("(eps x id x id)Phi = 1 x 1", {});
        if (!c1.equals(want)) rep.add("(id x eps x id)Phi = 1 x 1", {});
        if (!c2a.equals(want)) rep.add("(id x id x eps)Phi = 1 x 1", {});
    }
    return rep;
}

} // namespace bicross
