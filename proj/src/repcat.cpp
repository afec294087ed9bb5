#include "bicross/repcat.hpp"

#include <map>
#include <stdexcept>

namespace bicross {

namespace {

CycloNum zeta(int N, long exp) { return CycloNum::zeta_pow(RootExp(exp, N)); }

// local index maps between a factorization and its matched pair
struct FactIndex {
    const ExactFactorization& fact;
    std::map<int, int> fidx, gidx;

    explicit FactIndex(const ExactFactorization& f) : fact(f) {
        for (size_t i = 0; i < f.F.size(); ++i) fidx[f.F[i]] = static_cast<int>(i);
        for (size_t i = 0; i < f.G.size(); ++i) gidx[f.G[i]] = static_cast<int>(i);
    }
    int p_loc(int sig_elt) const { return gidx.at(fact.p(sig_elt)); }      // G index
    int pi_loc(int sig_elt) const { return fidx.at(fact.pi(sig_elt)); }    // F index
};

bool col_equals(const CMat& m, int col, const std::vector<CycloNum>& v) {
    for (int i = 0; i < m.rows; ++i)
        if (!(m.at(i, col) == v[i])) return false;
    return true;
}

std::vector<CycloNum> col_of(const CMat& m, int col) {
    std::vector<CycloNum> v(m.rows, CycloNum(m.N));
    for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, col);
    return v;
}

} // namespace

Report verify_graded(const GradedFModule& V, const PairCocycle& pc) {
    Report rep;
    rep.subject = "graded F-module";
    const MatchedPair& mp = pc.mp;
    int nf = mp.F.order(), ng = mp.G.order(), N = pc.N;
    if (V.N != N || static_cast<int>(V.act.size()) != nf ||
        static_cast<int>(V.grading.size()) != V.dim) {
        rep.add("object shape", {});
        return rep;
    }
    for (int g : V.grading)
        if (g < 0 || g >= ng) {
            rep.add("grading range", {g});
            return rep;
        }
    // v <| 1 = v
    for (int b = 0; b < V.dim; ++b) {
        ++rep.checks;
        std::vector<CycloNum> e(V.dim, CycloNum(N));
        e[b] = CycloNum::one(N);
        if (!col_equals(V.act[mp.F.id()], b, e)) rep.add("v <| 1 = v", {b});
    }
    // (v <| x) <| y = sigma_{|v|}(x,y) v <| xy
    for (int b = 0; b < V.dim; ++b)
        for (int x = 0; x < nf; ++x)
            for (int y = 0; y < nf; ++y) {
                ++rep.checks;
                auto lhs = V.act[y].apply(col_of(V.act[x], b));
                auto rhs = col_of(V.act[mp.F.mul(x, y)], b);
                CycloNum s = zeta(N, pc.sig(V.grading[b], x, y));
                for (auto& c : rhs) c *= s;
                if (lhs != rhs) rep.add("(v <| x) <| y = sigma_{|v|}(x,y) v <| xy", {b, x, y});
            }
    // |v <| x| = |v| <| x
    for (int b = 0; b < V.dim; ++b)
        for (int x = 0; x < nf; ++x) {
            ++rep.checks;
            int want = mp.ract_at(V.grading[b], x);
            for (int r = 0; r < V.dim; ++r)
                if (!V.act[x].at(r, b).is_zero() && V.grading[r] != want) {
                    rep.add("|v <| x| = |v| <| x", {b, x, r});
                    break;
                }
        }
    return rep;
}

Report verify_bimodule(const SigmaBimodule& U, const PairCocycle& pc,
                       const ExactFactorization& fact) {
    Report rep;
    rep.subject = "Sigma-graded F-bimodule";
    const MatchedPair& mp = pc.mp;
    const FiniteGroup& sig = fact.sigma;
    FactIndex ix(fact);
    int nf = mp.F.order(), N = pc.N;
    if (U.N != N || static_cast<int>(U.lact.size()) != nf ||
        static_cast<int>(U.ract.size()) != nf || static_cast<int>(U.grading.size()) != U.dim) {
        rep.add("object shape", {});
        return rep;
    }
    auto identity_col = [&](int b) {
        std::vector<CycloNum> e(U.dim, CycloNum(N));
        e[b] = CycloNum::one(N);
        return e;
    };
    for (int b = 0; b < U.dim; ++b) {
        rep.checks += 2;
        if (!col_equals(U.lact[mp.F.id()], b, identity_col(b))) rep.add("1 -> u = u", {b});
        if (!col_equals(U.ract[mp.F.id()], b, identity_col(b))) rep.add("u <- 1 = u", {b});
    }
    // left action law x -> (y -> u) = xy -> u
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) {
            ++rep.checks;
            if (!(U.lact[x].mul(U.lact[y]) == U.lact[mp.F.mul(x, y)]))
                rep.add("x -> (y -> u) = xy -> u", {x, y});
        }
    // twisted right action (u <- x) <- y = sigma_{p||u||}(x,y) u <- xy
    for (int b = 0; b < U.dim; ++b)
        for (int x = 0; x < nf; ++x)
            for (int y = 0; y < nf; ++y) {
                ++rep.checks;
                auto lhs = U.ract[y].apply(col_of(U.ract[x], b));
                auto rhs = col_of(U.ract[mp.F.mul(x, y)], b);
                CycloNum s = zeta(N, pc.sig(ix.p_loc(U.grading[b]), x, y));
                for (auto& c : rhs) c *= s;
                if (lhs != rhs) rep.add("(u <- x) <- y = sigma_{p||u||}(x,y) u <- xy", {b, x, y});
            }
    // bimodule commutation
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) {
            ++rep.checks;
            if (!(U.lact[x].mul(U.ract[y]) == U.ract[y].mul(U.lact[x])))
                rep.add("x -> (u <- y) = (x -> u) <- y", {x, y});
        }
    // grading law ||x -> u <- y|| = x ||u|| y
    for (int b = 0; b < U.dim; ++b)
        for (int x = 0; x < nf; ++x) {
            ++rep.checks;
            int wantl = sig.mul(fact.F[x], U.grading[b]);
            for (int r = 0; r < U.dim; ++r)
                if (!U.lact[x].at(r, b).is_zero() && U.grading[r] != wantl) {
                    rep.add("||x -> u|| = x||u||", {b, x, r});
                    break;
                }
            ++rep.checks;
            int wantr = sig.mul(U.grading[b], fact.F[x]);
            for (int r = 0; r < U.dim; ++r)
                if (!U.ract[x].at(r, b).is_zero() && U.grading[r] != wantr) {
                    rep.add("||u <- y|| = ||u||y", {b, x, r});
                    break;
                }
        }
    return rep;
}

Report verify_right_module(const RightModule& M, const StructureHopf& A) {
    Report rep;
    rep.subject = "right module";
    int da = A.dim();
    if (static_cast<int>(M.size()) != da) {
        rep.add("module shape", {});
        return rep;
    }
    int dv = M[0].rows;
    // v . 1 = v
    CMat one(dv, dv, A.torsion());
    for (int m = 0; m < da; ++m) {
        if (A.alg.unit[m].is_zero()) continue;
        for (int i = 0; i < dv; ++i)
            for (int j = 0; j < dv; ++j) one.at(i, j) += A.alg.unit[m] * M[m].at(i, j);
    }
    ++rep.checks;
    if (!(one == CMat::identity(dv, A.torsion()))) rep.add("v . 1 = v", {});
    // (v . e_m) . e_k = v . (e_m e_k)
    for (int m = 0; m < da; ++m)
        for (int k = 0; k < da; ++k) {
            ++rep.checks;
            CMat lhs = M[k].mul(M[m]);
            CMat rhs(dv, dv, A.torsion());
            for (const auto& [t, c] : A.alg.prod(m, k))
                for (int i = 0; i < dv; ++i)
                    for (int j = 0; j < dv; ++j) rhs.at(i, j) += c * M[t].at(i, j);
            if (!(lhs == rhs)) rep.add("(v.a).b = v.(ab)", {m, k});
        }
    return rep;
}

RightModule right_regular_module(const StructureHopf& A) {
    int d = A.dim();
    RightModule M(d, CMat(d, d, A.torsion()));
    for (int m = 0; m < d; ++m)
        for (int b = 0; b < d; ++b)
            for (const auto& [k, c] : A.alg.prod(b, m)) M[m].at(k, b) += c;
    return M;
}

GradedFModule module_from_rep(const RightModule& M, const PairCocycle& pc) {
    const MatchedPair& mp = pc.mp;
    int nf = mp.F.order(), ng = mp.G.order(), N = pc.N;
    BicrossedBasis basis{ng, nf};
    if (static_cast<int>(M.size()) != basis.dim())
        throw std::invalid_argument("module_from_rep: module over the wrong algebra");
    int dv = M[0].rows;
    GradedFModule V;
    V.dim = dv;
    V.N = N;
    V.grading.assign(dv, -1);
    for (int b = 0; b < dv; ++b) {
        for (int g = 0; g < ng; ++g) {
            const CMat& P = M[basis.index(g, mp.F.id())];
            bool fixes = true;
            for (int r = 0; r < dv; ++r) {
                const CycloNum& want = (r == b) ? CycloNum::one(N) : CycloNum(N);
                if (!(P.at(r, b) == want)) { fixes = false; break; }
            }
            if (fixes) {
                if (V.grading[b] != -1)
                    throw std::invalid_argument("module_from_rep: ambiguous grading at basis " +
                                                std::to_string(b));
                V.grading[b] = g;
            }
        }
        if (V.grading[b] == -1)
            throw std::invalid_argument(
                "module_from_rep: basis is not split by the delta idempotents (vector " +
                std::to_string(b) + ")");
    }
    V.act.assign(nf, CMat(dv, dv, N));
    for (int x = 0; x < nf; ++x)
        for (int b = 0; b < dv; ++b) {
            const CMat& R = M[basis.index(V.grading[b], x)];
            for (int r = 0; r < dv; ++r) V.act[x].at(r, b) = R.at(r, b);
        }
    return V;
}

RightModule rep_from_module(const GradedFModule& V, const PairCocycle& pc) {
    const MatchedPair& mp = pc.mp;
    int nf = mp.F.order(), ng = mp.G.order(), N = pc.N;
    BicrossedBasis basis{ng, nf};
    RightModule M(basis.dim(), CMat(V.dim, V.dim, N));
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x) {
            CMat& R = M[basis.index(g, x)];
            for (int b = 0; b < V.dim; ++b) {
                if (V.grading[b] != g) continue;
                for (int r = 0; r < V.dim; ++r) R.at(r, b) = V.act[x].at(r, b);
            }
        }
    return M;
}

GradedFModule tensor_graded(const GradedFModule& V, const GradedFModule& W,
                            const PairCocycle& pc) {
    const MatchedPair& mp = pc.mp;
    int nf = mp.F.order(), N = pc.N;
    GradedFModule T;
    T.dim = V.dim * W.dim;
    T.N = N;
    T.grading.assign(T.dim, 0);
    for (int b = 0; b < V.dim; ++b)
        for (int c = 0; c < W.dim; ++c)
            T.grading[b * W.dim + c] = mp.G.mul(V.grading[b], W.grading[c]);
    T.act.assign(nf, CMat(T.dim, T.dim, N));
    for (int x = 0; x < nf; ++x)
        for (int b = 0; b < V.dim; ++b)
            for (int c = 0; c < W.dim; ++c) {
                CycloNum s = zeta(N, pc.ta(x, V.grading[b], W.grading[c]));
                int xa = mp.lact_at(W.grading[c], x);  // |v'| |> x
                for (int rb = 0; rb < V.dim; ++rb) {
                    const CycloNum& cb = V.act[xa].at(rb, b);
                    if (cb.is_zero()) continue;
                    for (int rc = 0; rc < W.dim; ++rc) {
                        const CycloNum& cc = W.act[x].at(rc, c);
                        if (cc.is_zero()) continue;
                        T.act[x].at(rb * W.dim + rc, b * W.dim + c) += s * cb * cc;
                    }
                }
            }
    return T;
}

namespace {

QuotientSpace::Row sparse_row(const std::vector<CycloNum>& v) {
    QuotientSpace::Row r;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r.emplace_back(static_cast<long>(i), v[i]);
    return r;
}

} // namespace

void QuotientSpace::insert(std::vector<CycloNum> v) {
    v = reduce(std::move(v));
    long piv = -1;
    for (long i = 0; i < ambient; ++i)
        if (!v[i].is_zero()) { piv = i; break; }
    if (piv < 0) return;
    CycloNum inv = v[piv].inverse();
    for (auto& c : v) c *= inv;
    Row nr = sparse_row(v);
    // keep the reduced-echelon invariant on the stored rows
    for (auto& [lead, row] : echelon) {
        auto it = std::lower_bound(row.begin(), row.end(), piv,
                                   [](const auto& e, long k) { return e.first < k; });
        if (it == row.end() || it->first != piv) continue;
        CycloNum f = it->second;
        Row merged;
        merged.reserve(row.size() + nr.size());
        size_t a = 0, b = 0;
        while (a < row.size() || b < nr.size()) {
            if (b == nr.size() || (a < row.size() && row[a].first < nr[b].first)) {
                merged.push_back(row[a++]);
            } else if (a == row.size() || nr[b].first < row[a].first) {
                CycloNum val = -(f * nr[b].second);
                if (!val.is_zero()) merged.emplace_back(nr[b].first, val);
                ++b;
            } else {
                CycloNum val = row[a].second - f * nr[b].second;
                if (!val.is_zero()) merged.emplace_back(row[a].first, val);
                ++a;
                ++b;
            }
        }
        row = std::move(merged);
    }
    echelon.emplace_back(piv, std::move(nr));
}

void QuotientSpace::seal() {
    std::sort(echelon.begin(), echelon.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<char> is_pivot(ambient, 0);
    for (const auto& [lead, row] : echelon) is_pivot[lead] = 1;
    free_coords.clear();
    for (long i = 0; i < ambient; ++i)
        if (!is_pivot[i]) free_coords.push_back(i);
}

std::vector<CycloNum> QuotientSpace::reduce(std::vector<CycloNum> v) const {
    for (const auto& [lead, row] : echelon) {
        if (v[lead].is_zero()) continue;
        CycloNum f = v[lead];
        for (const auto& [i, c] : row) v[i] -= f * c;
    }
    return v;
}

std::vector<CycloNum> QuotientSpace::include(const std::vector<CycloNum>& qv) const {
    std::vector<CycloNum> v(ambient, CycloNum(N));
    for (size_t k = 0; k < free_coords.size(); ++k) v[free_coords[k]] = qv[k];
    return v;
}

std::vector<CycloNum> QuotientSpace::project(const std::vector<CycloNum>& reduced) const {
    std::vector<CycloNum> qv(free_coords.size(), CycloNum(N));
    for (size_t k = 0; k < free_coords.size(); ++k) qv[k] = reduced[free_coords[k]];
    return qv;
}

TensorBimodule tensor_bimodule(const SigmaBimodule& U, const SigmaBimodule& Up,
                               const PairCocycle& pc, const ExactFactorization& fact) {
    const MatchedPair& mp = pc.mp;
    const FiniteGroup& sig = fact.sigma;
    FactIndex ix(fact);
    int nf = mp.F.order(), N = pc.N;
    long nu = U.dim, nup = Up.dim;

    TensorBimodule T;
    QuotientSpace& q = T.quotient;
    q.ambient = nu * nup;
    q.N = N;
    for (int x = 0; x < nf; ++x) {
        if (x == mp.F.id()) continue;
        for (long b = 0; b < nu; ++b)
            for (long c = 0; c < nup; ++c) {
                std::vector<CycloNum> rel(q.ambient, CycloNum(N));
                for (long r = 0; r < nu; ++r) {
                    const CycloNum& v = U.ract[x].at(static_cast<int>(r), static_cast<int>(b));
                    if (!v.is_zero()) rel[r * nup + c] += v;
                }
                for (long r = 0; r < nup; ++r) {
                    const CycloNum& v = Up.lact[x].at(static_cast<int>(r), static_cast<int>(c));
                    if (!v.is_zero()) rel[b * nup + r] -= v;
                }
                q.insert(std::move(rel));
            }
    }
    q.seal();

    SigmaBimodule& P = T.prod;
    P.dim = static_cast<int>(q.free_coords.size());
    P.N = N;
    P.grading.assign(P.dim, 0);
    for (int k = 0; k < P.dim; ++k) {
        long fc = q.free_coords[k];
        P.grading[k] = sig.mul(U.grading[fc / nup], Up.grading[fc % nup]);
    }
    P.lact.assign(nf, CMat(P.dim, P.dim, N));
    P.ract.assign(nf, CMat(P.dim, P.dim, N));
    for (int x = 0; x < nf; ++x)
        for (int k = 0; k < P.dim; ++k) {
            long fc = q.free_coords[k];
            long b = fc / nup, c = fc % nup;
            // left action on the left factor
            std::vector<CycloNum> amb(q.ambient, CycloNum(N));
            for (long r = 0; r < nu; ++r) {
                const CycloNum& v = U.lact[x].at(static_cast<int>(r), static_cast<int>(b));
                if (!v.is_zero()) amb[r * nup + c] += v;
            }
            auto ql = q.project(q.reduce(std::move(amb)));
            for (int r = 0; r < P.dim; ++r) P.lact[x].at(r, k) = ql[r];
            // twisted right action: tau/sigma scalars times u x (u' <- x)
            int gb = ix.p_loc(U.grading[b]);
            int xc = ix.pi_loc(Up.grading[c]);
            int gc = ix.p_loc(Up.grading[c]);
            long expo = pc.ta(x, mp.ract_at(gb, xc), gc) + pc.sig(gb, xc, mp.lact_at(gc, x));
            CycloNum s = zeta(N, expo);
            std::vector<CycloNum> amb2(q.ambient, CycloNum(N));
            for (long r = 0; r < nup; ++r) {
                const CycloNum& v = Up.ract[x].at(static_cast<int>(r), static_cast<int>(c));
                if (!v.is_zero()) amb2[b * nup + r] += s * v;
            }
            auto qr = q.project(q.reduce(std::move(amb2)));
            for (int r = 0; r < P.dim; ++r) P.ract[x].at(r, k) = qr[r];
        }
    return T;
}

FSlice functor_F(const SigmaBimodule& U, const PairCocycle& pc, const ExactFactorization& fact) {
    const MatchedPair& mp = pc.mp;
    FactIndex ix(fact);
    int nf = mp.F.order(), N = pc.N;
    int n = U.dim;

    // averaging by the normalized integral under the left action
    CMat P(n, n, N);
    CycloNum inv_f(N, Rational(1, nf));
    for (int x = 0; x < nf; ++x)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P.at(i, j) += inv_f * U.lact[x].at(i, j);

    // basis: pivot columns of P, grouped by the G-part of the degree
    std::vector<std::vector<CycloNum>> cols;
    std::vector<int> gradings;
    QuotientSpace probe;  // used as an echelon rank tracker
    probe.ambient = n;
    probe.N = N;
    for (int g = 0; g < mp.G.order(); ++g)
        for (int j = 0; j < n; ++j) {
            if (ix.p_loc(U.grading[j]) != g) continue;
            auto w = col_of(P, j);
            size_t before = probe.echelon.size();
            probe.insert(w);
            if (probe.echelon.size() > before) {
                cols.push_back(std::move(w));
                gradings.push_back(g);
            }
        }
    int m = static_cast<int>(cols.size());
    FSlice out;
    out.inclusion = CMat(n, m, N);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < n; ++i) out.inclusion.at(i, k) = cols[k][i];
    out.mod.dim = m;
    out.mod.N = N;
    out.mod.grading = gradings;
    out.mod.act.assign(nf, CMat(m, m, N));
    for (int x = 0; x < nf; ++x) {
        CMat imgs(n, m, N);
        for (int k = 0; k < m; ++k) {
            auto img = U.ract[x].apply(cols[k]);
            for (int i = 0; i < n; ++i) imgs.at(i, k) = img[i];
        }
        auto sol = out.inclusion.solve_many(imgs);
        if (!sol) throw std::invalid_argument("functor_F: invariants not closed under the action");
        out.mod.act[x] = *sol;
    }
    return out;
}

SigmaBimodule functor_G(const GradedFModule& V, const PairCocycle& pc,
                        const ExactFactorization& fact) {
    const MatchedPair& mp = pc.mp;
    const FiniteGroup& sig = fact.sigma;
    int nf = mp.F.order(), N = pc.N;
    SigmaBimodule U;
    U.dim = nf * V.dim;
    U.N = N;
    auto enc = [&](int y, int b) { return y * V.dim + b; };
    U.grading.assign(U.dim, 0);
    for (int y = 0; y < nf; ++y)
        for (int b = 0; b < V.dim; ++b)
            U.grading[enc(y, b)] = sig.mul(fact.F[y], fact.G[V.grading[b]]);
    U.lact.assign(nf, CMat(U.dim, U.dim, N));
    U.ract.assign(nf, CMat(U.dim, U.dim, N));
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y)
            for (int b = 0; b < V.dim; ++b) {
                U.lact[x].at(enc(mp.F.mul(x, y), b), enc(y, b)) = CycloNum::one(N);
                int y2 = mp.F.mul(y, mp.lact_at(V.grading[b], x));
                for (int r = 0; r < V.dim; ++r) {
                    const CycloNum& c = V.act[x].at(r, b);
                    if (!c.is_zero()) U.ract[x].at(enc(y2, r), enc(y, b)) += c;
                }
            }
    return U;
}

XiData xi_map(const SigmaBimodule& U, const SigmaBimodule& Up, const PairCocycle& pc,
              const ExactFactorization& fact) {
    const MatchedPair& mp = pc.mp;
    FactIndex ix(fact);
    int nf = mp.F.order(), N = pc.N;
    XiData X;
    X.W = tensor_bimodule(U, Up, pc, fact);
    X.FW = functor_F(X.W.prod, pc, fact);
    X.FU = functor_F(U, pc, fact);
    X.FUp = functor_F(Up, pc, fact);
    X.codomain = tensor_graded(X.FU.mod, X.FUp.mod, pc);

    long nu = U.dim, nup = Up.dim;
    // averaging operator on U' for t -> u'
    CMat Pp(Up.dim, Up.dim, N);
    CycloNum inv_f(N, Rational(1, nf));
    for (int x = 0; x < nf; ++x)
        for (int i = 0; i < Up.dim; ++i)
            for (int j = 0; j < Up.dim; ++j) Pp.at(i, j) += inv_f * Up.lact[x].at(i, j);

    int mW = X.FW.mod.dim, mU = X.FU.mod.dim, mUp = X.FUp.mod.dim;
    // kron(FU.inclusion, FUp.inclusion) as the codomain embedding
    CMat BB(static_cast<int>(nu * nup), mU * mUp, N);
    for (int i = 0; i < nu; ++i)
        for (int k1 = 0; k1 < mU; ++k1) {
            const CycloNum& a = X.FU.inclusion.at(i, k1);
            if (a.is_zero()) continue;
            for (int j = 0; j < nup; ++j)
                for (int k2 = 0; k2 < mUp; ++k2) {
                    const CycloNum& b = X.FUp.inclusion.at(j, k2);
                    if (!b.is_zero())
                        BB.at(static_cast<int>(i * nup + j), k1 * mUp + k2) = a * b;
                }
        }

    CMat images(static_cast<int>(nu * nup), mW, N);
    for (int k = 0; k < mW; ++k) {
        // lift the domain basis vector to the ambient U x U'
        std::vector<CycloNum> qcoords = col_of(X.FW.inclusion, k);
        auto amb = X.W.quotient.include(qcoords);
        for (long b = 0; b < nu; ++b)
            for (long c = 0; c < nup; ++c) {
                const CycloNum& coeff = amb[b * nup + c];
                if (coeff.is_zero()) continue;
                int xp = ix.pi_loc(Up.grading[c]);  // pi||u'||
                auto t1 = col_of(U.ract[xp], static_cast<int>(b));
                auto t2 = col_of(Pp, static_cast<int>(c));
                for (long i = 0; i < nu; ++i) {
                    if (t1[i].is_zero()) continue;
                    CycloNum f = coeff * t1[i];
                    for (long j = 0; j < nup; ++j)
                        if (!t2[j].is_zero())
                            images.at(static_cast<int>(i * nup + j), k) += f * t2[j];
                }
            }
    }
    auto sol = BB.solve_many(images);
    if (!sol) throw std::invalid_argument("xi_map: image does not land in F(U) x F(U')");
    X.xi = *sol;
    return X;
}

Report pentagon_on_lines(const PairCocycle& pc, const ExactFactorization& fact) {
    Report rep;
    rep.subject = "pentagon on graded lines";
    Cochain w = kac_omega(pc, fact);
    int n = fact.sigma.order(), N = pc.N;
    const FiniteGroup& s = fact.sigma;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    ++rep.checks;
                    long lhs = w.at({b, c, d}) + w.at({a, s.mul(b, c), d}) + w.at({a, b, c});
                    long rhs = w.at({s.mul(a, b), c, d}) + w.at({a, b, s.mul(c, d)});
                    if (imod(lhs - rhs, N) != 0)
                        rep.add("pentagon scalar identity", {a, b, c, d});
                }
    return rep;
}

namespace {

// degree component of a vector of U lying in G (pi part trivial)
std::vector<CycloNum> g_degree_component(const SigmaBimodule& U, const ExactFactorization& fact,
                                         const std::vector<CycloNum>& v) {
    std::vector<CycloNum> out(v.size(), CycloNum(U.N));
    for (size_t i = 0; i < v.size(); ++i)
        if (fact.pi(U.grading[i]) == fact.sigma.id()) out[i] = v[i];
    return out;
}

} // namespace

void standard_equivalence_corpus(const PairCocycle& pc, const ExactFactorization& fact,
                                 std::vector<GradedFModule>& vs,
                                 std::vector<SigmaBimodule>& us) {
    const MatchedPair& mp = pc.mp;
    int nf = mp.F.order(), ng = mp.G.order(), N = pc.N;

    GradedFModule triv;
    triv.dim = 1;
    triv.N = N;
    triv.grading = {mp.G.id()};
    triv.act.assign(nf, CMat::identity(1, N));
    vs.push_back(triv);

    StructureHopf A = bicrossed_product(pc);
    GradedFModule regV = module_from_rep(right_regular_module(A), pc);
    vs.push_back(regV);

    bool sigma_trivial = true;
    for (long v : pc.sigma)
        if (v != 0) sigma_trivial = false;
    if (sigma_trivial) {
        GradedFModule orbit;
        orbit.dim = ng;
        orbit.N = N;
        orbit.grading.resize(ng);
        for (int g = 0; g < ng; ++g) orbit.grading[g] = g;
        orbit.act.assign(nf, CMat(ng, ng, N));
        for (int x = 0; x < nf; ++x)
            for (int g = 0; g < ng; ++g)
                orbit.act[x].at(mp.ract_at(g, x), g) = CycloNum::one(N);
        vs.push_back(orbit);
        vs.push_back(tensor_graded(orbit, orbit, pc));
    } else {
        vs.push_back(tensor_graded(regV, triv, pc));
    }

    SigmaBimodule kf;
    kf.dim = nf;
    kf.N = N;
    kf.grading.resize(nf);
    for (int y = 0; y < nf; ++y) kf.grading[y] = fact.F[y];
    kf.lact.assign(nf, CMat(nf, nf, N));
    kf.ract.assign(nf, CMat(nf, nf, N));
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) {
            kf.lact[x].at(mp.F.mul(x, y), y) = CycloNum::one(N);
            kf.ract[x].at(mp.F.mul(y, x), y) = CycloNum::one(N);
        }
    us.push_back(kf);
    for (size_t i = 0; i + 1 < vs.size(); ++i) us.push_back(functor_G(vs[i], pc, fact));
}

Report verify_equivalence(const PairCocycle& pc, const ExactFactorization& fact,
                          const std::vector<GradedFModule>& vs,
                          const std::vector<SigmaBimodule>& us, long coherence_cap) {
    Report rep;
    rep.subject = "monoidal equivalence";
    const MatchedPair& mp = pc.mp;
    const FiniteGroup& sig = fact.sigma;
    FactIndex ix(fact);
    int nf = mp.F.order(), N = pc.N;

    for (size_t vi = 0; vi < vs.size(); ++vi) {
        Report r = verify_graded(vs[vi], pc);
        if (!r.pass()) rep.add("object validity (module side)", {static_cast<long>(vi)});
        rep.checks += r.checks;
    }
    for (size_t ui = 0; ui < us.size(); ++ui) {
        Report r = verify_bimodule(us[ui], pc, fact);
        if (!r.pass()) rep.add("object validity (bimodule side)", {static_cast<long>(ui)});
        rep.checks += r.checks;
    }

    // F(G(V)) = V via mu(y x v) = v / |F|-normalization
    for (size_t vi = 0; vi < vs.size(); ++vi) {
        const GradedFModule& V = vs[vi];
        SigmaBimodule GV = functor_G(V, pc, fact);
        FSlice FGV = functor_F(GV, pc, fact);
        ++rep.checks;
        if (FGV.mod.dim != V.dim) {
            rep.add("F(G(V)) has the dimension of V", {static_cast<long>(vi)});
            continue;
        }
        CMat Mu(V.dim, FGV.mod.dim, N);
        for (int k = 0; k < FGV.mod.dim; ++k)
            for (int y = 0; y < nf; ++y)
                for (int b = 0; b < V.dim; ++b)
                    Mu.at(b, k) += FGV.inclusion.at(y * V.dim + b, k);
        ++rep.checks;
        if (Mu.rank() != V.dim) rep.add("mu: F(G(V)) -> V bijective", {static_cast<long>(vi)});
        // grading preserved
        for (int k = 0; k < FGV.mod.dim; ++k)
            for (int b = 0; b < V.dim; ++b) {
                ++rep.checks;
                if (!Mu.at(b, k).is_zero() && V.grading[b] != FGV.mod.grading[k])
                    rep.add("mu preserves gradings", {static_cast<long>(vi), k, b});
            }
        // action preserved
        for (int x = 0; x < nf; ++x) {
            ++rep.checks;
            if (!(Mu.mul(FGV.mod.act[x]) == V.act[x].mul(Mu)))
                rep.add("mu intertwines <| x", {static_cast<long>(vi), x});
        }
    }

    // G(F(U)) = U via Psi(y x u) = y -> (G-degree component of u)
    for (size_t ui = 0; ui < us.size(); ++ui) {
        const SigmaBimodule& U = us[ui];
        FSlice FU = functor_F(U, pc, fact);
        SigmaBimodule GFU = functor_G(FU.mod, pc, fact);
        ++rep.checks;
        if (GFU.dim != U.dim) {
            rep.add("G(F(U)) has the dimension of U", {static_cast<long>(ui)});
            continue;
        }
        CMat Psi(U.dim, GFU.dim, N);
        for (int y = 0; y < nf; ++y)
            for (int k = 0; k < FU.mod.dim; ++k) {
                auto comp = g_degree_component(U, fact, col_of(FU.inclusion, k));
                auto img = U.lact[y].apply(comp);
                for (int r = 0; r < U.dim; ++r) Psi.at(r, y * FU.mod.dim + k) = img[r];
            }
        ++rep.checks;
        if (Psi.rank() != U.dim) rep.add("Psi: G(F(U)) -> U bijective", {static_cast<long>(ui)});
        for (int col = 0; col < GFU.dim; ++col)
            for (int r = 0; r < U.dim; ++r) {
                ++rep.checks;
                if (!Psi.at(r, col).is_zero() && U.grading[r] != GFU.grading[col])
                    rep.add("Psi preserves gradings", {static_cast<long>(ui), col, r});
            }
        for (int x = 0; x < nf; ++x) {
            rep.checks += 2;
            if (!(Psi.mul(GFU.lact[x]) == U.lact[x].mul(Psi)))
                rep.add("Psi intertwines the left action", {static_cast<long>(ui), x});
            if (!(Psi.mul(GFU.ract[x]) == U.ract[x].mul(Psi)))
                rep.add("Psi intertwines the right action", {static_cast<long>(ui), x});
        }
    }

    // xi for all pairs (cached for the coherence phase)
    std::vector<std::vector<XiData>> xi_pairs(us.size());
    for (size_t i = 0; i < us.size(); ++i)
        for (size_t j = 0; j < us.size(); ++j) {
            xi_pairs[i].push_back(xi_map(us[i], us[j], pc, fact));
            const XiData& X = xi_pairs[i].back();
            ++rep.checks;
            if (X.xi.rows != X.xi.cols || X.xi.rank() != X.xi.rows) {
                rep.add("xi bijective", {static_cast<long>(i), static_cast<long>(j)});
                continue;
            }
            for (int k = 0; k < X.xi.cols; ++k)
                for (int r = 0; r < X.xi.rows; ++r) {
                    ++rep.checks;
                    if (!X.xi.at(r, k).is_zero() &&
                        X.codomain.grading[r] != X.FW.mod.grading[k])
                        rep.add("xi preserves G-gradings",
                                {static_cast<long>(i), static_cast<long>(j), k, r});
                }
            for (int x = 0; x < nf; ++x) {
                ++rep.checks;
                if (!(X.xi.mul(X.FW.mod.act[x]) == X.codomain.act[x].mul(X.xi)))
                    rep.add("xi intertwines <| x",
                            {static_cast<long>(i), static_cast<long>(j), x});
            }
        }

    // the degree identity behind the proof: pi||u <- pi||u'|| || = pi(||u|| ||u'||)
    for (const auto& U : us)
        for (const auto& Up : us)
            for (int du : U.grading)
                for (int dup : Up.grading) {
                    ++rep.checks;
                    int y = fact.pi(dup);
                    if (fact.pi(sig.mul(du, y)) != fact.pi(sig.mul(du, dup)))
                        rep.add("pi||u <- pi||u'|| || = pi(||u|| ||u'||)", {du, dup});
                }

    rep.merge(pentagon_on_lines(pc, fact));

    // monoidal coherence square on triples, capped by ambient size
    Cochain w = kac_omega(pc, fact);
    for (size_t i = 0; i < us.size(); ++i)
        for (size_t j = 0; j < us.size(); ++j)
            for (size_t l = 0; l < us.size(); ++l) {
                const SigmaBimodule &U = us[i], &Up = us[j], &Upp = us[l];
                long est = static_cast<long>(U.dim) * Up.dim * Upp.dim;
                if (est > coherence_cap) continue;
                ++rep.checks;

                // left route: xi_{U x Up, Upp} then xi_{U, Up} x id
                const XiData& X12 = xi_pairs[i][j];
                const TensorBimodule& W12 = X12.W;
                XiData Xa = xi_map(W12.prod, Upp, pc, fact);
                // right route: F(assoc) then xi_{U, Up x Upp} then id x xi_{Up, Upp}
                const XiData& X23 = xi_pairs[j][l];
                const TensorBimodule& W23 = X23.W;
                XiData Xb = xi_map(U, W23.prod, pc, fact);

                // domain: F((U x Up) x Upp); build the associator map to
                // F(U x (Up x Upp)) on representatives
                const TensorBimodule& Wl = Xa.W;
                const TensorBimodule& Wr = Xb.W;
                const FSlice& FWl = Xa.FW;
                const FSlice& FWr = Xb.FW;
                if (FWl.mod.dim != FWr.mod.dim) {
                    rep.add("coherence: domain dims",
                            {static_cast<long>(i), static_cast<long>(j), static_cast<long>(l)});
                    continue;
                }
                int mdom = FWl.mod.dim;
                // assoc: ((u x u') x u'') -> omega(degrees) u x (u' x u'')
                CMat Assoc(Wr.prod.dim, Wl.prod.dim, N);
                for (int k = 0; k < Wl.prod.dim; ++k) {
                    long fc = Wl.quotient.free_coords[k];
                    long q12 = fc / Upp.dim, cpp = fc % Upp.dim;
                    auto amb12 = W12.quotient.include(col_of(
                        CMat::identity(W12.prod.dim, N), static_cast<int>(q12)));
                    // target accumulates in U x (Up x Upp) ambient first
                    std::vector<CycloNum> target(
                        static_cast<size_t>(U.dim) * W23.prod.dim, CycloNum(N));
                    for (long b = 0; b < U.dim; ++b)
                        for (long c = 0; c < Up.dim; ++c) {
                            const CycloNum& v = amb12[b * Up.dim + c];
                            if (v.is_zero()) continue;
                            long scal = w.at({U.grading[b], Up.grading[c],
                                              Upp.grading[cpp]});
                            // reduce (c, cpp) into W23 quotient coordinates
                            std::vector<CycloNum> amb23(
                                static_cast<size_t>(Up.dim) * Upp.dim, CycloNum(N));
                            amb23[c * Upp.dim + cpp] = zeta(N, scal) * v;
                            auto q23 = W23.quotient.project(W23.quotient.reduce(amb23));
                            for (int r = 0; r < W23.prod.dim; ++r)
                                if (!q23[r].is_zero())
                                    target[b * W23.prod.dim + r] += q23[r];
                        }
                    auto qr = Wr.quotient.project(Wr.quotient.reduce(target));
                    for (int r = 0; r < Wr.prod.dim; ++r) Assoc.at(r, k) = qr[r];
                }
                // F(assoc): restrict to the invariant slices
                CMat Fassoc(FWr.mod.dim, mdom, N);
                {
                    CMat imgs = Assoc.mul(FWl.inclusion);
                    auto sol = FWr.inclusion.solve_many(imgs);
                    if (!sol) {
                        rep.add("coherence: F(assoc) well-defined",
                                {static_cast<long>(i), static_cast<long>(j),
                                 static_cast<long>(l)});
                        continue;
                    }
                    Fassoc = *sol;
                }

                // left route: (xi_{U,Up} x id) after xi_{W12, Upp}; the domain
                // slices of Xa and FWl agree by construction
                int mU = X12.FU.mod.dim, mUp = X12.FUp.mod.dim, mUpp = Xa.FUp.mod.dim;
                CMat lhs(mU * mUp * mUpp, mdom, N);
                for (int k = 0; k < mdom; ++k) {
                    auto v1 = col_of(Xa.xi, k);  // in F(W12) x F(Upp)
                    for (int a = 0; a < Xa.FU.mod.dim; ++a)
                        for (int b = 0; b < mUpp; ++b) {
                            const CycloNum& c0 = v1[a * mUpp + b];
                            if (c0.is_zero()) continue;
                            auto v2 = col_of(X12.xi, a);
                            for (int r = 0; r < mU * mUp; ++r)
                                if (!v2[r].is_zero()) lhs.at(r * mUpp + b, k) += c0 * v2[r];
                        }
                }
                CMat rhs(mU * mUp * mUpp, mdom, N);
                for (int k = 0; k < mdom; ++k) {
                    auto v1 = Xb.xi.apply(col_of(Fassoc, k));  // in F(U) x F(W23)
                    for (int a = 0; a < mU; ++a)
                        for (int b = 0; b < Xb.FUp.mod.dim; ++b) {
                            const CycloNum& c0 = v1[a * Xb.FUp.mod.dim + b];
                            if (c0.is_zero()) continue;
                            auto v2 = col_of(X23.xi, b);
                            for (int r = 0; r < mUp * mUpp; ++r)
                                if (!v2[r].is_zero())
                                    rhs.at(a * (mUp * mUpp) + r, k) += c0 * v2[r];
                        }
                }
                if (!(lhs == rhs))
                    rep.add("monoidal coherence square",
                            {static_cast<long>(i), static_cast<long>(j), static_cast<long>(l)});
            }
    return rep;
}

} // namespace bicross
