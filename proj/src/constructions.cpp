#include "bicross/constructions.hpp"

#include "bicross/cohomology.hpp"

#include <numeric>
#include <stdexcept>

namespace bicross {

namespace {

CycloNum zeta(int N, long exp) { return CycloNum::zeta_pow(RootExp(exp, N)); }

void sort_comult_row(std::vector<std::tuple<int, int, CycloNum>>& row) {
    std::sort(row.begin(), row.end(), [](auto& x, auto& y) {
        return std::pair(std::get<0>(x), std::get<1>(x)) <
               std::pair(std::get<0>(y), std::get<1>(y));
    });
}

void require_pass(const Report& rep, const std::string& what) {
    if (!rep.pass()) throw std::runtime_error(what + " failed verification: " + rep.summary());
}

} // namespace

StructureHopf group_algebra(const FiniteGroup& G, int N) {
    int n = G.order();
    StructureHopf H;
    H.alg.dim = n;
    H.alg.N = N;
    H.alg.mult.assign(static_cast<size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            H.alg.mult[static_cast<size_t>(i) * n + j] = {{G.mul(i, j), CycloNum::one(N)}};
    H.alg.unit.assign(n, CycloNum(N));
    H.alg.unit[G.id()] = CycloNum::one(N);
    H.comult.assign(n, {});
    for (int i = 0; i < n; ++i) H.comult[i] = {{i, i, CycloNum::one(N)}};
    H.counit.assign(n, CycloNum::one(N));
    CMat S(n, n, N);
    for (int i = 0; i < n; ++i) S.at(G.inv(i), i) = CycloNum::one(N);
    H.antipode = S;
    return H;
}

StructureHopf fn_algebra(const FiniteGroup& G, int N) {
    int n = G.order();
    StructureHopf H;
    H.alg.dim = n;
    H.alg.N = N;
    H.alg.mult.assign(static_cast<size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        H.alg.mult[static_cast<size_t>(i) * n + i] = {{i, CycloNum::one(N)}};
    H.alg.unit.assign(n, CycloNum::one(N));
    H.comult.assign(n, {});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.mul(b, c) == a) H.comult[a].emplace_back(b, c, CycloNum::one(N));
        sort_comult_row(H.comult[a]);
    }
    H.counit.assign(n, CycloNum(N));
    H.counit[G.id()] = CycloNum::one(N);
    CMat S(n, n, N);
    for (int i = 0; i < n; ++i) S.at(G.inv(i), i) = CycloNum::one(N);
    H.antipode = S;
    return H;
}

StructureAlgebra twisted_group_algebra(const FiniteGroup& G, const Cochain& gamma) {
    if (gamma.degree != 2) throw std::invalid_argument("twisted_group_algebra: need a 2-cochain");
    if (!coboundary(gamma).is_zero() || !gamma.is_normalized())
        throw std::invalid_argument("twisted_group_algebra: gamma is not a normalized 2-cocycle");
    int n = G.order(), N = gamma.N;
    StructureAlgebra A;
    A.dim = n;
    A.N = N;
    A.mult.assign(static_cast<size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A.mult[static_cast<size_t>(i) * n + j] = {{G.mul(i, j), zeta(N, gamma.at({i, j}))}};
    A.unit.assign(n, CycloNum(N));
    A.unit[G.id()] = CycloNum::one(N);
    return A;
}

bool is_nondegenerate_class(const Cochain& gamma) {
    StructureAlgebra A = twisted_group_algebra(gamma.group, gamma);
    return center_dimension(A) == 1;
}

StructureHopf bicrossed_product(const PairCocycle& pc) {
    {
        Report rep = verify_pair(pc);
        require_pass(rep, "pair cocycle");
    }
    const MatchedPair& mp = pc.mp;
    const FiniteGroup& F = mp.F;
    const FiniteGroup& G = mp.G;
    int nf = F.order(), ng = G.order(), N = pc.N;
    BicrossedBasis basis{ng, nf};
    int d = basis.dim();

    StructureHopf H;
    H.alg.dim = d;
    H.alg.N = N;
    H.alg.mult.assign(static_cast<size_t>(d) * d, {});
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x)
            for (int h = 0; h < ng; ++h)
                for (int y = 0; y < nf; ++y) {
                    if (mp.ract_at(g, x) != h) continue;
                    H.alg.mult[static_cast<size_t>(basis.index(g, x)) * d + basis.index(h, y)] = {
                        {basis.index(g, F.mul(x, y)), zeta(N, pc.sig(g, x, y))}};
                }
    H.alg.unit.assign(d, CycloNum(N));
    for (int g = 0; g < ng; ++g) H.alg.unit[basis.index(g, F.id())] = CycloNum::one(N);
    H.comult.assign(d, {});
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x) {
            auto& row = H.comult[basis.index(g, x)];
            for (int s = 0; s < ng; ++s)
                for (int t = 0; t < ng; ++t) {
                    if (G.mul(s, t) != g) continue;
                    row.emplace_back(basis.index(s, mp.lact_at(t, x)), basis.index(t, x),
                                     zeta(N, pc.ta(x, s, t)));
                }
            sort_comult_row(row);
        }
    H.counit.assign(d, CycloNum(N));
    for (int x = 0; x < nf; ++x) H.counit[basis.index(G.id(), x)] = CycloNum::one(N);

    H.antipode = solve_antipode(H);
    if (!H.antipode) throw std::runtime_error("bicrossed_product: no antipode found");
    require_pass(verify_hopf(H), "bicrossed product");
    return H;
}

StructureHopf drinfeld_double(const StructureHopf& H) {
    if (!H.antipode) throw std::invalid_argument("drinfeld_double: H has no antipode");
    auto Sinv_opt = H.antipode->inverse();
    if (!Sinv_opt) throw std::invalid_argument("drinfeld_double: antipode not invertible");
    const CMat& Sinv = *Sinv_opt;
    int n = H.dim(), N = H.torsion();
    int d = n * n;
    auto enc = [&](int f, int a) { return f * n + a; };  // dual-major

    // (e_p -> f_j): x |-> f_j(x e_p), as sparse f-coordinates
    std::vector<SparseVec> rharp(static_cast<size_t>(n) * n);  // [p][j]
    for (int l = 0; l < n; ++l)
        for (int p = 0; p < n; ++p)
            for (const auto& [k, c] : H.alg.prod(l, p))
                rharp[static_cast<size_t>(p) * n + k].emplace_back(l, c);
    // (f_j <- e_t): x |-> f_j(e_t x)
    std::vector<SparseVec> lharp(static_cast<size_t>(n) * n);  // [t][j]
    for (int t = 0; t < n; ++t)
        for (int r = 0; r < n; ++r)
            for (const auto& [k, c] : H.alg.prod(t, r))
                lharp[static_cast<size_t>(t) * n + k].emplace_back(r, c);
    // products in the dual: f_i f_j = sum over Delta-transposed
    std::vector<SparseVec> fprod(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (const auto& [a, b, c] : H.comult[k])
            fprod[static_cast<size_t>(a) * n + b].emplace_back(k, c);
    for (auto& v : fprod)
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });

    // Delta^2 of each basis element
    std::vector<std::vector<std::tuple<int, int, int, CycloNum>>> delta2(n);
    for (int a = 0; a < n; ++a)
        for (const auto& [u, v, c] : H.comult[a])
            for (const auto& [p, q, c2] : H.comult[u])
                delta2[a].emplace_back(p, q, v, c * c2);

    StructureHopf D;
    D.alg.dim = d;
    D.alg.N = N;
    D.alg.mult.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
                for (int b = 0; b < n; ++b) {
                    std::map<int, CycloNum> acc;
                    // (f_i x e_a)(f_j x e_b) =
                    //   sum f_i (a3 -> f_j <- S^{-1} a1) x a2 b
                    for (const auto& [p, q, r, c] : delta2[a]) {
                        const SparseVec& qb = H.alg.prod(q, b);
                        if (qb.empty()) continue;
                        for (int t = 0; t < n; ++t) {
                            const CycloNum& sc = Sinv.at(t, p);
                            if (sc.is_zero()) continue;
                            for (const auto& [m1, c1] : rharp[static_cast<size_t>(r) * n + j])
                                for (const auto& [m2, c2] : lharp[static_cast<size_t>(t) * n + m1])
                                    for (const auto& [m3, c3] :
                                         fprod[static_cast<size_t>(i) * n + m2]) {
                                        CycloNum f = c * sc * c1 * c2 * c3;
                                        for (const auto& [k2, ck] : qb) {
                                            auto [it, fresh] =
                                                acc.emplace(enc(m3, k2), f * ck);
                                            if (!fresh) it->second += f * ck;
                                        }
                                    }
                        }
                    }
                    D.alg.mult[static_cast<size_t>(enc(i, a)) * d + enc(j, b)] =
                        sparse_normalize(std::move(acc));
                }
    D.alg.unit.assign(d, CycloNum(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycloNum v = H.counit[i] * H.alg.unit[j];
            if (!v.is_zero()) D.alg.unit[enc(i, j)] = v;
        }
    D.counit.assign(d, CycloNum(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) D.counit[enc(i, j)] = H.alg.unit[i] * H.counit[j];
    // coalgebra: Delta_{A*}(f_i) from the transposed product, tensored with Delta_A
    D.comult.assign(d, {});
    for (int i = 0; i < n; ++i) {
        std::vector<std::tuple<int, int, CycloNum>> dual_delta;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (const auto& [k, c] : H.alg.prod(u, v))
                    if (k == i) dual_delta.emplace_back(u, v, c);
        for (int a = 0; a < n; ++a) {
            auto& row = D.comult[enc(i, a)];
            for (const auto& [u, v, c] : dual_delta)
                for (const auto& [a1, a2, c2] : H.comult[a])
                    row.emplace_back(enc(u, a1), enc(v, a2), c * c2);
            sort_comult_row(row);
        }
    }

    D.antipode = solve_antipode(D);
    if (!D.antipode) {
        require_pass(verify_bialgebra(D), "drinfeld double bialgebra");
        throw std::runtime_error("drinfeld_double: no antipode found");
    }
    require_pass(verify_hopf(D), "drinfeld double");
    return D;
}

QuasiBialgebra dpr_double(const FiniteGroup& sigma, const Cochain& w) {
    if (w.degree != 3) throw std::invalid_argument("dpr_double: need a 3-cochain");
    if (!w.is_normalized() || !coboundary(w).is_zero())
        throw std::invalid_argument("dpr_double: w is not a normalized 3-cocycle");
    int n = sigma.order(), N = w.N;
    int d = n * n;
    auto enc = [&](int g, int x) { return g * n + x; };
    auto conj = [&](int x, int g) {  // x^{-1} g x
        return sigma.mul(sigma.mul(sigma.inv(x), g), x);
    };
    auto theta = [&](int g, int x, int y) {  // exponent of theta_g(x,y)
        int xy = sigma.mul(x, y);
        return w.at({g, x, y}) - w.at({x, conj(x, g), y}) + w.at({x, y, conj(xy, g)});
    };
    auto gamma_c = [&](int x, int h, int k) {  // exponent of gamma_x(h,k)
        return w.at({h, k, x}) - w.at({h, x, conj(x, k)}) + w.at({x, conj(x, h), conj(x, k)});
    };

    QuasiBialgebra Q;
    StructureHopf& H = Q.h;
    H.alg.dim = d;
    H.alg.N = N;
    H.alg.mult.assign(static_cast<size_t>(d) * d, {});
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < n; ++x)
            for (int h = 0; h < n; ++h)
                for (int y = 0; y < n; ++y) {
                    if (g != sigma.mul(sigma.mul(x, h), sigma.inv(x))) continue;  // g = x h x^{-1}
                    H.alg.mult[static_cast<size_t>(enc(g, x)) * d + enc(h, y)] = {
                        {enc(g, sigma.mul(x, y)), zeta(N, theta(g, x, y))}};
                }
    H.alg.unit.assign(d, CycloNum(N));
    for (int g = 0; g < n; ++g) H.alg.unit[enc(g, sigma.id())] = CycloNum::one(N);
    H.comult.assign(d, {});
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < n; ++x) {
            auto& row = H.comult[enc(g, x)];
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k) {
                    if (sigma.mul(h, k) != g) continue;
                    row.emplace_back(enc(h, x), enc(k, x), zeta(N, gamma_c(x, h, k)));
                }
            sort_comult_row(row);
        }
    H.counit.assign(d, CycloNum(N));
    for (int x = 0; x < n; ++x) H.counit[enc(sigma.id(), x)] = CycloNum::one(N);

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                long idx = (static_cast<long>(enc(a, sigma.id())) * d + enc(b, sigma.id())) * d +
                           enc(c, sigma.id());
                Q.assoc.emplace(idx, zeta(N, -w.at({a, b, c})));
                Q.assoc_inv.emplace(idx, zeta(N, w.at({a, b, c})));
            }

    require_pass(verify_quasi(Q), "DPR double");
    return Q;
}

SparseElt idempotent_twist(const BicrossedBasis& basis, const Cochain& beta) {
    if (beta.degree != 2) throw std::invalid_argument("idempotent_twist: need a 2-cochain");
    int ng = beta.group.order(), N = beta.N;
    if (ng != basis.ng) throw std::invalid_argument("idempotent_twist: group size mismatch");
    SparseElt J;
    long d = basis.dim();
    for (int s = 0; s < ng; ++s)
        for (int t = 0; t < ng; ++t)
            J.emplace(static_cast<long>(basis.index(s, 0)) * d + basis.index(t, 0),
                      zeta(N, beta.at({s, t})));
    return J;
}

StructureHopf twist_mult(const StructureHopf& H, const MatchedPair& mp, const Cochain& alpha) {
    if (alpha.degree != 2) throw std::invalid_argument("twist_mult: need a 2-cochain on F");
    if (alpha.group.order() != mp.F.order())
        throw std::invalid_argument("twist_mult: F size mismatch");
    BicrossedBasis basis{mp.G.order(), mp.F.order()};
    if (basis.dim() != H.dim()) throw std::invalid_argument("twist_mult: basis size mismatch");
    if (H.torsion() % alpha.N != 0)
        throw std::invalid_argument("twist_mult: alpha torsion must divide the scalar torsion");
    long scale = H.torsion() / alpha.N;
    StructureHopf T = H;
    int d = H.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int x = basis.x_of(i), y = basis.x_of(j);
            long e = alpha.at({mp.lact_at(basis.g_of(i), x), mp.lact_at(basis.g_of(j), y)}) -
                     alpha.at({x, y});
            if (imod(e, alpha.N) == 0) continue;
            CycloNum f = zeta(H.torsion(), e * scale);
            for (auto& [k, c] : T.alg.mult[static_cast<size_t>(i) * d + j]) c *= f;
        }
    T.antipode.reset();
    Report rep = verify_bialgebra(T);
    require_pass(rep, "multiplication twist");
    T.antipode = solve_antipode(T);
    if (!T.antipode) throw std::runtime_error("twist_mult: twisted structure has no antipode");
    require_pass(verify_antipode(T), "multiplication twist antipode");
    return T;
}

DoubleComparison double_comparison(const PairCocycle& pc, const ExactFactorization& fact) {
    DoubleComparison out;
    Report& rep = out.report;
    rep.subject = "double comparison D(A) vs D^omega(Sigma)";

    StructureHopf A = bicrossed_product(pc);
    StructureHopf DA = drinfeld_double(A);
    Cochain w = kac_omega(pc, fact);
    QuasiBialgebra DW = dpr_double(fact.sigma, w);

    out.dim_double_a = DA.dim();
    out.dim_double_dpr = DW.h.dim();
    ++rep.checks;
    if (out.dim_double_a != out.dim_double_dpr)
        rep.add("equal dimension", {out.dim_double_a, out.dim_double_dpr});

    out.commutative_a = is_commutative(DA.alg);
    out.commutative_dpr = is_commutative(DW.h.alg);
    ++rep.checks;
    if (out.commutative_a != out.commutative_dpr)
        rep.add("matching commutativity flags", {out.commutative_a, out.commutative_dpr});

    out.center_double_a = center_dimension(DA.alg);
    out.center_double_dpr = center_dimension(DW.h.alg);
    ++rep.checks;
    if (out.center_double_a != out.center_double_dpr)
        rep.add("equal center dimension", {out.center_double_a, out.center_double_dpr});

    // canonical central element: ranks and traces of left multiplication by its
    // powers are algebra-isomorphism invariants
    auto za = canonical_central_element(DA.alg);
    auto zb = canonical_central_element(DW.h.alg);
    ++rep.checks;
    if (za.has_value() != zb.has_value()) {
        rep.add("trace form nondegenerate on both sides", {za.has_value(), zb.has_value()});
    } else if (za && zb) {
        int common = std::lcm(DA.torsion(), DW.h.torsion());
        int r = std::max(out.center_double_a, 1);
        std::vector<CycloNum> pa = DA.alg.unit, pb = DW.h.alg.unit;
        for (int j = 1; j <= r; ++j) {
            pa = DA.alg.apply_left(pa, *za);
            pb = DW.h.alg.apply_left(pb, *zb);
            CMat la = left_mult_matrix(DA.alg, pa), lb = left_mult_matrix(DW.h.alg, pb);
            ++rep.checks;
            if (la.rank() != lb.rank())
                rep.add("rank of left mult by canonical central power", {j, la.rank(), lb.rank()});
            CycloNum ta(DA.torsion()), tb(DW.h.torsion());
            for (int i = 0; i < la.rows; ++i) ta += la.at(i, i);
            for (int i = 0; i < lb.rows; ++i) tb += lb.at(i, i);
            ++rep.checks;
            if (!(ta.embedded(common) == tb.embedded(common)))
                rep.add("trace of left mult by canonical central power", {j});
        }
    }
    return out;
}

} // namespace bicross
