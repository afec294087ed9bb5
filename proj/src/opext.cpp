#include "bicross/opext.hpp"

#include "bicross/intmat.hpp"

#include <map>
#include <stdexcept>

namespace bicross {

PairCocycle PairCocycle::trivial(const MatchedPair& mp, int N) {
    PairCocycle pc;
    pc.mp = mp;
    pc.N = N;
    size_t nf = mp.F.order(), ng = mp.G.order();
    pc.sigma.assign(ng * nf * nf, 0);
    pc.tau.assign(nf * ng * ng, 0);
    return pc;
}

Report verify_pair(const PairCocycle& pc) {
    Report rep;
    rep.subject = "pair cocycle (sigma, tau)";
    const MatchedPair& mp = pc.mp;
    const FiniteGroup& F = mp.F;
    const FiniteGroup& G = mp.G;
    int nf = F.order(), ng = G.order(), N = pc.N;
    int e_f = F.id(), e_g = G.id();

    // twisted 2-cocycle law for sigma: sigma_{g<|x}(y,z) + sigma_g(x,yz) =
    // sigma_g(xy,z) + sigma_g(x,y)
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x)
            for (int y = 0; y < nf; ++y)
                for (int z = 0; z < nf; ++z) {
                    ++rep.checks;
                    long lhs = pc.sig(mp.ract_at(g, x), y, z) + pc.sig(g, x, F.mul(y, z));
                    long rhs = pc.sig(g, F.mul(x, y), z) + pc.sig(g, x, y);
                    if (imod(lhs - rhs, N) != 0)
                        rep.add("sigma_{g<|x}(y,z) sigma_g(x,yz) = sigma_g(xy,z) sigma_g(x,y)",
                                {g, x, y, z});
                }
    // normalization: sigma_g(x,1) = 1 = sigma_g(1,x)
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x) {
            rep.checks += 2;
            if (pc.sig(g, x, e_f) != 0) rep.add("sigma_g(x,1) = 1", {g, x});
            if (pc.sig(g, e_f, x) != 0) rep.add("sigma_g(1,x) = 1", {g, x});
        }
    // twisted 2-cocycle law for tau: tau_x(gh,k) + tau_{k|>x}(g,h) =
    // tau_x(h,k) + tau_x(g,hk)
    for (int x = 0; x < nf; ++x)
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < ng; ++h)
                for (int k = 0; k < ng; ++k) {
                    ++rep.checks;
                    long lhs = pc.ta(x, G.mul(g, h), k) + pc.ta(mp.lact_at(k, x), g, h);
                    long rhs = pc.ta(x, h, k) + pc.ta(x, g, G.mul(h, k));
                    if (imod(lhs - rhs, N) != 0)
                        rep.add("tau_x(gh,k) tau_{k|>x}(g,h) = tau_x(h,k) tau_x(g,hk)",
                                {x, g, h, k});
                }
    // normalization: tau_x(g,1) = 1 = tau_x(1,g)
    for (int x = 0; x < nf; ++x)
        for (int g = 0; g < ng; ++g) {
            rep.checks += 2;
            if (pc.ta(x, g, e_g) != 0) rep.add("tau_x(g,1) = 1", {x, g});
            if (pc.ta(x, e_g, g) != 0) rep.add("tau_x(1,g) = 1", {x, g});
        }
    // compatibility: sigma_{ts}(x,y) + tau_{xy}(t,s) = tau_x(t,s) +
    // tau_y(t<|(s|>x), s<|x) + sigma_t(s|>x, (s<|x)|>y) + sigma_s(x,y)
    for (int t = 0; t < ng; ++t)
        for (int s = 0; s < ng; ++s)
            for (int x = 0; x < nf; ++x)
                for (int y = 0; y < nf; ++y) {
                    ++rep.checks;
                    long lhs = pc.sig(G.mul(t, s), x, y) + pc.ta(F.mul(x, y), t, s);
                    long rhs = pc.ta(x, t, s) +
                               pc.ta(y, mp.ract_at(t, mp.lact_at(s, x)), mp.ract_at(s, x)) +
                               pc.sig(t, mp.lact_at(s, x), mp.lact_at(mp.ract_at(s, x), y)) +
                               pc.sig(s, x, y);
                    if (imod(lhs - rhs, N) != 0)
                        rep.add("compatibility of sigma and tau", {t, s, x, y});
                }
    // sigma_1(x,y) = 1 and tau_1(g,h) = 1
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) {
            ++rep.checks;
            if (pc.sig(e_g, x, y) != 0) rep.add("sigma_1(x,y) = 1", {x, y});
        }
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
            ++rep.checks;
            if (pc.ta(e_f, g, h) != 0) rep.add("tau_1(g,h) = 1", {g, h});
        }
    return rep;
}

namespace {

struct Unknowns {
    int nf, ng;
    long sig_count, tau_count;
    explicit Unknowns(const MatchedPair& mp)
        : nf(mp.F.order()), ng(mp.G.order()),
          sig_count(static_cast<long>(ng) * nf * nf),
          tau_count(static_cast<long>(nf) * ng * ng) {}
    long total() const { return sig_count + tau_count; }
    long sig_idx(int g, int x, int y) const { return (static_cast<long>(g) * nf + x) * nf + y; }
    long tau_idx(int x, int g, int h) const {
        return sig_count + (static_cast<long>(x) * ng + g) * ng + h;
    }
};

} // namespace

PairCocycle coboundary_pair(const MatchedPair& mp, int N, const std::vector<long>& beta) {
    const FiniteGroup& F = mp.F;
    const FiniteGroup& G = mp.G;
    int nf = F.order(), ng = G.order();
    if (static_cast<int>(beta.size()) != ng * nf)
        throw std::invalid_argument("coboundary_pair: beta must have |G|*|F| entries");
    auto b = [&](int g, int x) -> long {
        if (g == G.id() || x == F.id()) return 0;  // normalized
        return beta[static_cast<size_t>(g) * nf + x];
    };
    PairCocycle pc = PairCocycle::trivial(mp, N);
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x)
            for (int y = 0; y < nf; ++y)
                pc.set_sig(g, x, y, b(g, F.mul(x, y)) - b(g, x) - b(mp.ract_at(g, x), y));
    for (int x = 0; x < nf; ++x)
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < ng; ++h)
                pc.set_tau(x, g, h, b(g, mp.lact_at(h, x)) + b(h, x) - b(G.mul(g, h), x));
    return pc;
}

OpextResult solve_opext(const MatchedPair& mp, int N, long cap) {
    const FiniteGroup& F = mp.F;
    const FiniteGroup& G = mp.G;
    int nf = F.order(), ng = G.order();
    Unknowns u(mp);
    if (u.total() > cap)
        throw std::runtime_error("solve_opext: unknown count exceeds cap");

    // stack every law as an integer row
    std::vector<std::vector<std::pair<long, long>>> rows;  // (column, coefficient)
    auto push = [&](std::vector<std::pair<long, long>> r) { rows.push_back(std::move(r)); };

    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x)
            for (int y = 0; y < nf; ++y)
                for (int z = 0; z < nf; ++z)
                    push({{u.sig_idx(mp.ract_at(g, x), y, z), 1},
                          {u.sig_idx(g, x, F.mul(y, z)), 1},
                          {u.sig_idx(g, F.mul(x, y), z), -1},
                          {u.sig_idx(g, x, y), -1}});
    for (int x = 0; x < nf; ++x)
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < ng; ++h)
                for (int k = 0; k < ng; ++k)
                    push({{u.tau_idx(x, G.mul(g, h), k), 1},
                          {u.tau_idx(mp.lact_at(k, x), g, h), 1},
                          {u.tau_idx(x, h, k), -1},
                          {u.tau_idx(x, g, G.mul(h, k)), -1}});
    for (int t = 0; t < ng; ++t)
        for (int s = 0; s < ng; ++s)
            for (int x = 0; x < nf; ++x)
                for (int y = 0; y < nf; ++y)
                    push({{u.sig_idx(G.mul(t, s), x, y), 1},
                          {u.tau_idx(F.mul(x, y), t, s), 1},
                          {u.tau_idx(x, t, s), -1},
                          {u.tau_idx(y, mp.ract_at(t, mp.lact_at(s, x)), mp.ract_at(s, x)), -1},
                          {u.sig_idx(t, mp.lact_at(s, x), mp.lact_at(mp.ract_at(s, x), y)), -1},
                          {u.sig_idx(s, x, y), -1}});
    // normalizations
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x) {
            push({{u.sig_idx(g, x, F.id()), 1}});
            push({{u.sig_idx(g, F.id(), x), 1}});
        }
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) push({{u.sig_idx(G.id(), x, y), 1}});
    for (int x = 0; x < nf; ++x)
        for (int g = 0; g < ng; ++g) {
            push({{u.tau_idx(x, g, G.id()), 1}});
            push({{u.tau_idx(x, G.id(), g), 1}});
        }
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) push({{u.tau_idx(F.id(), g, h), 1}});

    IntMat E(static_cast<long>(rows.size()), u.total());
    for (long i = 0; i < E.rows; ++i)
        for (auto [j, c] : rows[i]) E.at(i, j) += c;

    BigInt bigN(N);
    IntMat K = kernel_mod_lattice(E, bigN);

    // Integer coboundary matrix: columns indexed by the free entries of a
    // normalized beta: G x F -> Z (beta(1,x) = beta(g,1) = 0), rows the
    // (sigma, tau) coordinates of the induced pair.
    std::vector<std::pair<int, int>> beta_support;
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x)
            if (g != G.id() && x != F.id()) beta_support.emplace_back(g, x);
    long nb = static_cast<long>(beta_support.size());
    IntMat D0(u.total(), nb);
    for (long col = 0; col < nb; ++col) {
        auto [gb, xb] = beta_support[col];
        auto bterm = [&](int g, int x) { return (g == gb && x == xb) ? 1 : 0; };
        for (int g = 0; g < ng; ++g)
            for (int x = 0; x < nf; ++x)
                for (int y = 0; y < nf; ++y)
                    D0.at(u.sig_idx(g, x, y), col) += bterm(g, F.mul(x, y)) - bterm(g, x) -
                                                      bterm(mp.ract_at(g, x), y);
        for (int x = 0; x < nf; ++x)
            for (int g = 0; g < ng; ++g)
                for (int h = 0; h < ng; ++h)
                    D0.at(u.tau_idx(x, g, h), col) += bterm(g, mp.lact_at(h, x)) + bterm(h, x) -
                                                      bterm(G.mul(g, h), x);
    }

    // Equivalences of extensions scale basis vectors by arbitrary roots of
    // unity, not only mu_N ones: the coboundary sublattice is
    // {u : s*u = D0 beta mod N*s for some integer beta}, i.e. pairs bounding
    // with mu_{N*s}-valued beta. Only primes dividing N can contribute; grow
    // s until the lattice stabilizes.
    auto bound_lattice = [&](const BigInt& s) {
        long dim = u.total();
        IntMat W(dim, dim + nb + dim);
        for (long i = 0; i < dim; ++i) {
            W.at(i, i) = s;
            for (long j = 0; j < nb; ++j) W.at(i, dim + j) = -D0.at(i, j);
            W.at(i, dim + nb + i) = -(bigN * s);
        }
        IntMat ker = kernel_lattice(W);
        IntMat gen(dim, ker.cols);
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < ker.cols; ++j) gen.at(i, j) = ker.at(i, j);
        return hermite_column_basis(gen);
    };
    std::vector<long> nprimes;
    for (long p = 2, rem = N; rem > 1; ++p)
        if (rem % p == 0) {
            nprimes.push_back(p);
            while (rem % p == 0) rem /= p;
        }
    BigInt s(1);
    IntMat L = bound_lattice(s);
    for (bool grew = true; grew;) {
        grew = false;
        for (long p : nprimes) {
            IntMat Lp = bound_lattice(s * p);
            if (!(Lp == L)) {
                L = Lp;
                s *= p;
                grew = true;
            }
        }
        if (s > bigN * bigN * (nf * ng))
            throw std::logic_error("solve_opext: coboundary scale did not stabilize");
    }

    auto q = lattice_quotient(K, L);

    OpextResult res;
    res.class_reps.push_back(PairCocycle::trivial(mp, N));
    for (size_t k = 0; k < q.factors.size(); ++k) {
        if (q.factors[k] == 0 || bigN % q.factors[k] != 0)
            throw std::logic_error("solve_opext: invariant factor does not divide N");
        res.invariant_factors.push_back(to_int64(q.factors[k]));
        PairCocycle pc = PairCocycle::trivial(mp, N);
        for (long i = 0; i < u.sig_count; ++i)
            pc.sigma[i] =
                to_int64(((q.generators.at(i, static_cast<long>(k)) % bigN) + bigN) % bigN);
        for (long i = 0; i < u.tau_count; ++i)
            pc.tau[i] = to_int64(
                ((q.generators.at(u.sig_count + i, static_cast<long>(k)) % bigN) + bigN) % bigN);
        res.class_reps.push_back(std::move(pc));
    }
    return res;
}

Cochain kac_omega(const PairCocycle& pc, const ExactFactorization& fact) {
    const FiniteGroup& sigma = fact.sigma;
    const MatchedPair& mp = pc.mp;
    int n = sigma.order();
    // local index lookups for F and G members
    std::map<int, int> fidx, gidx;
    for (size_t i = 0; i < fact.F.size(); ++i) fidx[fact.F[i]] = static_cast<int>(i);
    for (size_t i = 0; i < fact.G.size(); ++i) gidx[fact.G[i]] = static_cast<int>(i);
    if (static_cast<int>(fact.F.size()) != mp.F.order() ||
        static_cast<int>(fact.G.size()) != mp.G.order())
        throw std::invalid_argument("kac_omega: factorization inconsistent with matched pair");

    Cochain w = Cochain::zero(sigma, 3, pc.N);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int pa = gidx.at(fact.p(a));
                int pb = gidx.at(fact.p(b));
                int pib = fidx.at(fact.pi(b));
                int pic = fidx.at(fact.pi(c));
                long v = pc.ta(pic, mp.ract_at(pa, pib), pb) +
                         pc.sig(pa, pib, mp.lact_at(pb, pic));
                w.set({a, b, c}, v);
            }
    return w;
}

} // namespace bicross
