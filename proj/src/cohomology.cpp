#include "bicross/cohomology.hpp"

#include <stdexcept>

namespace bicross {

CohomologyResult cohomology(const FiniteGroup& g, int degree, int N, long cap) {
    if (degree < 1) throw std::invalid_argument("cohomology: degree must be >= 1");
    NormalizedBasis src(g, degree), dst(g, degree + 1);
    if (dst.count * src.count > cap)
        throw std::runtime_error("cohomology: boundary matrix exceeds cap (" +
                                 std::to_string(dst.count * src.count) + " > " +
                                 std::to_string(cap) + ")");

    IntMat Dn = bar_differential_matrix(g, degree);
    IntMat Dprev = bar_differential_matrix(g, degree - 1);
    long cn = src.count;
    BigInt bigN(N);
    long e = g.order();  // torsion headroom so that k^x-coboundaries are seen
    BigInt M = bigN * e;

    // cocycle lattice mod N
    IntMat K = kernel_mod_lattice(Dn, bigN);

    // {y : e*y lies in im(Dprev) + M Z^cn}, i.e. mu_N-cocycles that bound with
    // mu_{N*e}-valued cochains
    IntMat W(cn, cn + Dprev.cols + cn);
    for (long i = 0; i < cn; ++i) {
        W.at(i, i) = e;
        for (long j = 0; j < Dprev.cols; ++j) W.at(i, cn + j) = -Dprev.at(i, j);
        W.at(i, cn + Dprev.cols + i) = -M;
    }
    IntMat ker = kernel_lattice(W);
    IntMat Lgen(cn, ker.cols);
    for (long i = 0; i < cn; ++i)
        for (long j = 0; j < ker.cols; ++j) Lgen.at(i, j) = ker.at(i, j);
    IntMat L = hermite_column_basis(Lgen);

    auto q = lattice_quotient(K, L);

    CohomologyResult res;
    for (size_t k = 0; k < q.factors.size(); ++k) {
        if (q.factors[k] == 0 || bigN % q.factors[k] != 0)
            throw std::logic_error("cohomology: invariant factor does not divide N");
        res.invariant_factors.push_back(to_int64(q.factors[k]));
        Cochain c = Cochain::zero(g, degree, N);
        for (long i = 0; i < cn; ++i) {
            long v = to_int64(((q.generators.at(i, static_cast<long>(k)) % bigN) + bigN) % bigN);
            c.set(src.tuple(i), v);
        }
        res.generators.push_back(std::move(c));
    }
    return res;
}

std::optional<Cochain> trivialize_restriction(const Cochain& w,
                                              const std::vector<int>& subgroup_elements) {
    if (!coboundary(w).is_zero())
        throw std::invalid_argument("trivialize_restriction: input is not a cocycle");
    Cochain ws = w.restricted_to(subgroup_elements);
    const FiniteGroup& s = ws.group;
    IntMat D = bar_differential_matrix_full(s, w.degree - 1);
    std::vector<BigInt> rhs(ws.values.begin(), ws.values.end());
    auto sol = solve_mod(D, rhs, BigInt(w.N));
    if (!sol) return std::nullopt;
    Cochain cert = Cochain::zero(s, w.degree - 1, w.N);
    for (size_t i = 0; i < sol->size(); ++i) cert.values[i] = to_int64((*sol)[i]);
    return cert;
}

} // namespace bicross
