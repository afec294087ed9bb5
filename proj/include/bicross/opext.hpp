#pragma once

#include "bicross/cochain.hpp"
#include "bicross/group.hpp"
#include "bicross/report.hpp"

#include <vector>

namespace bicross {

/// A pair (sigma, tau) of mu_N-valued maps on a matched pair, stored as
/// exponent tables mod N: sigma[g][x][y] with g in G, x,y in F, and
/// tau[x][g][h] with x in F, g,h in G. Valid pairs satisfy the two twisted
/// 2-cocycle laws, the compatibility law and the normalizations checked by
/// verify_pair; they are exactly the data that make the bicrossed product a
/// Hopf algebra.
struct PairCocycle {
    MatchedPair mp;
    int N = 1;
    std::vector<long> sigma;  // |G| * |F| * |F|
    std::vector<long> tau;    // |F| * |G| * |G|

    static PairCocycle trivial(const MatchedPair& mp, int N);

    long sig(int g, int x, int y) const {
        return sigma[(static_cast<size_t>(g) * mp.F.order() + x) * mp.F.order() + y];
    }
    long ta(int x, int g, int h) const {
        return tau[(static_cast<size_t>(x) * mp.G.order() + g) * mp.G.order() + h];
    }
    void set_sig(int g, int x, int y, long v) {
        sigma[(static_cast<size_t>(g) * mp.F.order() + x) * mp.F.order() + y] = imod(v, N);
    }
    void set_tau(int x, int g, int h, long v) {
        tau[(static_cast<size_t>(x) * mp.G.order() + g) * mp.G.order() + h] = imod(v, N);
    }
};

/// Exhaustive check of the cocycle laws, compatibility and normalizations;
/// every violated instance is reported with its witness tuple.
Report verify_pair(const PairCocycle& pc);

/// The group of (tau, sigma) pairs modulo the pairs induced by a normalized
/// map G x F -> mu_N, as invariant factors plus one representative per
/// generator. Representative 0 of the returned list is always the trivial pair.
struct OpextResult {
    std::vector<long> invariant_factors;   // of the nontrivial part, divisibility ascending
    std::vector<PairCocycle> class_reps;   // [0] = trivial pair, then one per factor
};
OpextResult solve_opext(const MatchedPair& mp, int N, long cap = 100000);

/// The pair induced by a normalized map beta: G x F -> Z/N (a coboundary pair;
/// its class is trivial). Used by tests and the Kac-sequence evidence.
PairCocycle coboundary_pair(const MatchedPair& mp, int N, const std::vector<long>& beta);

/// The 3-cocycle on Sigma attached to (tau, sigma):
///   omega(a,b,c) = tau_{pi(c)}(p(a) <| pi(b), p(b)) + sigma_{p(a)}(pi(b), p(b) |> pi(c))
/// in exponents. fact must be a factorization inducing pc.mp.
Cochain kac_omega(const PairCocycle& pc, const ExactFactorization& fact);

} // namespace bicross
