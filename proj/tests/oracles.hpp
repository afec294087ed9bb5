#pragma once

#include "bicross/cochain.hpp"
#include "bicross/group.hpp"

#include <set>

namespace oracles {

using namespace bicross;

/// Brute-force order of Z^n(mu_N) modulo coboundaries of mu_{N*|G|}-valued
/// cochains, for groups small enough to enumerate every normalized cochain.
/// Independent of the Smith-normal-form path.
inline long cohomology_enumeration(const FiniteGroup& g, int degree, int N) {
    NormalizedBasis basis(g, degree);
    NormalizedBasis below(g, degree - 1);
    long e = g.order();
    long M = N * e;

    long cocycles = 0;
    std::vector<long> vals(basis.count, 0);
    long total = 1;
    for (long i = 0; i < basis.count; ++i) total *= N;
    for (long code = 0; code < total; ++code) {
        long rest = code;
        for (long i = 0; i < basis.count; ++i) {
            vals[i] = rest % N;
            rest /= N;
        }
        Cochain c = Cochain::zero(g, degree, N);
        for (long i = 0; i < basis.count; ++i) c.set(basis.tuple(i), vals[i]);
        if (coboundary(c).is_zero()) ++cocycles;
    }

    std::set<std::vector<long>> bounded;
    std::vector<long> low(below.count, 0);
    long totalc = 1;
    for (long i = 0; i < below.count; ++i) totalc *= M;
    for (long code = 0; code < totalc; ++code) {
        long rest = code;
        for (long i = 0; i < below.count; ++i) {
            low[i] = rest % M;
            rest /= M;
        }
        Cochain c = Cochain::zero(g, degree - 1, static_cast<int>(M));
        for (long i = 0; i < below.count; ++i) c.set(below.tuple(i), low[i]);
        Cochain d = coboundary(c);
        bool in_muN = true;
        std::vector<long> key(basis.count);
        for (long i = 0; i < basis.count; ++i) {
            long v = d.at(basis.tuple(i));
            if (v % e != 0) {
                in_muN = false;
                break;
            }
            key[i] = v / e;
        }
        if (in_muN) bounded.insert(key);
    }
    return cocycles / static_cast<long>(bounded.size());
}

/// Number of orbits of simultaneous conjugation on commuting pairs: the
/// classical count of irreducible representations of the double of a group.
inline int commuting_pair_orbits(const FiniteGroup& g) {
    int n = g.order();
    std::set<std::pair<int, int>> seen;
    int orbits = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (g.mul(a, b) != g.mul(b, a)) continue;
            if (seen.count({a, b})) continue;
            ++orbits;
            for (int s = 0; s < n; ++s)
                seen.insert({g.mul(g.mul(s, a), g.inv(s)), g.mul(g.mul(s, b), g.inv(s))});
        }
    return orbits;
}

} // namespace oracles
