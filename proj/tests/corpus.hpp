#pragma once

#include "bicross/group.hpp"
#include "bicross/opext.hpp"

#include <stdexcept>

namespace corpus {

using namespace bicross;

inline FiniteGroup s3() { return group_from_permutations({{1, 0, 2}, {1, 2, 0}}); }
inline FiniteGroup d4() { return group_from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}); }
inline FiniteGroup a4() {
    return group_from_permutations({{1, 0, 3, 2}, {1, 2, 0, 3}});  // (01)(23), (012)
}
inline FiniteGroup klein4() { return group_from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}); }

/// the F = Z2, G = A3 factorization of S3
inline ExactFactorization s3_split_fact() {
    for (const auto& f : exact_factorizations(s3()))
        if (f.F.size() == 2 && f.G.size() == 3) return f;
    throw std::logic_error("no Z2 x A3 factorization of S3");
}

/// the F = Z2, G = Z2 x Z2 factorization of D4
inline ExactFactorization d4_klein_fact() {
    auto g = d4();
    for (const auto& f : exact_factorizations(g)) {
        if (f.F.size() != 2 || f.G.size() != 4) continue;
        auto G = subgroup_group(g, f.G);
        bool noncyclic = true;
        for (int i = 0; i < 4; ++i)
            if (G.element_order(i) == 4) noncyclic = false;
        if (noncyclic) return f;
    }
    throw std::logic_error("no Z2 x V4 factorization of D4");
}

inline FiniteGroup z2cubed() {
    return group_from_permutations({{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}});
}

/// Z2^3 = F x G with F the Klein four group and G = Z2: both actions trivial.
inline ExactFactorization z2cubed_klein_fact() {
    auto g = z2cubed();
    // BFS layer 1 holds the generators in lexicographic order: (45), (23), (01)
    auto F = subgroup_closure(g, {2, 3});
    auto G = subgroup_closure(g, {1});
    if (F.size() != 4 || G.size() != 2) throw std::logic_error("bad z2cubed generators");
    return make_factorization(g, F, G);
}

/// the swapped factorization: F = Z2 x Z2, G = Z2
inline ExactFactorization d4_klein_first_fact() {
    auto g = d4();
    for (const auto& f : exact_factorizations(g)) {
        if (f.F.size() != 4 || f.G.size() != 2) continue;
        auto F = subgroup_group(g, f.F);
        bool noncyclic = true;
        for (int i = 0; i < 4; ++i)
            if (F.element_order(i) == 4) noncyclic = false;
        if (noncyclic) return f;
    }
    throw std::logic_error("no V4 x Z2 factorization of D4");
}

} // namespace corpus
