#pragma once

#include "bicross/group.hpp"
#include "bicross/intmat.hpp"
#include "bicross/report.hpp"

#include <vector>

namespace bicross {

/// A function G^n -> Z/N, the exponent table of a mu_N-valued cochain in the
/// bar complex (trivial action). Values are stored flat in lexicographic
/// argument order, first argument major.
struct Cochain {
    FiniteGroup group;
    int degree = 0;
    int N = 1;
    std::vector<long> values;  // size order^degree, entries in [0, N)

    static Cochain zero(const FiniteGroup& g, int degree, int N);

    long flat_index(const std::vector<int>& args) const;
    long at(const std::vector<int>& args) const { return values[flat_index(args)]; }
    void set(const std::vector<int>& args, long v);

    /// 0 whenever any argument is the identity.
    bool is_normalized() const;

    /// The same cochain viewed on a subgroup (args restricted to the element list).
    Cochain restricted_to(const std::vector<int>& subgroup_elements) const;

    bool is_zero() const;
};

/// Alternating-sum bar differential, written additively in exponents.
Cochain coboundary(const Cochain& c);

/// Exhaustive d(c) = 0 check; failures carry the witness tuple.
Report verify_cocycle(const Cochain& c);

/// Tuples with no identity argument, indexed lexicographically: the coordinate
/// system of the normalized subcomplex.
struct NormalizedBasis {
    int order;
    int degree;
    long count;  // (order-1)^degree
    std::vector<int> tuple(long idx) const;
    long index(const std::vector<int>& args) const;  // -1 if any arg is identity
    explicit NormalizedBasis(const FiniteGroup& g, int degree);

private:
    int identity_;
};

/// Integer matrix of d: C^n_norm -> C^{n+1}_norm in normalized coordinates.
IntMat bar_differential_matrix(const FiniteGroup& g, int degree);

/// Integer matrix of d in full (unnormalized) coordinates.
IntMat bar_differential_matrix_full(const FiniteGroup& g, int degree);

} // namespace bicross
