#pragma once

#include "bicross/cochain.hpp"
#include "bicross/group.hpp"
#include "bicross/hopf.hpp"
#include "bicross/opext.hpp"

namespace bicross {

/// Basis labeling of an extension k^G # kF: index = g * |F| + x, g-major.
struct BicrossedBasis {
    int ng = 1, nf = 1;
    int index(int g, int x) const { return g * nf + x; }
    int g_of(int idx) const { return idx / nf; }
    int x_of(int idx) const { return idx % nf; }
    int dim() const { return ng * nf; }
};

/// kG with Delta(g) = g x g and S(g) = g^{-1}.
StructureHopf group_algebra(const FiniteGroup& G, int N);

/// k^G with pointwise product and Delta(delta_a) = sum_{bc=a} delta_b x delta_c.
StructureHopf fn_algebra(const FiniteGroup& G, int N);

/// k_gamma G: product g.h = zeta^{gamma(g,h)} gh. gamma must be a normalized
/// 2-cocycle (throws otherwise). Algebra only.
StructureAlgebra twisted_group_algebra(const FiniteGroup& G, const Cochain& gamma);

/// The bicrossed product k^G #^tau_sigma kF on the g-major basis delta_g x:
///   (delta_g x)(delta_h y) = [g<|x = h] zeta^{sigma_g(x,y)} delta_g (xy)
///   Delta(delta_g x) = sum_{st=g} zeta^{tau_x(s,t)} delta_s (t|>x)  x  delta_t x
/// The antipode is solved, never assumed, and the full Hopf verification runs
/// before returning; any failure aborts with the report text.
StructureHopf bicrossed_product(const PairCocycle& pc);

/// The Drinfeld double on the basis (dual basis) x (basis), dual-major.
/// Requires an invertible antipode; the result is fully verified.
StructureHopf drinfeld_double(const StructureHopf& H);

/// The twisted double of Dijkgraaf, Pasquier and Roche on the basis
/// delta_g x tensor x, with the associator built from w. Requires a normalized
/// 3-cocycle; the result passes verify_quasi (else throws).
QuasiBialgebra dpr_double(const FiniteGroup& sigma, const Cochain& w);

/// J(beta) = sum zeta^{beta(s,t)} (delta_s 1) x (delta_t 1) inside a bicrossed
/// product, from a normalized 2-cochain beta on G.
SparseElt idempotent_twist(const BicrossedBasis& basis, const Cochain& beta);

/// The dual 2-cocycle twist of an extension by alpha on F, pulled back along
/// the quotient map to kF. On the g-major basis the product gains the factor
/// zeta^{alpha(g |> x, h |> y) - alpha(x, y)} (both twist legs contribute; the
/// naive single factor alpha(x,y) is not a bialgebra map). The antipode is
/// re-solved and the result verified; non-cocycles surface as associativity
/// failures in the thrown report when the left action is nontrivial.
StructureHopf twist_mult(const StructureHopf& H, const MatchedPair& mp, const Cochain& alpha);

/// Everything both doubles must share when they are twist equivalent:
/// dimension, commutativity flag, algebra center dimension, and the ranks and
/// traces of left multiplication by powers of the canonical central element
/// (basis-free, hence isomorphism-invariant). The report lists any mismatch.
struct DoubleComparison {
    Report report;
    long dim_double_a = 0, dim_double_dpr = 0;
    int center_double_a = -1, center_double_dpr = -1;
    bool commutative_a = false, commutative_dpr = false;
};
DoubleComparison double_comparison(const PairCocycle& pc, const ExactFactorization& fact);

} // namespace bicross
