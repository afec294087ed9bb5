#pragma once

#include "bicross/cyclo.hpp"
#include "bicross/report.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace bicross {

/// Sparse vector in a fixed basis: sorted (index, nonzero coefficient) pairs.
using SparseVec = std::vector<std::pair<int, CycloNum>>;

/// Sparse element of a tensor power, keyed by the flattened multi-index.
using SparseElt = std::map<long, CycloNum>;

SparseVec sparse_normalize(std::map<int, CycloNum> acc);
SparseVec sparse_from_dense(const std::vector<CycloNum>& v);
std::vector<CycloNum> dense_from_sparse(const SparseVec& v, int dim, int N);

/// Dense matrix over Q(zeta_N) with exact Gaussian elimination.
struct CMat {
    int rows = 0, cols = 0, N = 1;
    std::vector<CycloNum> a;

    CMat() = default;
    CMat(int r, int c, int torsion);
    CycloNum& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const CycloNum& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static CMat identity(int n, int torsion);
    CMat mul(const CMat& o) const;
    std::vector<CycloNum> apply(const std::vector<CycloNum>& v) const;
    int rank() const;
    std::optional<CMat> inverse() const;
    /// Null space basis as matrix columns (deterministic: free columns in order).
    CMat null_space() const;
    /// Solve A x = b; nullopt if inconsistent. Least-index pivoting, canonical x.
    std::optional<std::vector<CycloNum>> solve(const std::vector<CycloNum>& b) const;
    /// Solve A X = B column-wise with one elimination; nullopt if any column fails.
    std::optional<CMat> solve_many(const CMat& B) const;
    bool operator==(const CMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// A finite-dimensional algebra by sparse structure constants over Q(zeta_N).
struct StructureAlgebra {
    int dim = 0;
    int N = 1;                     // scalars live in Q(zeta_N)
    std::vector<SparseVec> mult;   // mult[i*dim+j] = e_i * e_j
    std::vector<CycloNum> unit;    // coordinates of 1

    const SparseVec& prod(int i, int j) const { return mult[static_cast<size_t>(i) * dim + j]; }
    std::vector<CycloNum> apply_left(const std::vector<CycloNum>& x,
                                     const std::vector<CycloNum>& y) const;  // x*y dense
    SparseElt tensor_mul(int tensor_power, const SparseElt& a, const SparseElt& b) const;
};

/// Coalgebra / bialgebra / Hopf data on top of the algebra part.
/// comult[i] lists ((j,k), c) with Delta(e_i) = sum c e_j (x) e_k.
struct StructureHopf {
    StructureAlgebra alg;
    std::vector<std::vector<std::tuple<int, int, CycloNum>>> comult;
    std::vector<CycloNum> counit;
    std::optional<CMat> antipode;  // column j = S(e_j)

    int dim() const { return alg.dim; }
    int torsion() const { return alg.N; }
    SparseElt comult_elt(int i) const;
};

/// A quasi-bialgebra: bialgebra data minus coassociativity, plus an invertible
/// associator in the triple tensor.
struct QuasiBialgebra {
    StructureHopf h;  // antipode unused
    SparseElt assoc;
    SparseElt assoc_inv;
};

Report verify_algebra(const StructureAlgebra& A);
Report verify_coalgebra(const StructureHopf& H);
Report verify_bialgebra(const StructureHopf& H);
/// Both antipode laws for the stored antipode.
Report verify_antipode(const StructureHopf& H);
/// Algebra + coalgebra + bialgebra + antipode when present.
Report verify_hopf(const StructureHopf& H);

/// Associator invertibility, twisted coassociativity, pentagon and the three
/// counit triangles, exhaustively over basis elements.
Report verify_quasi(const QuasiBialgebra& Q);

/// The convolution inverse of the identity, when it exists: computed from the
/// minimal polynomial of id in the convolution algebra and checked against
/// both antipode laws. Returns the dim x dim matrix S or nullopt.
std::optional<CMat> solve_antipode(const StructureHopf& B);

/// Brute-force antipode solve as a dense linear system in the dim^2 unknowns
/// of S (test oracle; small dimensions only).
std::optional<CMat> solve_antipode_dense(const StructureHopf& B);

StructureHopf dual(const StructureHopf& H);
StructureHopf op(const StructureHopf& H);
StructureHopf cop(const StructureHopf& H);
StructureHopf tensor(const StructureHopf& H1, const StructureHopf& H2);

/// Conjugate the comultiplication by an invertible J in H (x) H with
/// (eps (x) id)J = (id (x) eps)J = 1. Re-solves the antipode and verifies the
/// bialgebra axioms; throws std::invalid_argument when J is not invertible,
/// fails the counit normalization, or the twisted result fails verification.
StructureHopf twist_comult(const StructureHopf& H, const SparseElt& J);

int center_dimension(const StructureAlgebra& A);
bool is_commutative(const StructureAlgebra& A);
bool is_cocommutative(const StructureHopf& H);

/// Exact structure-constant equality (same dim, N, tensors).
bool equal_structure(const StructureHopf& A, const StructureHopf& B);

/// Matrix of left multiplication by the element x.
CMat left_mult_matrix(const StructureAlgebra& A, const std::vector<CycloNum>& x);

/// trace of left multiplication by each basis element.
std::vector<CycloNum> left_regular_traces(const StructureAlgebra& A);

/// m(Casimir) of the trace form tr(L_x L_y): a canonical central element,
/// preserved by any algebra isomorphism. nullopt when the form is singular.
std::optional<std::vector<CycloNum>> canonical_central_element(const StructureAlgebra& A);

} // namespace bicross
