#pragma once

#include "bicross/rational.hpp"

#include <optional>
#include <vector>

namespace bicross {

/// Dense arbitrary-precision integer matrix, row-major.
struct IntMat {
    long rows = 0;
    long cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, BigInt(0)) {}

    BigInt& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMat identity(long n);
    IntMat mul(const IntMat& o) const;
    IntMat hstack(const IntMat& o) const;
    IntMat column(long c) const;
    IntMat columns(const std::vector<long>& idx) const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// U * A * V = diag(d), with U, V unimodular. Only requested transforms are filled.
struct SmithForm {
    std::vector<BigInt> d;  // length min(rows, cols); nonzero entries first, d[i] | d[i+1]
    long rank = 0;
    IntMat U, Uinv, V, Vinv;
};

struct SmithOptions {
    bool want_U = false;
    bool want_Uinv = false;
    bool want_V = false;
    bool want_Vinv = false;
};

SmithForm smith_normal_form(IntMat A, const SmithOptions& opt = {});

/// Basis (square, full rank, column-major as matrix columns) of the lattice
/// {x in Z^cols : A x = 0 mod N}. Always contains N * Z^cols.
IntMat kernel_mod_lattice(const IntMat& A, const BigInt& N);

/// Basis of the integer kernel {x : A x = 0} as matrix columns (may be empty).
IntMat kernel_lattice(const IntMat& A);

/// Canonical solution of A x = b (mod N), if one exists. Zero b yields zero x.
std::optional<std::vector<BigInt>> solve_mod(const IntMat& A, const std::vector<BigInt>& b,
                                             const BigInt& N);

/// Exact integer solve K X = B for square nonsingular K whose lattice contains B's columns.
/// Throws if the solution is not integral.
IntMat solve_integral(const IntMat& K, const IntMat& B);

/// Column Hermite form: a basis for the lattice spanned by the columns of A.
/// Returns a rows x rank matrix whose columns are the basis.
IntMat hermite_column_basis(const IntMat& A);

/// Structure of the finite quotient (lattice spanned by K's columns) / (lattice spanned
/// by L's columns). K square nonsingular, L inside K. Returns invariant factors > 1 and
/// matching generator columns expressed in the ambient coordinates.
struct LatticeQuotient {
    std::vector<BigInt> factors;  // each > 1 (or 0 for a free summand)
    IntMat generators;            // ambient-coordinate columns, one per factor
};
LatticeQuotient lattice_quotient(const IntMat& K, const IntMat& L);

} // namespace bicross
