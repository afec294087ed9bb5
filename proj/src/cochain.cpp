#include "bicross/cochain.hpp"

#include <cmath>
#include <stdexcept>

namespace bicross {

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

Cochain Cochain::zero(const FiniteGroup& g, int degree, int N) {
    if (degree < 0) throw std::invalid_argument("Cochain: negative degree");
    if (N < 1) throw std::invalid_argument("Cochain: torsion order must be positive");
    Cochain c;
    c.group = g;
    c.degree = degree;
    c.N = N;
    c.values.assign(ipow(g.order(), degree), 0);
    return c;
}

long Cochain::flat_index(const std::vector<int>& args) const {
    if (static_cast<int>(args.size()) != degree)
        throw std::invalid_argument("Cochain: wrong number of arguments");
    long idx = 0;
    for (int a : args) idx = idx * group.order() + a;
    return idx;
}

void Cochain::set(const std::vector<int>& args, long v) {
    values[flat_index(args)] = imod(v, N);
}

bool Cochain::is_normalized() const {
    int m = group.order();
    for (long idx = 0; idx < static_cast<long>(values.size()); ++idx) {
        long rest = idx;
        bool has_id = false;
        for (int i = 0; i < degree; ++i) {
            if (rest % m == group.id()) has_id = true;
            rest /= m;
        }
        if (has_id && values[idx] != 0) return false;
    }
    return true;
}

Cochain Cochain::restricted_to(const std::vector<int>& elems) const {
    FiniteGroup s = subgroup_group(group, elems);
    Cochain r = Cochain::zero(s, degree, N);
    std::vector<int> args(degree, 0), sargs(degree, 0);
    long total = static_cast<long>(r.values.size());
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        for (int i = degree - 1; i >= 0; --i) {
            sargs[i] = static_cast<int>(rest % s.order());
            args[i] = elems[sargs[i]];
            rest /= s.order();
        }
        r.values[idx] = at(args);
    }
    return r;
}

bool Cochain::is_zero() const {
    for (long v : values)
        if (v != 0) return false;
    return true;
}

Cochain coboundary(const Cochain& c) {
    const FiniteGroup& g = c.group;
    int n = c.degree, m = g.order();
    Cochain d = Cochain::zero(g, n + 1, c.N);
    std::vector<int> args(n + 1, 0), face(n, 0);
    long total = static_cast<long>(d.values.size());
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        for (int i = n; i >= 0; --i) {
            args[i] = static_cast<int>(rest % m);
            rest /= m;
        }
        long acc = 0;
        // face 0: drop the first argument
        for (int i = 0; i < n; ++i) face[i] = args[i + 1];
        acc += c.at(face);
        // inner faces: merge arguments at positions i-1, i
        for (int i = 1; i <= n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j < i - 1) face[j] = args[j];
                else if (j == i - 1) face[j] = g.mul(args[i - 1], args[i]);
                else face[j] = args[j + 1];
            }
            acc += (i % 2 ? -1 : 1) * c.at(face);
        }
        // last face: drop the final argument
        for (int i = 0; i < n; ++i) face[i] = args[i];
        acc += ((n + 1) % 2 ? -1 : 1) * c.at(face);
        d.values[idx] = imod(acc, c.N);
    }
    return d;
}

Report verify_cocycle(const Cochain& c) {
    Report rep;
    rep.subject = "cocycle (degree " + std::to_string(c.degree) + ")";
    Cochain d = coboundary(c);
    int m = c.group.order();
    for (long idx = 0; idx < static_cast<long>(d.values.size()); ++idx) {
        ++rep.checks;
        if (d.values[idx] == 0) continue;
        std::vector<long> witness;
        long rest = idx;
        for (int i = 0; i < d.degree; ++i) {
            witness.insert(witness.begin(), rest % m);
            rest /= m;
        }
        rep.add("d(c) = 0", witness, "value " + std::to_string(d.values[idx]));
    }
    return rep;
}

NormalizedBasis::NormalizedBasis(const FiniteGroup& g, int deg)
    : order(g.order()), degree(deg), identity_(g.id()) {
    count = ipow(order - 1, degree);
}

std::vector<int> NormalizedBasis::tuple(long idx) const {
    std::vector<int> args(degree);
    for (int i = degree - 1; i >= 0; --i) {
        int r = static_cast<int>(idx % (order - 1));
        idx /= (order - 1);
        args[i] = (r >= identity_) ? r + 1 : r;  // skip the identity slot
    }
    return args;
}

long NormalizedBasis::index(const std::vector<int>& args) const {
    long idx = 0;
    for (int a : args) {
        if (a == identity_) return -1;
        int r = (a > identity_) ? a - 1 : a;
        idx = idx * (order - 1) + r;
    }
    return idx;
}

IntMat bar_differential_matrix(const FiniteGroup& g, int degree) {
    NormalizedBasis src(g, degree), dst(g, degree + 1);
    IntMat D(dst.count, src.count);
    int n = degree;
    std::vector<int> face(n, 0);
    for (long row = 0; row < dst.count; ++row) {
        auto args = dst.tuple(row);
        for (int i = 0; i < n; ++i) face[i] = args[i + 1];
        long j = src.index(face);
        if (j >= 0) D.at(row, j) += 1;
        for (int i = 1; i <= n; ++i) {
            for (int k = 0; k < n; ++k) {
                if (k < i - 1) face[k] = args[k];
                else if (k == i - 1) face[k] = g.mul(args[i - 1], args[i]);
                else face[k] = args[k + 1];
            }
            j = src.index(face);
            if (j >= 0) D.at(row, j) += (i % 2 ? -1 : 1);
        }
        for (int i = 0; i < n; ++i) face[i] = args[i];
        j = src.index(face);
        if (j >= 0) D.at(row, j) += ((n + 1) % 2 ? -1 : 1);
    }
    return D;
}

IntMat bar_differential_matrix_full(const FiniteGroup& g, int degree) {
    int m = g.order();
    int n = degree;
    long rows = ipow(m, n + 1), cols = ipow(m, n);
    IntMat D(rows, cols);
    std::vector<int> args(n + 1, 0), face(n, 0);
    auto colof = [&](const std::vector<int>& f) {
        long idx = 0;
        for (int a : f) idx = idx * m + a;
        return idx;
    };
    for (long row = 0; row < rows; ++row) {
        long rest = row;
        for (int i = n; i >= 0; --i) {
            args[i] = static_cast<int>(rest % m);
            rest /= m;
        }
        for (int i = 0; i < n; ++i) face[i] = args[i + 1];
        D.at(row, colof(face)) += 1;
        for (int i = 1; i <= n; ++i) {
            for (int k = 0; k < n; ++k) {
                if (k < i - 1) face[k] = args[k];
                else if (k == i - 1) face[k] = g.mul(args[i - 1], args[i]);
                else face[k] = args[k + 1];
            }
            D.at(row, colof(face)) += (i % 2 ? -1 : 1);
        }
        for (int i = 0; i < n; ++i) face[i] = args[i];
        D.at(row, colof(face)) += ((n + 1) % 2 ? -1 : 1);
    }
    return D;
}

} // namespace bicross
