#include "bicross/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bicross {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int x : xs) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    os << ")";
    return os.str();
}

} // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels) {
    FiniteGroup g;
    int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("group table: empty");
    g.n_ = n;
    g.table_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw std::invalid_argument("group table: not square at row " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n)
                throw std::invalid_argument("group table: entry out of range at " +
                                            tuple_str({i, j}));
            g.table_[static_cast<size_t>(i) * n + j] = v;
        }
    }
    // Latin square
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen_row[g.mul(i, j)])
                throw std::invalid_argument("group table: not a Latin square (row " +
                                            std::to_string(i) + " repeats element " +
                                            std::to_string(g.mul(i, j)) + ")");
            seen_row[g.mul(i, j)] = true;
            if (seen_col[g.mul(j, i)])
                throw std::invalid_argument("group table: not a Latin square (column " +
                                            std::to_string(i) + " repeats element " +
                                            std::to_string(g.mul(j, i)) + ")");
            seen_col[g.mul(j, i)] = true;
        }
    }
    // identity
    int e = -1;
    for (int i = 0; i < n && e < 0; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (g.mul(i, j) != j || g.mul(j, i) != j) { ok = false; break; }
        if (ok) e = i;
    }
    if (e < 0) throw std::invalid_argument("group table: no two-sided identity");
    g.identity_ = e;
    // associativity, all triples
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument("group table: non-associative triple " +
                                                tuple_str({a, b, c}));
    g.inverse_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == e) { g.inverse_[a] = b; break; }
    if (labels.empty()) {
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    } else if (static_cast<int>(labels.size()) != n) {
        throw std::invalid_argument("group table: wrong number of labels");
    }
    g.labels_ = std::move(labels);
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != identity_) { x = mul(x, a); ++k; }
    return k;
}

int FiniteGroup::conjugacy_class_count() const {
    std::vector<bool> seen(n_, false);
    int classes = 0;
    for (int a = 0; a < n_; ++a) {
        if (seen[a]) continue;
        ++classes;
        for (int s = 0; s < n_; ++s) seen[mul(mul(s, a), inv(s))] = true;
    }
    return classes;
}

std::vector<int> FiniteGroup::centralizer(int a) const {
    std::vector<int> c;
    for (int s = 0; s < n_; ++s)
        if (mul(s, a) == mul(a, s)) c.push_back(s);
    return c;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size()) throw std::invalid_argument("permutation degree mismatch");
    Perm r(f.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

namespace {

std::string cycle_label(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) { seen[i] = true; continue; }
        os << "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            os << j;
            first = false;
            j = static_cast<size_t>(p[j]);
        }
        os << ")";
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

} // namespace

FiniteGroup group_from_permutations(const std::vector<Perm>& gens) {
    if (gens.empty()) throw std::invalid_argument("group_from_permutations: no generators");
    size_t deg = gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != deg)
            throw std::invalid_argument("group_from_permutations: degree mismatch");
        std::vector<bool> seen(deg, false);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(deg) || seen[v])
                throw std::invalid_argument("group_from_permutations: not a permutation");
            seen[v] = true;
        }
    }
    Perm idp(deg);
    for (size_t i = 0; i < deg; ++i) idp[i] = static_cast<int>(i);

    // BFS from the identity; each layer sorted lexicographically before appending
    std::vector<Perm> elems = {idp};
    std::set<Perm> known = {idp};
    size_t layer_begin = 0;
    while (layer_begin < elems.size()) {
        size_t layer_end = elems.size();
        std::vector<Perm> fresh;
        for (size_t i = layer_begin; i < layer_end; ++i)
            for (const auto& gen : gens) {
                Perm q = perm_compose(elems[i], gen);
                if (known.insert(q).second) fresh.push_back(q);
            }
        std::sort(fresh.begin(), fresh.end());
        for (auto& q : fresh) elems.push_back(std::move(q));
        layer_begin = layer_end;
    }

    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = index.at(perm_compose(elems[i], elems[j]));
    std::vector<std::string> labels;
    for (const auto& p : elems) labels.push_back(cycle_label(p));
    return FiniteGroup::from_table(table, std::move(labels));
}

FiniteGroup cyclic_group(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back("g^" + std::to_string(i));
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return FiniteGroup::from_table(table, std::move(labels));
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(g.id());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g.mul(a, b)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, int cap) {
    if (g.order() > cap)
        throw std::invalid_argument("all_subgroups: order " + std::to_string(g.order()) +
                                    " exceeds cap " + std::to_string(cap));
    std::set<std::vector<int>> found;
    found.insert({g.id()});
    std::vector<std::vector<int>> work = {{g.id()}};
    while (!work.empty()) {
        std::vector<int> h = work.back();
        work.pop_back();
        std::set<int> members(h.begin(), h.end());
        for (int a = 0; a < g.order(); ++a) {
            if (members.count(a)) continue;
            std::vector<int> seed = h;
            seed.push_back(a);
            auto closed = subgroup_closure(g, std::move(seed));
            if (found.insert(closed).second) work.push_back(closed);
        }
    }
    return {found.begin(), found.end()};
}

namespace {

std::vector<int> identity_first(const FiniteGroup& sigma, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    auto it = std::find(elems.begin(), elems.end(), sigma.id());
    if (it == elems.end()) throw std::invalid_argument("subgroup misses the identity");
    elems.erase(it);
    elems.insert(elems.begin(), sigma.id());
    return elems;
}

} // namespace

FiniteGroup subgroup_group(const FiniteGroup& sigma, const std::vector<int>& elems) {
    std::map<int, int> idx;
    for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
    int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) {
        labels.push_back(sigma.label(elems[i]));
        for (int j = 0; j < m; ++j) {
            auto it = idx.find(sigma.mul(elems[i], elems[j]));
            if (it == idx.end()) throw std::invalid_argument("subset not closed under the table");
            table[i][j] = it->second;
        }
    }
    return FiniteGroup::from_table(table, std::move(labels));
}

FiniteGroup relabeled_group(const FiniteGroup& g, const std::vector<int>& perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabeled_group: permutation size mismatch");
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || inv[perm[i]] != -1)
            throw std::invalid_argument("relabeled_group: not a permutation");
        inv[perm[i]] = i;
    }
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = g.label(perm[i]);
        for (int j = 0; j < n; ++j) table[i][j] = inv[g.mul(perm[i], perm[j])];
    }
    return FiniteGroup::from_table(table, std::move(labels));
}

ExactFactorization make_factorization(const FiniteGroup& sigma, std::vector<int> F,
                                      std::vector<int> G) {
    ExactFactorization f;
    f.sigma = sigma;
    f.F = identity_first(sigma, std::move(F));
    f.G = identity_first(sigma, std::move(G));
    subgroup_group(sigma, f.F);  // validates closure
    subgroup_group(sigma, f.G);
    if (static_cast<long>(f.F.size()) * static_cast<long>(f.G.size()) != sigma.order())
        throw std::invalid_argument("not an exact factorization: |F||G| != |Sigma|");
    f.factor_table.assign(sigma.order(), {-1, -1});
    for (int x : f.F)
        for (int g : f.G) {
            int a = sigma.mul(x, g);
            if (f.factor_table[a].first != -1)
                throw std::invalid_argument("not an exact factorization: non-unique product");
            f.factor_table[a] = {x, g};
        }
    for (auto& [x, g] : f.factor_table)
        if (x == -1) throw std::invalid_argument("not an exact factorization: FG != Sigma");
    return f;
}

std::vector<ExactFactorization> exact_factorizations(const FiniteGroup& sigma, int cap) {
    auto subs = all_subgroups(sigma, cap);  // already lexicographically sorted (std::set)
    std::vector<ExactFactorization> out;
    for (const auto& F : subs)
        for (const auto& G : subs) {
            if (static_cast<long>(F.size()) * static_cast<long>(G.size()) != sigma.order())
                continue;
            // trivial intersection
            std::vector<int> inter;
            std::set_intersection(F.begin(), F.end(), G.begin(), G.end(),
                                  std::back_inserter(inter));
            if (inter.size() != 1) continue;
            out.push_back(make_factorization(sigma, F, G));
        }
    return out;
}

MatchedPair derive_matched_pair(const ExactFactorization& fact) {
    MatchedPair mp;
    mp.F = subgroup_group(fact.sigma, fact.F);
    mp.G = subgroup_group(fact.sigma, fact.G);
    int nf = mp.F.order(), ng = mp.G.order();
    std::map<int, int> fidx, gidx;
    for (int i = 0; i < nf; ++i) fidx[fact.F[i]] = i;
    for (int i = 0; i < ng; ++i) gidx[fact.G[i]] = i;
    mp.ract.assign(static_cast<size_t>(ng) * nf, 0);
    mp.lact.assign(static_cast<size_t>(ng) * nf, 0);
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x) {
            int a = fact.sigma.mul(fact.G[g], fact.F[x]);  // g x = (g |> x)(g <| x)
            mp.lact[static_cast<size_t>(g) * nf + x] = fidx.at(fact.pi(a));
            mp.ract[static_cast<size_t>(g) * nf + x] = gidx.at(fact.p(a));
        }
    return mp;
}

Report verify_matched_pair(const MatchedPair& mp) {
    Report rep;
    rep.subject = "matched pair";
    const FiniteGroup& F = mp.F;
    const FiniteGroup& G = mp.G;
    int nf = F.order(), ng = G.order();

    // ract is a right action of F on the set G, lact a left action of G on F
    for (int g = 0; g < ng; ++g) {
        ++rep.checks;
        if (mp.ract_at(g, F.id()) != g) rep.add("g <| 1 = g", {g});
    }
    for (int x = 0; x < nf; ++x) {
        ++rep.checks;
        if (mp.lact_at(G.id(), x) != x) rep.add("1 |> x = x", {x});
    }
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x)
            for (int y = 0; y < nf; ++y) {
                ++rep.checks;
                if (mp.ract_at(mp.ract_at(g, x), y) != mp.ract_at(g, F.mul(x, y)))
                    rep.add("(g <| x) <| y = g <| xy", {g, x, y});
            }
    for (int s = 0; s < ng; ++s)
        for (int t = 0; t < ng; ++t)
            for (int x = 0; x < nf; ++x) {
                ++rep.checks;
                if (mp.lact_at(G.mul(s, t), x) != mp.lact_at(s, mp.lact_at(t, x)))
                    rep.add("(st) |> x = s |> (t |> x)", {s, t, x});
            }

    // compatibility: s |> xy = (s |> x)((s <| x) |> y)
    for (int s = 0; s < ng; ++s)
        for (int x = 0; x < nf; ++x)
            for (int y = 0; y < nf; ++y) {
                ++rep.checks;
                int lhs = mp.lact_at(s, F.mul(x, y));
                int rhs = F.mul(mp.lact_at(s, x), mp.lact_at(mp.ract_at(s, x), y));
                if (lhs != rhs) rep.add("s |> xy = (s |> x)((s <| x) |> y)", {s, x, y});
            }
    // compatibility: st <| x = (s <| (t |> x))(t <| x)
    for (int s = 0; s < ng; ++s)
        for (int t = 0; t < ng; ++t)
            for (int x = 0; x < nf; ++x) {
                ++rep.checks;
                int lhs = mp.ract_at(G.mul(s, t), x);
                int rhs = G.mul(mp.ract_at(s, mp.lact_at(t, x)), mp.ract_at(t, x));
                if (lhs != rhs) rep.add("st <| x = (s <| (t |> x))(t <| x)", {s, t, x});
            }
    // unit normalizations
    for (int s = 0; s < ng; ++s) {
        ++rep.checks;
        if (mp.lact_at(s, F.id()) != F.id()) rep.add("s |> 1 = 1", {s});
    }
    for (int x = 0; x < nf; ++x) {
        ++rep.checks;
        if (mp.ract_at(G.id(), x) != G.id()) rep.add("1 <| x = 1", {x});
    }
    // bijectivity of s |> (-) and (-) <| x
    for (int s = 0; s < ng; ++s) {
        std::vector<bool> hit(nf, false);
        for (int x = 0; x < nf; ++x) hit[mp.lact_at(s, x)] = true;
        ++rep.checks;
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            rep.add("s |> (-) is a bijection", {s});
    }
    for (int x = 0; x < nf; ++x) {
        std::vector<bool> hit(ng, false);
        for (int g = 0; g < ng; ++g) hit[mp.ract_at(g, x)] = true;
        ++rep.checks;
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            rep.add("(-) <| x is a bijection", {x});
    }
    return rep;
}

FiniteGroup matched_pair_product_group(const MatchedPair& mp) {
    int nf = mp.F.order(), ng = mp.G.order();
    int n = nf * ng;
    auto enc = [&](int x, int g) { return x * ng + g; };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int x = 0; x < nf; ++x)
        for (int g = 0; g < ng; ++g) {
            labels[enc(x, g)] = mp.F.label(x) + "." + mp.G.label(g);
            for (int y = 0; y < nf; ++y)
                for (int h = 0; h < ng; ++h) {
                    int xp = mp.F.mul(x, mp.lact_at(g, y));
                    int gp = mp.G.mul(mp.ract_at(g, y), h);
                    table[enc(x, g)][enc(y, h)] = enc(xp, gp);
                }
        }
    return FiniteGroup::from_table(table, std::move(labels));
}

bool rebuilds_sigma(const ExactFactorization& fact, const MatchedPair& mp) {
    FiniteGroup prod = matched_pair_product_group(mp);
    int nf = mp.F.order(), ng = mp.G.order();
    std::map<int, int> fidx, gidx;
    for (int i = 0; i < nf; ++i) fidx[fact.F[i]] = i;
    for (int i = 0; i < ng; ++i) gidx[fact.G[i]] = i;
    auto phi = [&](int a) { return fidx.at(fact.pi(a)) * ng + gidx.at(fact.p(a)); };
    int n = fact.sigma.order();
    std::vector<bool> hit(n, false);
    for (int a = 0; a < n; ++a) {
        if (hit[phi(a)]) return false;  // not a bijection
        hit[phi(a)] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (phi(fact.sigma.mul(a, b)) != prod.mul(phi(a), phi(b))) return false;
    return true;
}

} // namespace bicross
