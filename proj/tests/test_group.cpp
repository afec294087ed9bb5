#include "doctest.h"
#include <stdexcept>

#include "bicross/group.hpp"

#include <map>
#include <set>

using namespace bicross;

namespace {

// shared small corpus
FiniteGroup s3() { return group_from_permutations({{1, 0, 2}, {1, 2, 0}}); }   // (01), (012)
FiniteGroup d4() { return group_from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}); }  // r, s
FiniteGroup klein4() { return group_from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}); }

// independent closure count: naive fixed-point iteration over composition
int closure_size_oracle(std::vector<Perm> gens) {
    std::set<Perm> s(gens.begin(), gens.end());
    Perm idp(gens[0].size());
    for (size_t i = 0; i < idp.size(); ++i) idp[i] = static_cast<int>(i);
    s.insert(idp);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> cur(s.begin(), s.end());
        for (const auto& a : cur)
            for (const auto& b : cur)
                if (s.insert(perm_compose(a, b)).second) grew = true;
    }
    return static_cast<int>(s.size());
}

} // namespace

TEST_CASE("group from table: Z2") {
    auto g = FiniteGroup::from_table({{0, 1}, {1, 0}});
    CHECK(g.order() == 2);
    CHECK(g.id() == 0);
    CHECK(g.inv(1) == 1);
}

TEST_CASE("group from table: rejects bad tables") {
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}),
                         doctest::Contains("Latin"), std::invalid_argument);
    // rock-paper-scissors-ish: Latin square with identity but non-associative
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                                  {1, 0, 3, 4, 2},
                                                  {2, 4, 0, 1, 3},
                                                  {3, 2, 4, 0, 1},
                                                  {4, 3, 1, 2, 0}}),
                         doctest::Contains("associative"), std::invalid_argument);
    // subtraction mod 3: a Latin square with no two-sided identity
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}),
                         doctest::Contains("identity"), std::invalid_argument);
}

TEST_CASE("permutation closure") {
    CHECK(group_from_permutations({{1, 0}}).order() == 2);
    CHECK(group_from_permutations({{1, 2, 0}}).order() == 3);
    auto g = s3();
    CHECK(g.order() == 6);
    CHECK(!g.is_abelian());
    CHECK(g.order() == closure_size_oracle({{1, 0, 2}, {1, 2, 0}}));
    CHECK(d4().order() == 8);
    CHECK(d4().order() == closure_size_oracle({{1, 2, 3, 0}, {0, 3, 2, 1}}));
    CHECK_THROWS_AS(group_from_permutations({{1, 0}, {1, 2, 0}}), std::invalid_argument);
}

TEST_CASE("composition convention is right-to-left") {
    // f = (01), g = (012): (f*g)(i) = f(g(i)); g sends 0->1, f sends 1->0, so f*g fixes 0
    Perm f{1, 0, 2}, g{1, 2, 0};
    CHECK(perm_compose(f, g) == Perm{0, 2, 1});
    CHECK(perm_compose(g, f) == Perm{2, 1, 0});
}

TEST_CASE("subgroups of S3") {
    auto g = s3();
    auto subs = all_subgroups(g);
    CHECK(subs.size() == 6);  // 1, three Z2, A3, S3
    std::multiset<size_t> sizes;
    for (const auto& s : subs) sizes.insert(s.size());
    CHECK(sizes == std::multiset<size_t>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("exact factorizations") {
    auto g = s3();
    auto facts = exact_factorizations(g);
    // (1,S3), (S3,1), and Z2 x A3 both ways, for each of the three Z2s
    CHECK(facts.size() == 8);
    int z2_a3 = 0, trivial = 0;
    for (const auto& f : facts) {
        if (f.F.size() == 1 || f.G.size() == 1) ++trivial;
        if (f.F.size() == 2 && f.G.size() == 3) ++z2_a3;
    }
    CHECK(trivial == 2);
    CHECK(z2_a3 == 3);

    auto z3facts = exact_factorizations(cyclic_group(3));
    CHECK(z3facts.size() == 2);  // only trivial ones

    // (1, Sigma) is always present
    for (const auto& f : exact_factorizations(d4())) {
        (void)f;
    }
    auto d4facts = exact_factorizations(d4());
    bool has_trivial = false;
    for (const auto& f : d4facts)
        if (f.F.size() == 1 && f.G.size() == 8) has_trivial = true;
    CHECK(has_trivial);
}

TEST_CASE("factorization of elements") {
    auto g = s3();
    auto facts = exact_factorizations(g);
    for (const auto& f : facts) {
        // factor(1) = (1,1); factor(x) = (x,1) for x in F
        CHECK(f.pi(g.id()) == g.id());
        CHECK(f.p(g.id()) == g.id());
        for (int x : f.F) {
            CHECK(f.pi(x) == x);
            CHECK(f.p(x) == g.id());
        }
        // a = pi(a) p(a), unique, and a -> (pi,p) is a bijection
        std::set<std::pair<int, int>> seen;
        for (int a = 0; a < g.order(); ++a) {
            CHECK(g.mul(f.pi(a), f.p(a)) == a);
            CHECK(seen.insert({f.pi(a), f.p(a)}).second);
        }
    }
}

TEST_CASE("projection identities of the factorization") {
    // pi(ab) = pi(a)(p(a) |> pi(b)) and p(ab) = (p(a) <| pi(b)) p(b), all a,b in S3
    auto g = s3();
    for (const auto& f : exact_factorizations(g)) {
        auto mp = derive_matched_pair(f);
        std::map<int, int> fidx, gidx;
        for (size_t i = 0; i < f.F.size(); ++i) fidx[f.F[i]] = static_cast<int>(i);
        for (size_t i = 0; i < f.G.size(); ++i) gidx[f.G[i]] = static_cast<int>(i);
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) {
                int ab = g.mul(a, b);
                int lhs1 = f.pi(ab);
                int rhs1 = g.mul(f.pi(a), f.F[mp.lact_at(gidx.at(f.p(a)), fidx.at(f.pi(b)))]);
                CHECK(lhs1 == rhs1);
                int lhs2 = f.p(ab);
                int rhs2 = g.mul(f.G[mp.ract_at(gidx.at(f.p(a)), fidx.at(f.pi(b)))], f.p(b));
                CHECK(lhs2 == rhs2);
            }
    }
}

TEST_CASE("derived matched pairs verify and rebuild sigma") {
    for (auto g : {s3(), d4(), klein4(), cyclic_group(6)}) {
        for (const auto& f : exact_factorizations(g)) {
            auto mp = derive_matched_pair(f);
            auto rep = verify_matched_pair(mp);
            CHECK_MESSAGE(rep.pass(), rep.summary());
            CHECK(rebuilds_sigma(f, mp));
        }
    }
}

TEST_CASE("direct product gives trivial actions") {
    auto v4 = klein4();
    auto facts = exact_factorizations(v4);
    bool found = false;
    for (const auto& f : facts) {
        if (f.F.size() != 2 || f.G.size() != 2) continue;
        found = true;
        auto mp = derive_matched_pair(f);
        for (int g = 0; g < 2; ++g)
            for (int x = 0; x < 2; ++x) {
                CHECK(mp.lact_at(g, x) == x);
                CHECK(mp.ract_at(g, x) == g);
            }
    }
    CHECK(found);
}

TEST_CASE("S3 with F = Z2, G = A3: |> trivial, <| is conjugation") {
    auto g = s3();
    for (const auto& f : exact_factorizations(g)) {
        if (f.F.size() != 2 || f.G.size() != 3) continue;
        auto mp = derive_matched_pair(f);
        // G = A3 is normal, so |> is trivial
        for (int s = 0; s < 3; ++s)
            for (int x = 0; x < 2; ++x) CHECK(mp.lact_at(s, x) == x);
        // <| is induced by conjugation: g <| x = x^{-1} g x
        for (int s = 0; s < 3; ++s)
            for (int x = 0; x < 2; ++x) {
                int conj = g.mul(g.mul(g.inv(f.F[x]), f.G[s]), f.F[x]);
                CHECK(f.G[mp.ract_at(s, x)] == conj);
            }
        // s |> 1 = 1 and 1 <| x = 1
        for (int s = 0; s < 3; ++s) CHECK(mp.lact_at(s, 0) == 0);
        for (int x = 0; x < 2; ++x) CHECK(mp.ract_at(0, x) == 0);
    }
}

TEST_CASE("corrupting an action entry is detected with a witness") {
    auto g = s3();
    for (const auto& f : exact_factorizations(g)) {
        if (f.F.size() != 2 || f.G.size() != 3) continue;
        auto mp = derive_matched_pair(f);
        mp.ract[1 * 2 + 1] = (mp.ract_at(1, 1) + 1) % 3;  // corrupt g=1, x=1
        auto rep = verify_matched_pair(mp);
        CHECK(!rep.pass());
        CHECK(!rep.violations.empty());
        break;
    }
}

TEST_CASE("conjugacy class count oracle data") {
    CHECK(s3().conjugacy_class_count() == 3);
    CHECK(d4().conjugacy_class_count() == 5);
    CHECK(cyclic_group(6).conjugacy_class_count() == 6);
}
