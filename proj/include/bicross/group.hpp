#pragma once

#include "bicross/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bicross {

/// A finite group given by its Cayley table. Construction validates the
/// axioms; a FiniteGroup value is always a genuine group.
class FiniteGroup {
public:
    FiniteGroup() : n_(1), identity_(0), table_{0}, inverse_{0}, labels_{"e"} {}

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int id() const { return identity_; }
    int inv(int a) const { return inverse_[a]; }
    bool is_abelian() const;
    int element_order(int a) const;

    const std::vector<int>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const { return labels_[a]; }

    /// Validated construction from a Cayley table. Throws std::invalid_argument
    /// naming the failed axiom with a witness (non-Latin row/column,
    /// non-associative triple, missing identity).
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels = {});

    /// Conjugacy class count (used as an independent center-dimension oracle in tests).
    int conjugacy_class_count() const;

    /// Subgroup containing a, as a sorted element list.
    std::vector<int> centralizer(int a) const;

private:
    int n_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

/// A permutation as the array of images, 0-indexed.
using Perm = std::vector<int>;

/// Composition convention: (f*g)(i) = f(g(i)), applied right to left.
Perm perm_compose(const Perm& f, const Perm& g);

/// Cayley table of the group generated by `gens`, elements ordered by BFS
/// discovery from the identity with lexicographic tie-break inside each layer.
/// Labels are cycle notations. Throws on degree mismatch or non-permutations.
FiniteGroup group_from_permutations(const std::vector<Perm>& gens);

/// Handy constructions for tests and the CLI corpus.
FiniteGroup cyclic_group(int n);

/// All subgroups as sorted element lists (identity-first ordering is applied
/// when a subgroup is promoted to a FiniteGroup). Brute force by closure of
/// incrementally extended subsets; throws if order() > cap.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, int cap = 64);

/// Closure of a subset under the group operation.
std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> seed);

/// Promote a closed element list to a standalone group; element 0 is the identity,
/// then the remaining elements ascending. Throws if the subset is not closed.
FiniteGroup subgroup_group(const FiniteGroup& g, const std::vector<int>& elements);

/// The same group with elements renamed by a bijection: new index i is old perm[i].
FiniteGroup relabeled_group(const FiniteGroup& g, const std::vector<int>& perm);

/// An exact factorization Sigma = F G: subgroups with trivial intersection and
/// |F| |G| = |Sigma|, so every element factors uniquely as a = pi(a) p(a).
struct ExactFactorization {
    FiniteGroup sigma;
    std::vector<int> F;  // element lists in sigma, identity first then ascending
    std::vector<int> G;
    std::vector<std::pair<int, int>> factor_table;  // a -> (pi(a), p(a)), sigma indices

    int pi(int a) const { return factor_table[a].first; }
    int p(int a) const { return factor_table[a].second; }
};

/// All exact factorizations (ordered pairs of subgroups), deterministically
/// ordered lexicographically by (F element list, G element list).
std::vector<ExactFactorization> exact_factorizations(const FiniteGroup& sigma, int cap = 64);

/// Build the factorization data for a specific subgroup pair; throws if the
/// pair is not an exact factorization.
ExactFactorization make_factorization(const FiniteGroup& sigma, std::vector<int> F,
                                      std::vector<int> G);

/// A matched pair of groups: F, G with a right action ract of F on G and a
/// left action lact of G on F, compatible in the sense verified by
/// verify_matched_pair. Tables are indexed by local element indices.
struct MatchedPair {
    FiniteGroup F;
    FiniteGroup G;
    std::vector<int> ract;  // |G| x |F| -> G index: g <| x
    std::vector<int> lact;  // |G| x |F| -> F index: g |> x

    int ract_at(int g, int x) const { return ract[static_cast<size_t>(g) * F.order() + x]; }
    int lact_at(int g, int x) const { return lact[static_cast<size_t>(g) * F.order() + x]; }
};

/// Actions from the unique factorization g x = (g |> x)(g <| x).
MatchedPair derive_matched_pair(const ExactFactorization& fact);

/// Exhaustive check of the action laws, the two compatibility equations and
/// the unit normalizations; every violated instance is reported with its witness.
Report verify_matched_pair(const MatchedPair& mp);

/// The group on F x G with product (x,g)(y,h) = (x (g|>y), (g<|y) h).
FiniteGroup matched_pair_product_group(const MatchedPair& mp);

/// True when a |-> (pi(a), p(a)) carries sigma's table onto the matched-pair
/// product group's table (the reconstruction invariant).
bool rebuilds_sigma(const ExactFactorization& fact, const MatchedPair& mp);

} // namespace bicross
