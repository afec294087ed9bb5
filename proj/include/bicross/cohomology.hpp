#pragma once

#include "bicross/cochain.hpp"

#include <optional>

namespace bicross {

/// H^n as a product of cyclic groups, with chosen cocycle representatives.
///
/// Classes are classes of mu_N-valued cocycles modulo coboundaries of
/// k^x-valued cochains (realized as cochains with values in mu_{N*|G|}).
/// This matches cocycles valued in the torsion of an algebraically closed
/// field, restricted to mu_N representatives; with the plain mod-N coboundary
/// group the answer can be strictly larger.
struct CohomologyResult {
    std::vector<long> invariant_factors;  // each > 1 and dividing N, divisibility ascending
    std::vector<Cochain> generators;      // one normalized cocycle per factor
};

/// ker(d_n)/im(d_{n-1}) over the normalized bar complex, by Smith normal form
/// over Z. Throws when the boundary matrices exceed `cap` entries.
CohomologyResult cohomology(const FiniteGroup& g, int degree, int N, long cap = 2000000);

/// Solve d(c) = w|_S over Z/N on the subgroup S (full coordinates).
/// Returns a witness cochain of degree deg(w)-1 on S, or nullopt when the
/// restriction is not a coboundary; the zero restriction yields the zero
/// certificate. Requires dw = 0.
std::optional<Cochain> trivialize_restriction(const Cochain& w,
                                              const std::vector<int>& subgroup_elements);

/// A 2-cocycle class gamma on S is non-degenerate when the twisted group
/// algebra k_gamma S is simple, i.e. its center has dimension 1.
bool is_nondegenerate_class(const Cochain& gamma);

} // namespace bicross
