#ifndef LCMLAT_SHELLING_HPP
#define LCMLAT_SHELLING_HPP

#include <vector>

#include "lcmlat/complex.hpp"
#include "lcmlat/search.hpp"

namespace lcmlat {

/// A shelling order, as indices into the canonical facet list.
struct ShellingCertificate {
    std::vector<int> facet_order;
};

/// Backtracking search for a shelling of a pure complex. Whether a facet
/// can extend a partial shelling depends only on the set of facets already
/// placed, so failed prefix sets are memoized; NotFound is exhaustive.
/// Throws on non-pure or void input.
SearchResult<ShellingCertificate> is_shellable(const SimplicialComplex& complex,
                                               SearchBudget budget = SearchBudget());

/// Replays a shelling order by direct face computations.
bool verify_shelling_certificate(const SimplicialComplex& complex,
                                 const ShellingCertificate& cert);

}  // namespace lcmlat

#endif
