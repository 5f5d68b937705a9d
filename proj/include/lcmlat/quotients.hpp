#ifndef LCMLAT_QUOTIENTS_HPP
#define LCMLAT_QUOTIENTS_HPP

#include <vector>

#include "lcmlat/ideal.hpp"
#include "lcmlat/search.hpp"

namespace lcmlat {

/// Witness that the colon of the prefix ideal by the generator placed at
/// some position is generated by variables: for the earlier generator
/// `earlier`, the generator `via` has colon quotient equal to the single
/// variable `variable`, which divides the colon quotient of `earlier`.
struct QuotientWitness {
    int earlier;          // generator index within G(I)
    int via;              // generator index within G(I)
    std::size_t variable; // variable index within the context
};

/// A linear-quotients ordering of G(I) plus per-step witnesses.
/// `ordering` holds generator indices (into the canonical generator list);
/// `witnesses[s]` covers the generator at position s against every earlier
/// position (empty for s = 0).
struct QuotientCertificate {
    std::vector<int> ordering;
    std::vector<std::vector<QuotientWitness>> witnesses;
};

/// Searches for a linear-quotients ordering of G(I). Greedy first, then
/// exhaustive backtracking over prefix sets (the colon condition for a
/// candidate depends only on the set of earlier generators, so failed
/// prefix sets are memoized). NotFound is exhaustive; Exhausted means the
/// node budget ran out.
SearchResult<QuotientCertificate> find_linear_quotients_order(
    const MonomialIdeal& I, SearchBudget budget = SearchBudget());

/// Replays a certificate against the ideal with direct monomial arithmetic;
/// shares no logic with the search.
bool verify_quotient_certificate(const MonomialIdeal& I, const QuotientCertificate& cert);

}  // namespace lcmlat

#endif
