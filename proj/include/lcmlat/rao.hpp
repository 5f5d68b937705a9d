#ifndef LCMLAT_RAO_HPP
#define LCMLAT_RAO_HPP

#include <array>
#include <vector>

#include "lcmlat/lattice.hpp"
#include "lcmlat/poset.hpp"
#include "lcmlat/search.hpp"

namespace lcmlat {

/// Witness for the common-upper-bound condition on the ordered atom pair at
/// positions (i, j): the earlier position k and, for each minimal common
/// upper bound y of the two atoms, an element z covering both atom k and
/// atom j with z <= y.
struct RaoPairWitness {
    int i = 0;
    int j = 0;
    int k = 0;
    std::vector<std::array<int, 2>> cover_steps;  // (y, z) pairs
};

/// Certificate tree for a recursive atom ordering. Each node describes the
/// upper interval [bottom, 1̂]: its atom ordering, the pair witnesses, and
/// one child per atom for the recursion. Intervals whose proper part is
/// empty carry no ordering and no children.
struct RaoNode {
    int bottom = 0;
    std::vector<int> atom_order;              // poset element ids
    std::vector<RaoPairWitness> witnesses;    // all pairs i < j
    std::vector<RaoNode> children;            // children[j] certifies [atom_order[j], 1̂]
};

struct RaoCertificate {
    RaoNode root;
};

/// Searches for a recursive atom ordering of a graded poset. Interval
/// results are memoized on (interval bottom, set of atoms required first);
/// within one interval, prefix sets that cannot be completed are memoized
/// as well, so NotFound is exhaustive in at most 2^t prefix states.
/// Throws InputError on non-graded input.
SearchResult<RaoCertificate> has_recursive_atom_ordering(const Poset& P,
                                                         SearchBudget budget = SearchBudget());

/// Same search with the root atom ordering fixed in advance.
SearchResult<RaoCertificate> has_recursive_atom_ordering_with_root(
    const Poset& P, const std::vector<int>& root_order, SearchBudget budget = SearchBudget());

/// Literal replay of both conditions of the definition, sharing no state
/// with the search: condition (ii) is re-checked against every common upper
/// bound, and the required-first prefix of every child is recomputed.
bool verify_rao_certificate(const Poset& P, const RaoCertificate& cert);

/// CL-shellability of an lcm-lattice, decided through recursive atom
/// orderings. A non-graded lattice is immediately NotFound.
SearchResult<RaoCertificate> is_cl_shellable(const LcmLattice& L,
                                             SearchBudget budget = SearchBudget());

/// For a d-degree-graded lattice, searches for an atom ordering satisfying
/// only the common-upper-bound condition; such an ordering extends to a
/// full recursive atom ordering. Throws unless the lattice is d-degree
/// graded.
SearchResult<std::vector<int>> rao_fast_path(const LcmLattice& L, int d,
                                             SearchBudget budget = SearchBudget());

}  // namespace lcmlat

#endif
