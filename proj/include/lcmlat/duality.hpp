#ifndef LCMLAT_DUALITY_HPP
#define LCMLAT_DUALITY_HPP

#include "lcmlat/complex.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/poset.hpp"

namespace lcmlat {

/// Minimal non-faces of the complex, as sorted vertex-index lists.
std::vector<std::vector<int>> minimal_non_faces(const SimplicialComplex& complex);

/// Stanley-Reisner ideal: squarefree generators x^F over the minimal
/// non-faces. The vertex labels become the variable context. Errors on the
/// full simplex (no non-faces, the zero ideal).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Δ(I) = {F : x^F ∉ I} for a squarefree proper ideal; inverse of
/// stanley_reisner_ideal.
SimplicialComplex complex_of_ideal(const MonomialIdeal& I);

/// Alexander dual: facets are complements of the minimal non-faces.
/// Errors on the void complex and on the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// Lattice of intersections of nonempty facet subsets, ordered by reverse
/// inclusion, with the full vertex set adjoined as bottom.
Poset intersection_lattice(const SimplicialComplex& complex);

/// Checks L(I) ≅ L_{Δ∨} via the support-complement map on atoms, extended
/// to all lattice elements.
bool verify_lattice_correspondence(const MonomialIdeal& I);

}  // namespace lcmlat

#endif
