#ifndef LCMLAT_LATTICE_HPP
#define LCMLAT_LATTICE_HPP

#include <map>
#include <optional>
#include <vector>

#include "lcmlat/ideal.hpp"
#include "lcmlat/poset.hpp"

namespace lcmlat {

/// The lcm-lattice L(I): all least common multiples of subsets of G(I),
/// ordered by divisibility, with 1 = lcm of the empty set at the bottom.
/// Elements are canonically sorted, so element 0 is always the bottom.
class LcmLattice {
public:
    static constexpr std::size_t kDefaultGeneratorCap = 20;

    /// Builds by closing {1} and the atoms under pairwise join, which gives
    /// the same element set as enumerating all 2^k subsets.
    static LcmLattice build(const MonomialIdeal& I,
                            std::size_t generator_cap = kDefaultGeneratorCap);

    const std::vector<Monomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const Monomial& element(int e) const { return elements_.at(static_cast<std::size_t>(e)); }
    const Poset& poset() const { return poset_; }

    int bottom() const { return 0; }
    int top() const { return top_; }
    const std::vector<int>& atom_indices() const { return atoms_; }
    int degree(int e) const { return elements_.at(static_cast<std::size_t>(e)).degree(); }

    std::optional<int> index_of(const Monomial& m) const;
    /// Join = lcm; both arguments and the result are element indices.
    int join(int a, int b) const;

    /// Elements covering at least one atom.
    std::vector<int> super_atoms() const;

private:
    std::vector<Monomial> elements_;
    Poset poset_;
    std::vector<int> atoms_;
    int top_ = 0;
    std::map<std::vector<int>, int> index_;  // exponent vector -> element
};

/// Every cover a < b with a != bottom has deg(b) = deg(a) + 1. Covers out
/// of the bottom are exempt.
bool is_degree_graded(const LcmLattice& L);
/// Degree graded with all atoms of degree d.
bool is_d_degree_graded(const LcmLattice& L, int d);
/// The d for which the lattice is d-degree graded, if any.
std::optional<int> degree_graded_degree(const LcmLattice& L);

/// Degree-colored isomorphism between two lcm-lattices; the returned
/// bijection preserves total degree by construction.
std::optional<std::vector<int>> are_isomorphic(const LcmLattice& A, const LcmLattice& B,
                                               std::size_t size_cap = kDefaultIsoCap);

}  // namespace lcmlat

#endif
