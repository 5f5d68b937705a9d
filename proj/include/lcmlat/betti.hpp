#ifndef LCMLAT_BETTI_HPP
#define LCMLAT_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcmlat/field.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/lattice.hpp"

namespace lcmlat {

/// Multigraded Betti numbers β_{i,m} of an ideal over a fixed field, with
/// homological index 0 counting the minimal generators. Only nonzero
/// entries are stored.
class BettiTable {
public:
    explicit BettiTable(FieldSpec field) : field_(std::move(field)) {}

    const FieldSpec& field() const { return field_; }

    void set(int i, const Monomial& m, std::size_t value);
    std::size_t at(int i, const Monomial& m) const;
    const std::map<std::pair<int, std::vector<int>>, std::size_t>& entries() const {
        return entries_;
    }

    /// Graded view β_{i,j} = Σ_{deg m = j} β_{i,m}.
    std::map<std::pair<int, int>, std::size_t> graded() const;
    int max_homological_index() const;

    /// Multidegrees m with β_{i,m} != 0, canonically sorted.
    std::vector<Monomial> degrees_at(int i, const ContextPtr& context) const;

    bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

    /// Macaulay-style grid: rows are i, columns j, entry β_{i,j}.
    std::string to_grid_string() const;

private:
    FieldSpec field_;
    std::map<std::pair<int, std::vector<int>>, std::size_t> entries_;
    std::map<std::vector<int>, int> degree_of_;  // exponent vector -> total degree
};

/// Betti numbers through the lcm-lattice: β_{i,m} is the dimension of the
/// reduced homology of the order complex of the open interval (1, m), in
/// degree i - 1.
BettiTable gpw_betti(const MonomialIdeal& I, const FieldSpec& field,
                     std::size_t generator_cap = LcmLattice::kDefaultGeneratorCap);

/// Independent oracle through upper Koszul complexes: for each divisor m of
/// the top lcm, K^m(I) = {squarefree F : m / x^F ∈ I} and β_{i,m} is the
/// reduced homology of K^m(I) in degree i - 1. Shares no lattice or
/// interval code with gpw_betti.
BettiTable koszul_betti_oracle(const MonomialIdeal& I, const FieldSpec& field);

/// The degree d such that every nonzero β_{i,m} has deg(m) = i + d, if the
/// ideal is equigenerated in degree d; otherwise nothing.
std::optional<int> has_d_linear_resolution(const MonomialIdeal& I, const FieldSpec& field);

/// Multidegrees with β_{1,m} != 0.
std::vector<Monomial> first_betti_degrees(const MonomialIdeal& I, const FieldSpec& field);

/// The ideal generated by the first Betti degrees; throws when there are
/// none (the zero ideal).
MonomialIdeal build_I1(const MonomialIdeal& I, const FieldSpec& field);

}  // namespace lcmlat

#endif
