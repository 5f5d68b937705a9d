#ifndef LCMLAT_HOMOLOGY_HPP
#define LCMLAT_HOMOLOGY_HPP

#include <map>

#include "lcmlat/complex.hpp"
#include "lcmlat/field.hpp"
#include "lcmlat/poset.hpp"

namespace lcmlat {

/// Dimensions of reduced homology, degree -1 through dim. Degrees outside
/// the stored range are zero.
class HomologyProfile {
public:
    HomologyProfile() = default;
    explicit HomologyProfile(std::map<int, std::size_t> dims) : dims_(std::move(dims)) {}

    std::size_t at(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }
    const std::map<int, std::size_t>& dims() const { return dims_; }
    bool is_trivial() const;
    /// All homology vanishes strictly below the given degree.
    bool vanishes_below(int top_degree) const;

    bool operator==(const HomologyProfile& other) const { return dims_ == other.dims_; }

private:
    std::map<int, std::size_t> dims_;
};

/// Reduced simplicial homology over the chosen field, from boundary-matrix
/// ranks by exact elimination. H̃_{-1}({∅}) = 1. Throws on the void
/// complex. Every call cross-checks the alternating sum of the computed
/// dimensions against the reduced Euler characteristic.
HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& field);

/// Order complex O(P): vertices the elements of P, faces the chains.
/// The empty poset maps to {∅}.
SimplicialComplex order_complex(const Poset& P);

/// Reisner-style check: every link (including the link of ∅) has vanishing
/// homology below its own dimension.
bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field);

/// Cohen-Macaulayness of the order complex of the proper part of a bounded
/// poset (both endpoints stripped). A two-element poset is vacuously CM.
bool is_cm_poset(const Poset& P, const FieldSpec& field);

}  // namespace lcmlat

#endif
