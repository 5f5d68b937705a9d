#ifndef LCMLAT_COMPLEX_HPP
#define LCMLAT_COMPLEX_HPP

#include <string>
#include <vector>

namespace lcmlat {

/// Finite simplicial complex over labeled vertices, stored by its facet
/// antichain. Faces are sorted vertex-index lists.
///
/// Two degenerate complexes are distinguished: the void complex (no faces
/// at all, empty facet list) and the empty complex {∅} (single empty
/// facet). Vertices may appear in no facet (ghost vertices); they count for
/// the ambient vertex set but are not faces.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> vertex_labels,
                      std::vector<std::vector<int>> facets);

    static SimplicialComplex void_complex(std::vector<std::string> vertex_labels);
    /// {∅}, the complex whose only face is the empty face.
    static SimplicialComplex empty_complex(std::vector<std::string> vertex_labels);
    /// The full simplex on all vertices.
    static SimplicialComplex full_simplex(std::vector<std::string> vertex_labels);

    std::size_t vertex_count() const { return vertex_labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }

    /// Max face cardinality - 1; dim {∅} = -1. Throws on the void complex.
    int dim() const;
    bool is_pure() const;

    bool contains_face(const std::vector<int>& face) const;

    /// All faces grouped by dimension; index 0 holds dimension -1 (the
    /// empty face), index d+1 holds dimension d. Void complex -> empty.
    std::vector<std::vector<std::vector<int>>> faces_by_dimension() const;
    /// Total face count including the empty face; 0 for the void complex.
    std::size_t face_count() const;
    /// Sum over faces (including the empty face) of (-1)^dim.
    long long reduced_euler_characteristic() const;

    bool operator==(const SimplicialComplex& other) const {
        return vertex_labels_ == other.vertex_labels_ && facets_ == other.facets_;
    }

private:
    std::vector<std::string> vertex_labels_;
    std::vector<std::vector<int>> facets_;
};

/// link_Δ F = {T : T ∪ F ∈ Δ, T ∩ F = ∅}; throws when F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, const std::vector<int>& face);

/// Join over disjoint vertex label sets; facets are unions of facets.
SimplicialComplex join_complex(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace lcmlat

#endif
