#include "lcmlat/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lcmlat/errors.hpp"
#include "lcmlat/exact_linalg.hpp"

namespace lcmlat {

bool HomologyProfile::is_trivial() const {
    for (const auto& [deg, dim] : dims_) {
        if (dim != 0) return false;
    }
    return true;
}

bool HomologyProfile::vanishes_below(int top_degree) const {
    for (const auto& [deg, dim] : dims_) {
        if (deg < top_degree && dim != 0) return false;
    }
    return true;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& field) {
    if (complex.is_void()) {
        throw InputError("reduced_homology: the void complex has no chain complex");
    }
    const auto buckets = complex.faces_by_dimension();  // buckets[d] = faces of dim d-1
    const int dim = complex.dim();

    // Index faces within their dimension.
    std::vector<std::map<std::vector<int>, std::size_t>> index(buckets.size());
    for (std::size_t d = 0; d < buckets.size(); ++d) {
        for (std::size_t i = 0; i < buckets[d].size(); ++i) index[d].emplace(buckets[d][i], i);
    }

    // boundary[d]: C_{d-1} -> C_{d-2} (faces of bucket d to bucket d-1).
    std::vector<std::size_t> boundary_rank(buckets.size() + 1, 0);
    for (std::size_t d = 1; d < buckets.size(); ++d) {
        const auto& sources = buckets[d];
        const auto& targets = buckets[d - 1];
        if (sources.empty() || targets.empty()) continue;
        IntMatrix m(targets.size(), std::vector<std::int64_t>(sources.size(), 0));
        for (std::size_t col = 0; col < sources.size(); ++col) {
            const auto& face = sources[col];
            std::int64_t sign = 1;
            for (std::size_t omit = 0; omit < face.size(); ++omit) {
                std::vector<int> sub;
                sub.reserve(face.size() - 1);
                for (std::size_t t = 0; t < face.size(); ++t) {
                    if (t != omit) sub.push_back(face[t]);
                }
                m[index[d - 1].at(sub)][col] = sign;
                sign = -sign;
            }
        }
        boundary_rank[d] = matrix_rank(m, field);
    }

    std::map<int, std::size_t> h;
    for (int i = -1; i <= dim; ++i) {
        const std::size_t bucket = static_cast<std::size_t>(i + 1);
        const std::size_t faces = buckets[bucket].size();
        const std::size_t rank_out = boundary_rank[bucket];       // ∂_i
        const std::size_t rank_in = bucket + 1 < boundary_rank.size() ? boundary_rank[bucket + 1]
                                                                      : 0;  // ∂_{i+1}
        h[i] = faces - rank_out - rank_in;
    }

    // Alternating sums of face counts and homology dimensions must agree.
    long long chi_faces = complex.reduced_euler_characteristic();
    long long chi_hom = 0;
    for (const auto& [deg, d] : h) {
        chi_hom += (deg % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
    }
    if (chi_faces != chi_hom) {
        throw std::logic_error("homology: Euler characteristic mismatch");
    }
    return HomologyProfile(std::move(h));
}

SimplicialComplex order_complex(const Poset& P) {
    const std::size_t n = P.size();
    if (n == 0) return SimplicialComplex::empty_complex({});
    // Maximal chains run from a minimal to a maximal element along covers.
    std::vector<std::vector<int>> chains;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int v) -> void {
        stack.push_back(v);
        if (P.covers_above(v).empty()) {
            chains.push_back(stack);
        } else {
            for (int w : P.covers_above(v)) self(self, w);
        }
        stack.pop_back();
    };
    for (int m : P.minimal_elements()) dfs(dfs, m);
    return SimplicialComplex(P.labels(), std::move(chains));
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field) {
    if (complex.is_void()) throw InputError("is_cohen_macaulay: void complex");
    for (const auto& bucket : complex.faces_by_dimension()) {
        for (const auto& face : bucket) {
            SimplicialComplex lk = link(complex, face);
            HomologyProfile h = reduced_homology(lk, field);
            if (!h.vanishes_below(lk.dim())) return false;
        }
    }
    return true;
}

bool is_cm_poset(const Poset& P, const FieldSpec& field) {
    if (!P.is_bounded()) throw InputError("is_cm_poset: poset must be bounded");
    if (P.size() < 2) throw InputError("is_cm_poset: poset needs at least two elements");
    return is_cohen_macaulay(order_complex(proper_part(P)), field);
}

}  // namespace lcmlat
