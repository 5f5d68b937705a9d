#include "lcmlat/complex.hpp"

#include <algorithm>
#include <set>

#include "lcmlat/errors.hpp"

namespace lcmlat {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    // Both sorted.
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct FaceLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels,
                                     std::vector<std::vector<int>> facets)
    : vertex_labels_(std::move(vertex_labels)) {
    {
        std::set<std::string> names(vertex_labels_.begin(), vertex_labels_.end());
        if (names.size() != vertex_labels_.size()) {
            throw InputError("simplicial complex: duplicate vertex labels");
        }
    }
    const int n = static_cast<int>(vertex_labels_.size());
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f) {
            if (v < 0 || v >= n) throw InputError("simplicial complex: vertex index out of range");
        }
    }
    std::sort(facets.begin(), facets.end(), FaceLess{});
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Keep only inclusion-maximal faces. Sorted by size, so any container of
    // f appears after it.
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < facets.size() && !dominated; ++j) {
            if (facets[j].size() > facets[i].size() && subset(facets[i], facets[j])) {
                dominated = true;
            }
        }
        if (!dominated) facets_.push_back(std::move(facets[i]));
    }
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> vertex_labels) {
    return SimplicialComplex(std::move(vertex_labels), {});
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<std::string> vertex_labels) {
    return SimplicialComplex(std::move(vertex_labels), {{}});
}

SimplicialComplex SimplicialComplex::full_simplex(std::vector<std::string> vertex_labels) {
    std::vector<int> all(vertex_labels.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return SimplicialComplex(std::move(vertex_labels), {all});
}

int SimplicialComplex::dim() const {
    if (is_void()) throw InputError("the void complex has no dimension");
    std::size_t mx = 0;
    for (const auto& f : facets_) mx = std::max(mx, f.size());
    return static_cast<int>(mx) - 1;
}

bool SimplicialComplex::is_pure() const {
    if (is_void()) throw InputError("the void complex has no dimension");
    for (const auto& f : facets_) {
        if (f.size() != facets_.front().size()) return false;
    }
    return true;
}

bool SimplicialComplex::contains_face(const std::vector<int>& face) const {
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const std::vector<int>& g) { return subset(f, g); });
}

std::vector<std::vector<std::vector<int>>> SimplicialComplex::faces_by_dimension() const {
    std::vector<std::vector<std::vector<int>>> out;
    if (is_void()) return out;
    std::set<std::vector<int>, FaceLess> all;
    for (const auto& facet : facets_) {
        const std::size_t k = facet.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<int> face;
            for (std::size_t b = 0; b < k; ++b) {
                if (mask >> b & 1) face.push_back(facet[b]);
            }
            all.insert(std::move(face));
        }
    }
    out.resize(static_cast<std::size_t>(dim()) + 2);
    for (const auto& face : all) {
        out[face.size()].push_back(face);
    }
    return out;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& bucket : faces_by_dimension()) total += bucket.size();
    return total;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
    if (is_void()) return 0;
    long long chi = 0;
    auto buckets = faces_by_dimension();
    for (std::size_t d = 0; d < buckets.size(); ++d) {
        long long count = static_cast<long long>(buckets[d].size());
        // bucket d holds faces of dimension d - 1
        chi += (d % 2 == 0) ? -count : count;
    }
    return chi;
}

SimplicialComplex link(const SimplicialComplex& complex, const std::vector<int>& face) {
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!complex.contains_face(f)) throw InputError("link: not a face of the complex");
    std::vector<std::vector<int>> facets;
    for (const auto& g : complex.facets()) {
        if (!subset(f, g)) continue;
        std::vector<int> rest;
        std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
        facets.push_back(std::move(rest));
    }
    return SimplicialComplex(complex.vertex_labels(), std::move(facets));
}

SimplicialComplex join_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const auto& la : a.vertex_labels()) {
        for (const auto& lb : b.vertex_labels()) {
            if (la == lb) throw InputError("join: vertex sets overlap on '" + la + "'");
        }
    }
    std::vector<std::string> labels = a.vertex_labels();
    labels.insert(labels.end(), b.vertex_labels().begin(), b.vertex_labels().end());
    const int offset = static_cast<int>(a.vertex_count());
    std::vector<std::vector<int>> facets;
    for (const auto& fa : a.facets()) {
        for (const auto& fb : b.facets()) {
            std::vector<int> f = fa;
            for (int v : fb) f.push_back(v + offset);
            facets.push_back(std::move(f));
        }
    }
    return SimplicialComplex(std::move(labels), std::move(facets));
}

}  // namespace lcmlat
