#include "lcmlat/shelling.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "lcmlat/errors.hpp"

namespace lcmlat {

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// The intersection of 2^{F_c} with the union of the 2^{F_g}, g in S, is
// generated by the pairwise intersections; it is pure of codimension one in
// F_c iff every such intersection extends to one of size |F_c| - 1.
bool step_condition(const std::vector<std::vector<int>>& facets, std::uint64_t S, int c) {
    if (S == 0) return true;
    const auto& F = facets[static_cast<std::size_t>(c)];
    std::vector<std::vector<int>> inters;
    for (int g = 0; g < static_cast<int>(facets.size()); ++g) {
        if (!(S >> g & 1)) continue;
        inters.push_back(intersect(F, facets[static_cast<std::size_t>(g)]));
    }
    for (const auto& x : inters) {
        if (x.size() + 1 == F.size()) continue;
        bool extended = false;
        for (const auto& y : inters) {
            if (y.size() + 1 == F.size() &&
                std::includes(y.begin(), y.end(), x.begin(), x.end())) {
                extended = true;
                break;
            }
        }
        if (!extended) return false;
    }
    return true;
}

class ShellingSearch {
public:
    ShellingSearch(const std::vector<std::vector<int>>& facets, SearchBudget budget)
        : facets_(facets), budget_(budget) {
        full_ = (facets.size() == 64) ? ~std::uint64_t{0}
                                      : ((std::uint64_t{1} << facets.size()) - 1);
    }

    SearchResult<ShellingCertificate> run() {
        std::vector<int> order;
        order.reserve(facets_.size());
        bool ok = backtrack(0, order);
        if (exhausted_) return SearchResult<ShellingCertificate>::make_exhausted();
        if (!ok) return SearchResult<ShellingCertificate>::make_not_found();
        return SearchResult<ShellingCertificate>::make_found(ShellingCertificate{order});
    }

private:
    bool backtrack(std::uint64_t S, std::vector<int>& order) {
        if (S == full_) return true;
        if (failed_.count(S)) return false;
        for (int c = 0; c < static_cast<int>(facets_.size()); ++c) {
            if (S >> c & 1) continue;
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            if (!step_condition(facets_, S, c)) continue;
            order.push_back(c);
            if (backtrack(S | (std::uint64_t{1} << c), order)) return true;
            order.pop_back();
            if (exhausted_) return false;
        }
        failed_.insert(S);
        return false;
    }

    const std::vector<std::vector<int>>& facets_;
    std::uint64_t full_;
    std::unordered_set<std::uint64_t> failed_;
    SearchBudget budget_;
    bool exhausted_ = false;
};

}  // namespace

SearchResult<ShellingCertificate> is_shellable(const SimplicialComplex& complex,
                                               SearchBudget budget) {
    if (complex.is_void()) throw InputError("is_shellable: void complex");
    if (!complex.is_pure()) throw InputError("is_shellable: complex is not pure");
    if (complex.facets().size() > 64) {
        throw SizeLimitError("shellability search supports at most 64 facets");
    }
    if (complex.facets().size() == 1) {
        return SearchResult<ShellingCertificate>::make_found(ShellingCertificate{{0}});
    }
    return ShellingSearch(complex.facets(), budget).run();
}

bool verify_shelling_certificate(const SimplicialComplex& complex,
                                 const ShellingCertificate& cert) {
    if (complex.is_void() || !complex.is_pure()) return false;
    const auto& facets = complex.facets();
    if (cert.facet_order.size() != facets.size()) return false;
    std::vector<bool> seen(facets.size(), false);
    for (int f : cert.facet_order) {
        if (f < 0 || f >= static_cast<int>(facets.size()) || seen[static_cast<std::size_t>(f)]) {
            return false;
        }
        seen[static_cast<std::size_t>(f)] = true;
    }
    // Replay: collect the faces of each prefix and check each new facet
    // meets them in a pure complex of codimension one.
    std::set<std::vector<int>> prefix_faces;
    for (std::size_t step = 0; step < cert.facet_order.size(); ++step) {
        const auto& F = facets[static_cast<std::size_t>(cert.facet_order[step])];
        if (step > 0) {
            std::vector<std::vector<int>> shared;
            const std::size_t k = F.size();
            for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
                std::vector<int> face;
                for (std::size_t b = 0; b < k; ++b) {
                    if (mask >> b & 1) face.push_back(F[b]);
                }
                if (prefix_faces.count(face)) shared.push_back(std::move(face));
            }
            // Maximal shared faces must all have cardinality |F| - 1.
            for (const auto& x : shared) {
                bool maximal = true;
                for (const auto& y : shared) {
                    if (y.size() > x.size() &&
                        std::includes(y.begin(), y.end(), x.begin(), x.end())) {
                        maximal = false;
                        break;
                    }
                }
                if (maximal && x.size() + 1 != F.size()) return false;
            }
        }
        const std::size_t k = F.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<int> face;
            for (std::size_t b = 0; b < k; ++b) {
                if (mask >> b & 1) face.push_back(F[b]);
            }
            prefix_faces.insert(std::move(face));
        }
    }
    return true;
}

}  // namespace lcmlat
