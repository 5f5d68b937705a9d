#include "lcmlat/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lcmlat/errors.hpp"
#include "lcmlat/lattice.hpp"

namespace lcmlat {

namespace {

constexpr std::size_t kSubsetEnumerationCap = 22;

std::vector<int> mask_to_face(std::size_t mask, std::size_t n) {
    std::vector<int> face;
    for (std::size_t b = 0; b < n; ++b) {
        if (mask >> b & 1) face.push_back(static_cast<int>(b));
    }
    return face;
}

}  // namespace

std::vector<std::vector<int>> minimal_non_faces(const SimplicialComplex& complex) {
    const std::size_t n = complex.vertex_count();
    if (n > kSubsetEnumerationCap) {
        throw SizeLimitError("minimal_non_faces: too many vertices for subset enumeration");
    }
    // A subset is a minimal non-face iff it is not a face but all its
    // maximal proper subsets are.
    std::vector<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> face = mask_to_face(mask, n);
        if (complex.contains_face(face)) continue;
        bool minimal = true;
        for (std::size_t omit = 0; omit < face.size() && minimal; ++omit) {
            std::vector<int> sub;
            for (std::size_t t = 0; t < face.size(); ++t) {
                if (t != omit) sub.push_back(face[t]);
            }
            if (!complex.contains_face(sub)) minimal = false;
        }
        if (minimal) out.push_back(std::move(face));
    }
    return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    auto non_faces = minimal_non_faces(complex);
    if (non_faces.empty()) {
        throw InputError("stanley_reisner_ideal: the full simplex has the zero ideal");
    }
    ContextPtr ctx = make_context(complex.vertex_labels());
    std::vector<Monomial> gens;
    gens.reserve(non_faces.size());
    for (const auto& face : non_faces) {
        std::vector<int> e(ctx->size(), 0);
        for (int v : face) e[static_cast<std::size_t>(v)] = 1;
        gens.emplace_back(ctx, std::move(e));
    }
    return MonomialIdeal(ctx, std::move(gens));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw InputError("complex_of_ideal: ideal is not squarefree");
    if (I.is_zero()) throw InputError("complex_of_ideal: zero ideal");
    const std::size_t n = I.context()->size();
    if (n > kSubsetEnumerationCap) {
        throw SizeLimitError("complex_of_ideal: too many variables for subset enumeration");
    }
    std::vector<std::vector<int>> faces;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> e(n, 0);
        for (std::size_t b = 0; b < n; ++b) {
            if (mask >> b & 1) e[b] = 1;
        }
        if (!I.contains(Monomial(I.context(), e))) {
            faces.push_back(mask_to_face(mask, n));
        }
    }
    return SimplicialComplex(I.context()->names(), std::move(faces));
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    if (complex.is_void()) throw InputError("alexander_dual: void complex");
    auto non_faces = minimal_non_faces(complex);
    if (non_faces.empty()) {
        throw InputError("alexander_dual: the dual of the full simplex is void");
    }
    const std::size_t n = complex.vertex_count();
    std::vector<std::vector<int>> facets;
    facets.reserve(non_faces.size());
    for (const auto& face : non_faces) {
        std::vector<int> comp;
        std::size_t t = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (t < face.size() && face[t] == static_cast<int>(v)) {
                ++t;
            } else {
                comp.push_back(static_cast<int>(v));
            }
        }
        facets.push_back(std::move(comp));
    }
    return SimplicialComplex(complex.vertex_labels(), std::move(facets));
}

Poset intersection_lattice(const SimplicialComplex& complex) {
    if (complex.is_void() || complex.facets().empty()) {
        throw InputError("intersection_lattice: complex has no facets");
    }
    const std::size_t n = complex.vertex_count();
    // Close the facet set under pairwise intersection; that yields all
    // intersections of nonempty facet subsets.
    std::set<std::vector<int>> closure(complex.facets().begin(), complex.facets().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(closure.begin(), closure.end());
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(),
                                      current[j].end(), std::back_inserter(inter));
                if (closure.insert(std::move(inter)).second) grew = true;
            }
        }
    }
    std::vector<int> everything(n);
    for (std::size_t v = 0; v < n; ++v) everything[v] = static_cast<int>(v);
    closure.insert(everything);

    // Reverse inclusion: larger sets sit lower. Sort descending by size so
    // the bottom (the full vertex set) is element 0.
    std::vector<std::vector<int>> sets(closure.begin(), closure.end());
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    const std::size_t m = sets.size();
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::string s = "{";
        for (std::size_t t = 0; t < sets[i].size(); ++t) {
            if (t) s += ",";
            s += complex.vertex_labels()[static_cast<std::size_t>(sets[i][t])];
        }
        s += "}";
        labels[i] = s;
    }
    std::vector<Bitset> up(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (std::includes(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end())) {
                up[a].set(b);  // a ⊇ b means a <= b under reverse inclusion
            }
        }
    }
    return Poset::from_leq(std::move(labels), std::move(up));
}

bool verify_lattice_correspondence(const MonomialIdeal& I) {
    if (!I.is_squarefree() || I.is_zero()) {
        throw InputError("verify_lattice_correspondence: need a squarefree nonzero ideal");
    }
    SimplicialComplex delta = complex_of_ideal(I);
    LcmLattice L = LcmLattice::build(I);
    Poset M = intersection_lattice(alexander_dual(delta));
    if (L.size() != M.size()) return false;

    // Natural map: a lattice element maps to the complement of its support.
    // Images are located in M through the canonical set labels.
    const std::size_t n = I.context()->size();
    auto set_label = [&](const std::vector<int>& s) {
        std::string out = "{";
        for (std::size_t t = 0; t < s.size(); ++t) {
            if (t) out += ",";
            out += I.context()->name(static_cast<std::size_t>(s[t]));
        }
        out += "}";
        return out;
    };
    std::map<std::string, int> label_to_m;
    for (std::size_t e = 0; e < M.size(); ++e) label_to_m[M.label(static_cast<int>(e))] = static_cast<int>(e);

    std::vector<int> image(L.size(), -1);
    for (std::size_t e = 0; e < L.size(); ++e) {
        std::vector<int> comp;
        const auto& exps = L.element(static_cast<int>(e)).exponents();
        for (std::size_t v = 0; v < n; ++v) {
            if (exps[v] == 0) comp.push_back(static_cast<int>(v));
        }
        auto it = label_to_m.find(set_label(comp));
        if (it == label_to_m.end()) return false;
        image[e] = it->second;
    }
    // Bijective and order-preserving both ways.
    std::vector<bool> hit(M.size(), false);
    for (int im : image) {
        if (hit[static_cast<std::size_t>(im)]) return false;
        hit[static_cast<std::size_t>(im)] = true;
    }
    for (std::size_t a = 0; a < L.size(); ++a) {
        for (std::size_t b = 0; b < L.size(); ++b) {
            if (L.poset().leq(static_cast<int>(a), static_cast<int>(b)) !=
                M.leq(image[a], image[b])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace lcmlat
