#include "lcmlat/lattice.hpp"

#include <algorithm>

#include "lcmlat/errors.hpp"

namespace lcmlat {

LcmLattice LcmLattice::build(const MonomialIdeal& I, std::size_t generator_cap) {
    if (I.is_zero()) throw InputError("build_lcm_lattice: zero ideal");
    if (I.generator_count() > generator_cap) {
        throw SizeLimitError("build_lcm_lattice: " + std::to_string(I.generator_count()) +
                             " generators exceed the cap of " + std::to_string(generator_cap));
    }

    // Close {1} and the atoms under join with atoms; every lcm of a subset
    // is a fold of such joins.
    std::map<std::vector<int>, int> seen;
    std::vector<Monomial> pool;
    auto add = [&](const Monomial& m) -> bool {
        auto [it, inserted] = seen.emplace(m.exponents(), static_cast<int>(pool.size()));
        if (inserted) pool.push_back(m);
        return inserted;
    };
    add(Monomial::one(I.context()));
    for (const Monomial& g : I.generators()) add(g);
    for (std::size_t head = 0; head < pool.size(); ++head) {
        Monomial current = pool[head];
        for (const Monomial& g : I.generators()) {
            add(lcm(current, g));
        }
    }

    LcmLattice L;
    L.elements_ = std::move(pool);
    std::sort(L.elements_.begin(), L.elements_.end(), CanonicalMonomialLess{});
    L.index_.clear();
    for (std::size_t e = 0; e < L.elements_.size(); ++e) {
        L.index_.emplace(L.elements_[e].exponents(), static_cast<int>(e));
    }

    const std::size_t n = L.elements_.size();
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (L.elements_[a].divides(L.elements_[b])) up[a].set(b);
        }
    }
    std::vector<std::string> labels(n);
    for (std::size_t e = 0; e < n; ++e) labels[e] = to_pretty_string(L.elements_[e]);
    L.poset_ = Poset::from_leq(std::move(labels), std::move(up));
    L.top_ = static_cast<int>(n - 1);  // the unique maximal degree element sorts last
    L.atoms_ = L.poset_.covers_above(0);
    return L;
}

std::optional<int> LcmLattice::index_of(const Monomial& m) const {
    auto it = index_.find(m.exponents());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int LcmLattice::join(int a, int b) const {
    Monomial j = lcm(element(a), element(b));
    auto idx = index_of(j);
    if (!idx) throw std::logic_error("lcm-lattice is not join closed");
    return *idx;
}

std::vector<int> LcmLattice::super_atoms() const {
    std::vector<int> out;
    Bitset atom_mask(size());
    for (int a : atoms_) atom_mask.set(static_cast<std::size_t>(a));
    for (std::size_t e = 0; e < size(); ++e) {
        if ((poset_.cover_down_set(static_cast<int>(e)) & atom_mask).any()) {
            out.push_back(static_cast<int>(e));
        }
    }
    return out;
}

bool is_degree_graded(const LcmLattice& L) {
    for (auto [a, b] : L.poset().cover_edges()) {
        if (a == L.bottom()) continue;
        if (L.degree(b) != L.degree(a) + 1) return false;
    }
    return true;
}

bool is_d_degree_graded(const LcmLattice& L, int d) {
    if (!is_degree_graded(L)) return false;
    for (int a : L.atom_indices()) {
        if (L.degree(a) != d) return false;
    }
    return true;
}

std::optional<int> degree_graded_degree(const LcmLattice& L) {
    if (L.atom_indices().empty()) return std::nullopt;
    int d = L.degree(L.atom_indices().front());
    if (is_d_degree_graded(L, d)) return d;
    return std::nullopt;
}

std::optional<std::vector<int>> are_isomorphic(const LcmLattice& A, const LcmLattice& B,
                                               std::size_t size_cap) {
    std::vector<long long> a_deg(A.size()), b_deg(B.size());
    for (std::size_t e = 0; e < A.size(); ++e) a_deg[e] = A.degree(static_cast<int>(e));
    for (std::size_t e = 0; e < B.size(); ++e) b_deg[e] = B.degree(static_cast<int>(e));
    return are_isomorphic(A.poset(), B.poset(), &a_deg, &b_deg, size_cap);
}

}  // namespace lcmlat
