#include "lcmlat/betti.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lcmlat/errors.hpp"
#include "lcmlat/homology.hpp"

namespace lcmlat {

void BettiTable::set(int i, const Monomial& m, std::size_t value) {
    if (value == 0) return;
    entries_[{i, m.exponents()}] = value;
    degree_of_[m.exponents()] = m.degree();
}

std::size_t BettiTable::at(int i, const Monomial& m) const {
    auto it = entries_.find({i, m.exponents()});
    return it == entries_.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, std::size_t> BettiTable::graded() const {
    std::map<std::pair<int, int>, std::size_t> out;
    for (const auto& [key, value] : entries_) {
        const auto& [i, exps] = key;
        int j = degree_of_.at(exps);
        out[{i, j}] += value;
    }
    return out;
}

int BettiTable::max_homological_index() const {
    int mx = -1;
    for (const auto& [key, value] : entries_) mx = std::max(mx, key.first);
    return mx;
}

std::vector<Monomial> BettiTable::degrees_at(int i, const ContextPtr& context) const {
    std::vector<Monomial> out;
    for (const auto& [key, value] : entries_) {
        if (key.first == i) out.emplace_back(context, key.second);
    }
    std::sort(out.begin(), out.end(), CanonicalMonomialLess{});
    return out;
}

std::string BettiTable::to_grid_string() const {
    auto g = graded();
    if (g.empty()) return "(empty Betti table)\n";
    int imax = 0, jmin = 1 << 30, jmax = 0;
    for (const auto& [key, value] : g) {
        imax = std::max(imax, key.first);
        jmin = std::min(jmin, key.second);
        jmax = std::max(jmax, key.second);
    }
    std::ostringstream os;
    os << "      ";
    for (int j = jmin; j <= jmax; ++j) os << "j=" << j << "\t";
    os << "\n";
    for (int i = 0; i <= imax; ++i) {
        os << "i=" << i << "   ";
        for (int j = jmin; j <= jmax; ++j) {
            auto it = g.find({i, j});
            os << (it == g.end() ? 0 : it->second) << "\t";
        }
        os << "\n";
    }
    return os.str();
}

BettiTable gpw_betti(const MonomialIdeal& I, const FieldSpec& field,
                     std::size_t generator_cap) {
    if (I.is_zero()) throw InputError("gpw_betti: zero ideal");
    LcmLattice L = LcmLattice::build(I, generator_cap);
    BettiTable table(field);
    for (std::size_t e = 1; e < L.size(); ++e) {
        Poset open = open_interval(L.poset(), L.bottom(), static_cast<int>(e));
        HomologyProfile h = reduced_homology(order_complex(open), field);
        for (const auto& [deg, dim] : h.dims()) {
            if (dim != 0) table.set(deg + 1, L.element(static_cast<int>(e)), dim);
        }
    }
    return table;
}

namespace {

// The elements of K^m(I) = {squarefree F with m/x^F in I} over supp(m).
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& m) {
    auto supp = m.support();
    const std::size_t s = supp.size();
    std::vector<std::string> labels;
    labels.reserve(s);
    for (std::size_t v : supp) labels.push_back(I.context()->name(v));
    std::vector<std::vector<int>> faces;
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
        std::vector<int> e = m.exponents();
        std::vector<int> face;
        for (std::size_t b = 0; b < s; ++b) {
            if (mask >> b & 1) {
                e[supp[b]] -= 1;
                face.push_back(static_cast<int>(b));
            }
        }
        if (I.contains(Monomial(I.context(), e))) faces.push_back(std::move(face));
    }
    return SimplicialComplex(std::move(labels), std::move(faces));
}

}  // namespace

BettiTable koszul_betti_oracle(const MonomialIdeal& I, const FieldSpec& field) {
    if (I.is_zero()) throw InputError("koszul_betti_oracle: zero ideal");
    Monomial top = I.generators().front();
    for (const Monomial& g : I.generators()) top = lcm(top, g);

    // Enumerate divisors of the top lcm; every other multidegree is zero.
    const std::size_t n = I.context()->size();
    std::vector<int> exps(n, 0);
    BettiTable table(field);
    while (true) {
        Monomial m(I.context(), exps);
        if (!m.is_one() && I.contains(m)) {
            SimplicialComplex K = upper_koszul_complex(I, m);
            if (!K.is_void()) {
                HomologyProfile h = reduced_homology(K, field);
                for (const auto& [deg, dim] : h.dims()) {
                    if (dim != 0) table.set(deg + 1, m, dim);
                }
            }
        }
        // Next divisor, odometer style.
        std::size_t pos = 0;
        while (pos < n) {
            if (exps[pos] < top.exponents()[pos]) {
                ++exps[pos];
                break;
            }
            exps[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return table;
}

std::optional<int> has_d_linear_resolution(const MonomialIdeal& I, const FieldSpec& field) {
    if (I.is_zero()) throw InputError("has_d_linear_resolution: zero ideal");
    auto d = is_equigenerated(I);
    if (!d) return std::nullopt;
    BettiTable table = gpw_betti(I, field);
    for (const auto& [key, value] : table.entries()) {
        const auto& [i, exps] = key;
        int deg = std::accumulate(exps.begin(), exps.end(), 0);
        if (deg != i + *d) return std::nullopt;
    }
    return d;
}

std::vector<Monomial> first_betti_degrees(const MonomialIdeal& I, const FieldSpec& field) {
    BettiTable table = gpw_betti(I, field);
    return table.degrees_at(1, I.context());
}

MonomialIdeal build_I1(const MonomialIdeal& I, const FieldSpec& field) {
    auto degrees = first_betti_degrees(I, field);
    if (degrees.empty()) {
        throw InputError("build_I1: no first Betti degrees (the zero ideal)");
    }
    return MonomialIdeal(I.context(), std::move(degrees));
}

}  // namespace lcmlat
