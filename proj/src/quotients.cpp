#include "lcmlat/quotients.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "lcmlat/errors.hpp"

namespace lcmlat {

namespace {

class QuotientSearch {
public:
    QuotientSearch(const MonomialIdeal& I, SearchBudget budget)
        : gens_(I.generators()), budget_(budget) {
        const std::size_t k = gens_.size();
        quot_.resize(k);
        linear_var_.assign(k, std::vector<int>(k, -1));
        for (std::size_t a = 0; a < k; ++a) {
            quot_[a].reserve(k);
            for (std::size_t b = 0; b < k; ++b) {
                Monomial q = colon_quotient(gens_[a], gens_[b]);
                if (q.degree() == 1) {
                    linear_var_[a][b] = static_cast<int>(q.support().front());
                }
                quot_[a].push_back(std::move(q));
            }
        }
    }

    SearchResult<QuotientCertificate> run() {
        const std::size_t k = gens_.size();
        full_ = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);

        std::vector<int> order;
        order.reserve(k);
        if (greedy(order)) return SearchResult<QuotientCertificate>::make_found(certify(order));

        order.clear();
        bool ok = backtrack(0, order);
        if (exhausted_) return SearchResult<QuotientCertificate>::make_exhausted();
        if (!ok) return SearchResult<QuotientCertificate>::make_not_found();
        return SearchResult<QuotientCertificate>::make_found(certify(order));
    }

private:
    // The colon of (generators in S) by candidate c is generated by
    // variables iff every quotient g_j/gcd(g_j,g_c), j in S, is divisible
    // by some quotient that is a single variable.
    bool condition(std::uint64_t S, int c) const {
        for (int j = 0; j < static_cast<int>(gens_.size()); ++j) {
            if (!(S >> j & 1)) continue;
            bool witnessed = false;
            for (int k = 0; k < static_cast<int>(gens_.size()); ++k) {
                if (!(S >> k & 1)) continue;
                int v = linear_var_[k][c];
                if (v >= 0 && quot_[j][c].exponents()[static_cast<std::size_t>(v)] > 0) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) return false;
        }
        return true;
    }

    bool greedy(std::vector<int>& order) {
        std::uint64_t S = 0;
        while (S != full_) {
            bool placed = false;
            for (int c = 0; c < static_cast<int>(gens_.size()); ++c) {
                if (S >> c & 1) continue;
                if (condition(S, c)) {
                    order.push_back(c);
                    S |= std::uint64_t{1} << c;
                    placed = true;
                    break;
                }
            }
            if (!placed) return false;
        }
        return true;
    }

    bool backtrack(std::uint64_t S, std::vector<int>& order) {
        if (S == full_) return true;
        if (failed_.count(S)) return false;
        for (int c = 0; c < static_cast<int>(gens_.size()); ++c) {
            if (S >> c & 1) continue;
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            if (!condition(S, c)) continue;
            order.push_back(c);
            if (backtrack(S | (std::uint64_t{1} << c), order)) return true;
            order.pop_back();
            if (exhausted_) return false;
        }
        failed_.insert(S);
        return false;
    }

    QuotientCertificate certify(const std::vector<int>& order) const {
        QuotientCertificate cert;
        cert.ordering = order;
        cert.witnesses.resize(order.size());
        for (std::size_t s = 1; s < order.size(); ++s) {
            int c = order[s];
            for (std::size_t t = 0; t < s; ++t) {
                int j = order[t];
                for (std::size_t r = 0; r < s; ++r) {
                    int k = order[r];
                    int v = linear_var_[k][c];
                    if (v >= 0 && quot_[j][c].exponents()[static_cast<std::size_t>(v)] > 0) {
                        cert.witnesses[s].push_back(
                            QuotientWitness{j, k, static_cast<std::size_t>(v)});
                        break;
                    }
                }
            }
        }
        return cert;
    }

    const std::vector<Monomial>& gens_;
    std::vector<std::vector<Monomial>> quot_;     // quot_[a][b] = g_a / gcd(g_a, g_b)
    std::vector<std::vector<int>> linear_var_;    // variable index when quot is linear
    std::uint64_t full_ = 0;
    std::unordered_set<std::uint64_t> failed_;
    SearchBudget budget_;
    bool exhausted_ = false;
};

}  // namespace

SearchResult<QuotientCertificate> find_linear_quotients_order(const MonomialIdeal& I,
                                                              SearchBudget budget) {
    if (I.is_zero()) throw InputError("find_linear_quotients_order: zero ideal");
    if (I.generator_count() > 64) {
        throw SizeLimitError("linear-quotients search supports at most 64 generators");
    }
    if (I.generator_count() == 1) {
        QuotientCertificate cert;
        cert.ordering = {0};
        cert.witnesses = {{}};
        return SearchResult<QuotientCertificate>::make_found(std::move(cert));
    }
    return QuotientSearch(I, budget).run();
}

bool verify_quotient_certificate(const MonomialIdeal& I, const QuotientCertificate& cert) {
    const auto& gens = I.generators();
    const std::size_t k = gens.size();
    if (cert.ordering.size() != k || cert.witnesses.size() != k) return false;
    std::vector<bool> seen(k, false);
    for (int g : cert.ordering) {
        if (g < 0 || g >= static_cast<int>(k) || seen[static_cast<std::size_t>(g)]) return false;
        seen[static_cast<std::size_t>(g)] = true;
    }
    std::vector<std::size_t> position(k, 0);
    for (std::size_t s = 0; s < k; ++s) position[static_cast<std::size_t>(cert.ordering[s])] = s;

    for (std::size_t s = 1; s < k; ++s) {
        const Monomial& placed = gens[static_cast<std::size_t>(cert.ordering[s])];
        // Each earlier generator needs exactly one witness entry.
        if (cert.witnesses[s].size() != s) return false;
        std::vector<bool> covered(s, false);
        for (const QuotientWitness& w : cert.witnesses[s]) {
            if (w.earlier < 0 || w.earlier >= static_cast<int>(k)) return false;
            if (w.via < 0 || w.via >= static_cast<int>(k)) return false;
            std::size_t pe = position[static_cast<std::size_t>(w.earlier)];
            std::size_t pv = position[static_cast<std::size_t>(w.via)];
            if (pe >= s || pv >= s) return false;
            Monomial via_quot = colon_quotient(gens[static_cast<std::size_t>(w.via)], placed);
            if (via_quot.degree() != 1) return false;
            if (via_quot.exponents()[w.variable] != 1) return false;
            Monomial earlier_quot = colon_quotient(gens[static_cast<std::size_t>(w.earlier)], placed);
            if (!via_quot.divides(earlier_quot)) return false;
            covered[pe] = true;
        }
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return false;
    }
    return true;
}

}  // namespace lcmlat
