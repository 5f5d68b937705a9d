#include "lcmlat/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lcmlat/errors.hpp"

namespace lcmlat {

Poset Poset::from_leq(std::vector<std::string> labels, std::vector<Bitset> up) {
    const std::size_t n = labels.size();
    if (up.size() != n) throw InputError("poset: up-set count differs from label count");
    for (std::size_t a = 0; a < n; ++a) {
        if (up[a].size() != n) throw InputError("poset: up-set width differs from size");
        if (!up[a].test(a)) throw InputError("poset: order must be reflexive");
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && up[a].test(b) && up[b].test(a)) {
                throw InputError("poset: order must be antisymmetric");
            }
        }
        for (std::size_t b = up[a].find_first(); b != Bitset::npos; b = up[a].find_next(b)) {
            if (!up[b].is_subset_of(up[a])) {
                throw InputError("poset: order must be transitive");
            }
        }
    }
    Poset P;
    P.labels_ = std::move(labels);
    P.up_ = std::move(up);
    P.finalize();
    return P;
}

Poset Poset::from_cover_edges(std::vector<std::string> labels,
                              const std::vector<std::pair<int, int>>& covers) {
    const std::size_t n = labels.size();
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) up[a].set(a);
    // Reachability by repeated relaxation (graphs here are tiny).
    std::vector<std::vector<int>> succ(n);
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n) || a == b) {
            throw InputError("poset: bad cover edge");
        }
        succ[static_cast<std::size_t>(a)].push_back(b);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
            for (int b : succ[a]) {
                Bitset merged = up[a] | up[static_cast<std::size_t>(b)];
                if (merged != up[a]) {
                    up[a] = std::move(merged);
                    changed = true;
                }
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = up[a].find_first(); b != Bitset::npos; b = up[a].find_next(b)) {
            if (a != b && up[b].test(a)) throw InputError("poset: cover edges contain a cycle");
        }
    }
    Poset P;
    P.labels_ = std::move(labels);
    P.up_ = std::move(up);
    P.finalize();
    // Transitive reduction must reproduce the input edges.
    std::vector<std::pair<int, int>> given = covers;
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given != P.cover_edges_) {
        throw InputError("poset: edge list is not transitively reduced");
    }
    return P;
}

void Poset::finalize() {
    const std::size_t n = labels_.size();
    down_.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = up_[a].find_first(); b != Bitset::npos; b = up_[a].find_next(b)) {
            down_[b].set(a);
        }
    }
    cover_up_.assign(n, Bitset(n));
    cover_down_.assign(n, Bitset(n));
    cover_above_.assign(n, {});
    cover_below_.assign(n, {});
    cover_edges_.clear();
    for (std::size_t a = 0; a < n; ++a) {
        Bitset strict_up = up_[a];
        strict_up.reset(a);
        for (std::size_t b = strict_up.find_first(); b != Bitset::npos; b = strict_up.find_next(b)) {
            // b covers a iff nothing lies strictly between.
            Bitset between = strict_up & down_[b];
            between.reset(b);
            if (between.none()) {
                cover_up_[a].set(b);
                cover_down_[b].set(a);
                cover_above_[a].push_back(static_cast<int>(b));
                cover_below_[b].push_back(static_cast<int>(a));
                cover_edges_.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    std::sort(cover_edges_.begin(), cover_edges_.end());
    for (auto& v : cover_above_) std::sort(v.begin(), v.end());
    for (auto& v : cover_below_) std::sort(v.begin(), v.end());
}

bool Poset::covers(int a, int b) const {
    return cover_up_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b));
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (std::size_t a = 0; a < size(); ++a) {
        if (down_[a].count() == 1) out.push_back(static_cast<int>(a));
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (std::size_t a = 0; a < size(); ++a) {
        if (up_[a].count() == 1) out.push_back(static_cast<int>(a));
    }
    return out;
}

std::optional<int> Poset::bottom() const {
    auto mins = minimal_elements();
    if (mins.size() == 1) return mins.front();
    return std::nullopt;
}

std::optional<int> Poset::top() const {
    auto maxs = maximal_elements();
    if (maxs.size() == 1) return maxs.front();
    return std::nullopt;
}

std::vector<int> Poset::atoms() const {
    auto b = bottom();
    if (!b) throw InputError("atoms: poset has no bottom");
    return covers_above(*b);
}

Poset Poset::induced(const std::vector<int>& elements) const {
    std::vector<int> elems = elements;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const std::size_t m = elems.size();
    std::vector<std::string> labels(m);
    std::vector<Bitset> up(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = label(elems[i]);
        for (std::size_t j = 0; j < m; ++j) {
            if (leq(elems[i], elems[j])) up[i].set(j);
        }
    }
    Poset P;
    P.labels_ = std::move(labels);
    P.up_ = std::move(up);
    P.finalize();
    return P;
}

std::vector<int> interval_elements(const Poset& P, int x, int y) {
    if (!P.leq(x, y)) throw InputError("interval: endpoints are incomparable");
    std::vector<int> out;
    Bitset mask = P.up_set(x) & P.down_set(y);
    for (std::size_t e = mask.find_first(); e != Bitset::npos; e = mask.find_next(e)) {
        out.push_back(static_cast<int>(e));
    }
    return out;
}

Poset interval(const Poset& P, int x, int y) { return P.induced(interval_elements(P, x, y)); }

Poset open_interval(const Poset& P, int x, int y) {
    auto elems = interval_elements(P, x, y);
    std::erase(elems, x);
    std::erase(elems, y);
    return P.induced(elems);
}

Poset proper_part(const Poset& P) {
    auto b = P.bottom();
    auto t = P.top();
    if (!b || !t) throw InputError("proper_part: poset is not bounded");
    std::vector<int> elems;
    for (std::size_t e = 0; e < P.size(); ++e) {
        int i = static_cast<int>(e);
        if (i != *b && i != *t) elems.push_back(i);
    }
    return P.induced(elems);
}

bool is_graded_poset(const Poset& P) {
    if (P.size() == 0) return false;
    auto b = P.bottom();
    auto t = P.top();
    if (!b || !t) return false;
    // Longest-chain height from the bottom; graded iff every cover edge
    // raises it by exactly one.
    const std::size_t n = P.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int c) { return P.down_set(a).count() < P.down_set(c).count(); });
    std::vector<int> height(n, 0);
    for (int e : order) {
        for (int c : P.covers_below(e)) height[static_cast<std::size_t>(e)] =
            std::max(height[static_cast<std::size_t>(e)], height[static_cast<std::size_t>(c)] + 1);
    }
    for (auto [a, c] : P.cover_edges()) {
        if (height[static_cast<std::size_t>(c)] != height[static_cast<std::size_t>(a)] + 1) return false;
    }
    return true;
}

bool is_semimodular(const Poset& P) {
    for (std::size_t c = 0; c < P.size(); ++c) {
        const auto& above = P.covers_above(static_cast<int>(c));
        for (std::size_t i = 0; i < above.size(); ++i) {
            for (std::size_t j = i + 1; j < above.size(); ++j) {
                Bitset common = P.cover_up_set(above[i]) & P.cover_up_set(above[j]);
                if (common.none()) return false;
            }
        }
    }
    return true;
}

bool is_totally_semimodular(const Poset& P) {
    if (!P.is_bounded()) throw InputError("is_totally_semimodular: poset must be bounded");
    // Covers inside an interval of a poset are covers of the ambient poset,
    // so each interval can be checked against the global cover structure.
    const std::size_t n = P.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!P.leq(static_cast<int>(x), static_cast<int>(y))) continue;
            Bitset mask = P.up_set(static_cast<int>(x)) & P.down_set(static_cast<int>(y));
            for (std::size_t c = mask.find_first(); c != Bitset::npos; c = mask.find_next(c)) {
                Bitset above = P.cover_up_set(static_cast<int>(c)) & mask;
                std::vector<int> ups;
                for (std::size_t a = above.find_first(); a != Bitset::npos; a = above.find_next(a)) {
                    ups.push_back(static_cast<int>(a));
                }
                for (std::size_t i = 0; i < ups.size(); ++i) {
                    for (std::size_t j = i + 1; j < ups.size(); ++j) {
                        Bitset common = P.cover_up_set(ups[i]) & P.cover_up_set(ups[j]) & mask;
                        if (common.none()) return false;
                    }
                }
            }
        }
    }
    return true;
}

std::vector<int> join_witnesses(const Poset& P, int a, int b) {
    Bitset ub = P.up_set(a) & P.up_set(b);
    std::vector<int> minimal;
    for (std::size_t u = ub.find_first(); u != Bitset::npos; u = ub.find_next(u)) {
        Bitset below = P.down_set(static_cast<int>(u)) & ub;
        if (below.count() == 1) minimal.push_back(static_cast<int>(u));
    }
    return minimal;
}

bool is_lattice(const Poset& P) {
    if (!P.is_bounded()) throw InputError("is_lattice: poset must be bounded");
    const std::size_t n = P.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            Bitset ub = P.up_set(static_cast<int>(a)) & P.up_set(static_cast<int>(b));
            std::size_t minimal = 0;
            for (std::size_t u = ub.find_first(); u != Bitset::npos; u = ub.find_next(u)) {
                if ((P.down_set(static_cast<int>(u)) & ub).count() == 1) ++minimal;
            }
            if (minimal != 1) return false;
            Bitset lb = P.down_set(static_cast<int>(a)) & P.down_set(static_cast<int>(b));
            std::size_t maximal = 0;
            for (std::size_t u = lb.find_first(); u != Bitset::npos; u = lb.find_next(u)) {
                if ((P.up_set(static_cast<int>(u)) & lb).count() == 1) ++maximal;
            }
            if (maximal != 1) return false;
        }
    }
    return true;
}

namespace {

// Iterated refinement of element colors by the multisets of neighbor colors
// in the cover digraph. Purely structural.
std::vector<long long> refine_invariants(const Poset& P, const std::vector<long long>* seed) {
    const std::size_t n = P.size();
    std::vector<long long> color(n, 0);
    if (seed) color = *seed;
    using Signature = std::tuple<long long, std::vector<long long>, std::vector<long long>,
                                 std::size_t, std::size_t>;
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<Signature> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<long long> ups, downs;
            for (int u : P.covers_above(static_cast<int>(v))) ups.push_back(color[static_cast<std::size_t>(u)]);
            for (int u : P.covers_below(static_cast<int>(v))) downs.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(ups.begin(), ups.end());
            std::sort(downs.begin(), downs.end());
            sig[v] = {color[v], std::move(ups), std::move(downs),
                      P.up_set(static_cast<int>(v)).count(), P.down_set(static_cast<int>(v)).count()};
        }
        std::map<Signature, long long> ids;
        for (const auto& s : sig) ids.emplace(s, 0);
        long long next = 0;
        for (auto& [key, id] : ids) id = next++;
        std::vector<long long> fresh(n);
        for (std::size_t v = 0; v < n; ++v) fresh[v] = ids[sig[v]];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

bool extend_isomorphism(const Poset& P, const Poset& Q, const std::vector<long long>& pc,
                        const std::vector<long long>& qc, std::vector<int>& image,
                        std::vector<bool>& used, std::size_t v) {
    const std::size_t n = P.size();
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
        if (used[w] || pc[v] != qc[w]) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) {
            const int iu = image[u];
            if (P.leq(static_cast<int>(u), static_cast<int>(v)) !=
                Q.leq(iu, static_cast<int>(w))) ok = false;
            if (P.leq(static_cast<int>(v), static_cast<int>(u)) !=
                Q.leq(static_cast<int>(w), iu)) ok = false;
        }
        if (!ok) continue;
        image[v] = static_cast<int>(w);
        used[w] = true;
        if (extend_isomorphism(P, Q, pc, qc, image, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Poset& P, const Poset& Q,
                                               const std::vector<long long>* p_colors,
                                               const std::vector<long long>* q_colors,
                                               std::size_t size_cap) {
    if (P.size() > size_cap || Q.size() > size_cap) {
        throw SizeLimitError("isomorphism search: poset exceeds size cap");
    }
    if (P.size() != Q.size()) return std::nullopt;
    auto pc = refine_invariants(P, p_colors);
    auto qc = refine_invariants(Q, q_colors);
    {
        auto ps = pc;
        auto qs = qc;
        std::sort(ps.begin(), ps.end());
        std::sort(qs.begin(), qs.end());
        if (ps != qs) return std::nullopt;
    }
    std::vector<int> image(P.size(), -1);
    std::vector<bool> used(Q.size(), false);
    if (extend_isomorphism(P, Q, pc, qc, image, used, 0)) return image;
    return std::nullopt;
}

}  // namespace lcmlat
