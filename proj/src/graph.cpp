#include "lcmlat/graph.hpp"

#include <algorithm>
#include <deque>

#include "lcmlat/errors.hpp"

namespace lcmlat {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw InputError("graph: negative vertex count");
    for (auto [u, v] : edges) {
        if (u == v) throw InputError("graph: loops are not allowed");
        if (u < 1 || v < 1 || u > n || v > n) {
            throw InputError("graph: vertex out of range (vertices are 1..n)");
        }
        edges_.emplace(std::min(u, v), std::max(u, v));
    }
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u) {
        if (u != v && has_edge(u, v)) out.push_back(u);
    }
    return out;
}

SimpleGraph complement(const SimpleGraph& G) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= G.vertex_count(); ++u) {
        for (int v = u + 1; v <= G.vertex_count(); ++v) {
            if (!G.has_edge(u, v)) edges.emplace_back(u, v);
        }
    }
    return SimpleGraph(G.vertex_count(), std::move(edges));
}

namespace {

// Shortest induced cycle hunt: for a vertex v with non-adjacent neighbors
// a, b, a shortest a-b path avoiding N[v] \ {a, b} closes to an induced
// cycle through v of length >= 4.
std::vector<int> find_induced_cycle(const SimpleGraph& G, const std::vector<int>& alive) {
    std::vector<bool> in_alive(static_cast<std::size_t>(G.vertex_count()) + 1, false);
    for (int v : alive) in_alive[static_cast<std::size_t>(v)] = true;
    for (int v : alive) {
        std::vector<int> nbrs;
        for (int u : G.neighbors(v)) {
            if (in_alive[static_cast<std::size_t>(u)]) nbrs.push_back(u);
        }
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                int a = nbrs[i], b = nbrs[j];
                if (G.has_edge(a, b)) continue;
                std::vector<bool> allowed = in_alive;
                allowed[static_cast<std::size_t>(v)] = false;
                for (int u : nbrs) {
                    if (u != a && u != b) allowed[static_cast<std::size_t>(u)] = false;
                }
                // BFS from a to b inside the allowed set.
                std::vector<int> prev(static_cast<std::size_t>(G.vertex_count()) + 1, 0);
                std::deque<int> queue{a};
                prev[static_cast<std::size_t>(a)] = a;
                bool reached = false;
                while (!queue.empty() && !reached) {
                    int cur = queue.front();
                    queue.pop_front();
                    for (int u : G.neighbors(cur)) {
                        if (!allowed[static_cast<std::size_t>(u)] ||
                            prev[static_cast<std::size_t>(u)] != 0) {
                            continue;
                        }
                        prev[static_cast<std::size_t>(u)] = cur;
                        if (u == b) {
                            reached = true;
                            break;
                        }
                        queue.push_back(u);
                    }
                }
                if (!reached) continue;
                std::vector<int> path;
                for (int cur = b; cur != a; cur = prev[static_cast<std::size_t>(cur)]) {
                    path.push_back(cur);
                }
                path.push_back(a);
                std::reverse(path.begin(), path.end());
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
        }
    }
    return {};
}

}  // namespace

ChordalityResult is_chordal(const SimpleGraph& G) {
    ChordalityResult result;
    std::vector<int> alive;
    for (int v = 1; v <= G.vertex_count(); ++v) alive.push_back(v);
    std::vector<int> order;
    while (!alive.empty()) {
        int simplicial = 0;
        for (int v : alive) {
            std::vector<int> nbrs;
            for (int u : G.neighbors(v)) {
                if (std::find(alive.begin(), alive.end(), u) != alive.end()) nbrs.push_back(u);
            }
            bool clique = true;
            for (std::size_t i = 0; i < nbrs.size() && clique; ++i) {
                for (std::size_t j = i + 1; j < nbrs.size() && clique; ++j) {
                    if (!G.has_edge(nbrs[i], nbrs[j])) clique = false;
                }
            }
            if (clique) {
                simplicial = v;
                break;
            }
        }
        if (simplicial == 0) {
            result.chordal = false;
            result.induced_cycle = find_induced_cycle(G, alive);
            return result;
        }
        order.push_back(simplicial);
        std::erase(alive, simplicial);
    }
    result.chordal = true;
    result.elimination_order = std::move(order);
    return result;
}

bool verify_elimination_order(const SimpleGraph& G, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != G.vertex_count()) return false;
    std::vector<bool> removed(static_cast<std::size_t>(G.vertex_count()) + 1, false);
    for (int v : order) {
        if (v < 1 || v > G.vertex_count() || removed[static_cast<std::size_t>(v)]) return false;
        std::vector<int> nbrs;
        for (int u : G.neighbors(v)) {
            if (!removed[static_cast<std::size_t>(u)]) nbrs.push_back(u);
        }
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!G.has_edge(nbrs[i], nbrs[j])) return false;
            }
        }
        removed[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool verify_induced_cycle(const SimpleGraph& G, const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 4) return false;
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (G.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    }
    return true;
}

MonomialIdeal edge_ideal(const SimpleGraph& G) {
    if (G.edges().empty()) throw InputError("edge_ideal: edgeless graph has the zero ideal");
    ContextPtr ctx = make_context(static_cast<std::size_t>(G.vertex_count()));
    std::vector<Monomial> gens;
    for (auto [u, v] : G.edges()) {
        std::vector<int> e(ctx->size(), 0);
        e[static_cast<std::size_t>(u - 1)] = 1;
        e[static_cast<std::size_t>(v - 1)] = 1;
        gens.emplace_back(ctx, std::move(e));
    }
    return MonomialIdeal(ctx, std::move(gens));
}

bool is_cochordal(const SimpleGraph& G) { return is_chordal(complement(G)).chordal; }

SimpleGraph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
    if (text.empty()) throw InputError("graph6: empty string");
    const int n = static_cast<int>(text[0]) - 63;
    if (n < 0 || n > 62) throw InputError("graph6: only n <= 62 is supported");
    const std::size_t bits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (text.size() < 1 + need) throw InputError("graph6: string too short");
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const char c = text[1 + bit / 6];
            if (c < 63 || c > 126) throw InputError("graph6: bad character");
            const int chunk = c - 63;
            if (chunk >> (5 - bit % 6) & 1) edges.emplace_back(i + 1, j + 1);
        }
    }
    return SimpleGraph(n, std::move(edges));
}

std::string to_graph6(const SimpleGraph& G) {
    const int n = G.vertex_count();
    if (n > 62) throw SizeLimitError("graph6: only n <= 62 is supported");
    std::string out(1, static_cast<char>(n + 63));
    const std::size_t bits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::vector<int> chunk((bits + 5) / 6, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (G.has_edge(i + 1, j + 1)) chunk[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    for (int c : chunk) out.push_back(static_cast<char>(c + 63));
    return out;
}

}  // namespace lcmlat
