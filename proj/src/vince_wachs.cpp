#include "lcmlat/vince_wachs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lcmlat/errors.hpp"

namespace lcmlat {

EdgeColoredGraph::EdgeColoredGraph(std::vector<std::string> vertex_names,
                                   std::vector<int> colors)
    : vertices_(std::move(vertex_names)), colors_(std::move(colors)) {
    if (vertices_.empty()) throw InputError("edge-colored graph needs a nonempty vertex set");
    std::sort(colors_.begin(), colors_.end());
    colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
}

void EdgeColoredGraph::add_edge(int u, int v, int color) {
    const int n = static_cast<int>(vertices_.size());
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw InputError("bad edge");
    if (!std::binary_search(colors_.begin(), colors_.end(), color)) {
        throw InputError("edge color " + std::to_string(color) + " not in the declared color set");
    }
    edges_.push_back(Edge{u, v, color});
}

std::vector<std::vector<int>> EdgeColoredGraph::components_under(
    const std::set<int>& palette) const {
    const std::size_t n = vertices_.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (const Edge& e : edges_) {
        if (!palette.count(e.color)) continue;
        int ru = find(e.u), rv = find(e.v);
        if (ru != rv) parent[static_cast<std::size_t>(ru)] = rv;
    }
    std::map<int, std::vector<int>> comps;
    for (std::size_t v = 0; v < n; ++v) comps[find(static_cast<int>(v))].push_back(static_cast<int>(v));
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : comps) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

Poset vince_wachs_poset(const EdgeColoredGraph& G) {
    struct Element {
        std::vector<int> component;  // vertex indices, sorted
        std::set<int> palette;
    };
    std::vector<Element> elements;
    // Subsets of the color set in a stable order.
    const auto& colors = G.colors();
    const std::size_t c = colors.size();
    if (c > 20) throw SizeLimitError("vince_wachs_poset: too many colors");
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
        std::set<int> palette;
        for (std::size_t b = 0; b < c; ++b) {
            if (mask >> b & 1) palette.insert(colors[b]);
        }
        for (auto& comp : G.components_under(palette)) {
            elements.push_back(Element{std::move(comp), palette});
        }
    }

    auto set_to_string = [&](const std::vector<int>& verts, const std::set<int>& palette) {
        std::string s = "({";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) s += ",";
            s += G.vertex_names()[static_cast<std::size_t>(verts[i])];
        }
        s += "},{";
        bool first = true;
        for (int col : palette) {
            if (!first) s += ",";
            s += std::to_string(col);
            first = false;
        }
        s += "})";
        return s;
    };

    const std::size_t n = elements.size() + 1;  // plus adjoined bottom
    std::vector<std::string> labels(n);
    labels[0] = "0";
    for (std::size_t e = 0; e < elements.size(); ++e) {
        labels[e + 1] = set_to_string(elements[e].component, elements[e].palette);
    }
    std::vector<Bitset> up(n, Bitset(n));
    up[0].set();  // bottom below everything
    for (std::size_t a = 0; a < elements.size(); ++a) {
        up[a + 1].set(a + 1);
        for (std::size_t b = 0; b < elements.size(); ++b) {
            if (a == b) continue;
            const bool comp_sub = std::includes(elements[b].component.begin(),
                                                elements[b].component.end(),
                                                elements[a].component.begin(),
                                                elements[a].component.end());
            const bool pal_sub = std::includes(elements[b].palette.begin(),
                                               elements[b].palette.end(),
                                               elements[a].palette.begin(),
                                               elements[a].palette.end());
            if (comp_sub && pal_sub) up[a + 1].set(b + 1);
        }
    }
    return Poset::from_leq(std::move(labels), std::move(up));
}

}  // namespace lcmlat
