#ifndef LCMLAT_VINCE_WACHS_HPP
#define LCMLAT_VINCE_WACHS_HPP

#include <set>
#include <string>
#include <vector>

#include "lcmlat/poset.hpp"

namespace lcmlat {

/// Simple graph whose edges carry colors from a declared finite color set.
class EdgeColoredGraph {
public:
    EdgeColoredGraph(std::vector<std::string> vertex_names, std::vector<int> colors);

    void add_edge(int u, int v, int color);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const std::vector<int>& colors() const { return colors_; }

    /// Connected components of the subgraph on edges whose color lies in
    /// `palette`; singletons for isolated vertices. Each component is a
    /// sorted vertex-index list.
    std::vector<std::vector<int>> components_under(const std::set<int>& palette) const;

private:
    struct Edge {
        int u, v, color;
    };
    std::vector<std::string> vertices_;
    std::vector<int> colors_;
    std::vector<Edge> edges_;
};

/// The pair poset P(G): a bottom element plus all pairs (H, J) with J a
/// subset of the color set and H a connected component of the J-colored
/// subgraph, ordered by componentwise inclusion. The poset need not be
/// bounded above; callers check for a unique top before lattice queries.
Poset vince_wachs_poset(const EdgeColoredGraph& G);

}  // namespace lcmlat

#endif
