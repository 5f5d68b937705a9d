#ifndef LCMLAT_GRAPH_HPP
#define LCMLAT_GRAPH_HPP

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcmlat/ideal.hpp"

namespace lcmlat {

/// Simple undirected graph on vertices 1..n.
class SimpleGraph {
public:
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::set<std::pair<int, int>> edges_;  // normalized u < v
};

SimpleGraph complement(const SimpleGraph& G);

/// Chordality by greedy simplicial elimination. A chordal verdict carries
/// the perfect elimination ordering; a non-chordal verdict carries an
/// induced cycle of length >= 4.
struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;  // certificate when chordal
    std::vector<int> induced_cycle;      // counter-certificate otherwise
};
ChordalityResult is_chordal(const SimpleGraph& G);

/// Replays an elimination ordering: each removed vertex's remaining
/// neighborhood must be a clique.
bool verify_elimination_order(const SimpleGraph& G, const std::vector<int>& order);
/// Checks that the cycle is induced (consecutive edges only) and has
/// length >= 4.
bool verify_induced_cycle(const SimpleGraph& G, const std::vector<int>& cycle);

/// I(G) = (x_i x_j : {i,j} an edge) over x1..xn. Errors on an edgeless
/// graph (the zero ideal).
MonomialIdeal edge_ideal(const SimpleGraph& G);

bool is_cochordal(const SimpleGraph& G);

/// graph6 string decoding (n <= 62 is enough here).
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& G);

}  // namespace lcmlat

#endif
