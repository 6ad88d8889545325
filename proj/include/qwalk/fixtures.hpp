#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk::fixtures {

struct MarkedGraph {
    Graph graph;
    std::vector<Vertex> marked;
};

/// 4x3 periodic lattice with the adjacent pair {6,7} marked.
inline MarkedGraph torus_adjacent_pair() {
    return {torus_graph(4, 3), {6, 7}};
}

/// Marked triangle {0,1,2} with unequal degrees, attached to a connected
/// unmarked path 3-4-5-6.
inline MarkedGraph marked_triangle_host() {
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2},
                           {0, 3}, {0, 4}, {1, 5}, {2, 6},
                           {3, 4}, {4, 5}, {5, 6}});
    return {std::move(g), {0, 1, 2}};
}

/// Seven-vertex bipartite component with sides {0,1,2,3} and {4,5,6}.
/// Removing vertex 0 splits it into {1,3,4,5} (reached through two edges)
/// and {2,6} (one edge).
inline std::vector<Edge> bipartite_component_edges() {
    return {{0, 4}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {3, 4}, {3, 5}, {2, 6}};
}

inline Graph bipartite_component() {
    auto edges = bipartite_component_edges();
    return Graph(7, edges);
}

/// The bipartite component above embedded in a host graph whose unmarked ring
/// 7-8-9-10 feeds each side of the bipartition through four edges, so the
/// partite shortage sums balance under a single uniform value.
inline MarkedGraph bipartite_component_host() {
    std::vector<Edge> edges = bipartite_component_edges();
    std::vector<Edge> host = {{7, 0}, {7, 1}, {8, 2}, {8, 3},
                              {9, 4}, {9, 5}, {10, 5}, {10, 6},
                              {7, 8}, {8, 9}, {9, 10}};
    edges.insert(edges.end(), host.begin(), host.end());
    return {Graph(11, edges), {0, 1, 2, 3, 4, 5, 6}};
}

/// Simplex of four 3-cliques with one clique fully marked.
inline MarkedGraph simplex_marked_clique() {
    return {simplex_of_cliques(3, 3), {0, 1, 2}};
}

/// Marked adjacent pair {0,1} where each endpoint leans on its own unmarked
/// component: vertex 0 on {2,3} through two edges, vertex 1 on {4,5,6}
/// through three. Balance forces the two uniform values into ratio 3:2.
inline MarkedGraph pair_with_split_support() {
    Graph g = build_graph({{0, 1},
                           {0, 2}, {0, 3}, {2, 3},
                           {1, 4}, {1, 5}, {1, 6}, {4, 5}, {5, 6}});
    return {std::move(g), {0, 1}};
}

/// Two vertices joined by one edge, one of them marked. The smallest
/// configuration without an overlap-bearing stationary state.
inline MarkedGraph two_vertex_path_marked() {
    return {path_graph(2), {0}};
}

/// Marked adjacent pair of degrees 3 and 4 inside a connected host, so the
/// single unmarked component cannot balance the two partite sums.
inline MarkedGraph unequal_degree_pair_host() {
    Graph g = build_graph({{0, 1},
                           {0, 2}, {0, 3},
                           {1, 4}, {1, 5}, {1, 6},
                           {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    return {std::move(g), {0, 1}};
}

/// Five-cycle 0..4 plus vertex 5 attached to the non-adjacent cycle vertices
/// 0 and 2, so the five-cycle stays the unique shortest odd cycle.
inline Graph five_cycle_with_spur() {
    return build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 2}});
}

/// Five-cycle 0..4 with the pendant path 5-6 hanging off vertex 0.
inline Graph five_cycle_with_pendant_path() {
    return build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}});
}

// ---------------------------------------------------------------------------
// Seeded random instances for the randomized checks.

/// Connected graph on [min_vertices, max_vertices]: a random spanning tree
/// plus each remaining pair independently with probability extra_edge_p.
inline Graph random_connected_graph(std::mt19937& rng, int min_vertices, int max_vertices,
                                    double extra_edge_p) {
    std::uniform_int_distribution<int> size_dist(min_vertices, max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int n = size_dist(rng);
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> present;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> anchor(0, v - 1);
        Vertex u = anchor(rng);
        edges.push_back({u, v});
        present.insert({u, v});
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!present.count({u, v}) && coin(rng) < extra_edge_p) edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph random_connected_non_bipartite_graph(std::mt19937& rng, int min_vertices,
                                                  int max_vertices, double extra_edge_p) {
    for (;;) {
        Graph g = random_connected_graph(rng, std::max(3, min_vertices), max_vertices, extra_edge_p);
        std::vector<Vertex> all(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
        if (!bipartition(g, all).valid) return g;
    }
}

inline std::vector<Vertex> random_marked_set(std::mt19937& rng, const Graph& g, double mark_p,
                                             bool require_nonempty) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (coin(rng) < mark_p) members.push_back(v);
        if (!members.empty() || !require_nonempty) return members;
    }
}

}  // namespace qwalk::fixtures
