#pragma once

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

using Vertex = int;
using Arc = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over vertices 0..N-1 with a canonical indexing of
/// the 2|E| directed arcs. Arc (u,v) has index first_arc(u) + rank of v in the
/// sorted adjacency list of u, so the indexing is fully determined by the edge
/// set. Immutable after construction; all queries are read-only.
class Graph {
public:
    Graph(int vertex_count, std::span<const Edge> edges) {
        if (vertex_count <= 0)
            throw std::invalid_argument("graph needs at least one vertex");
        n_ = vertex_count;
        std::vector<std::vector<Vertex>> adj(n_);
        for (const Edge& e : edges) {
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                            std::to_string(e.v) + ") references a vertex out of range");
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        offsets_.assign(n_ + 1, 0);
        for (Vertex v = 0; v < n_; ++v) {
            auto& nb = adj[v];
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
                Vertex w = *std::adjacent_find(nb.begin(), nb.end());
                throw std::invalid_argument("duplicate edge (" + std::to_string(std::min(v, w)) +
                                            ", " + std::to_string(std::max(v, w)) + ")");
            }
            if (nb.empty())
                throw std::invalid_argument("isolated vertex " + std::to_string(v));
            offsets_[v + 1] = offsets_[v] + static_cast<int>(nb.size());
            neighbors_.insert(neighbors_.end(), nb.begin(), nb.end());
        }
        edge_count_ = static_cast<int>(edges.size());
        arc_source_.resize(arc_count());
        for (Vertex v = 0; v < n_; ++v)
            for (Arc a = offsets_[v]; a < offsets_[v + 1]; ++a) arc_source_[a] = v;
        reverse_.resize(arc_count());
        for (Arc a = 0; a < arc_count(); ++a)
            reverse_[a] = arc_index(neighbors_[a], arc_source_[a]);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int arc_count() const { return 2 * edge_count_; }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
    }

    /// First arc leaving v; the arcs of v are the contiguous range
    /// [first_arc(v), first_arc(v) + degree(v)).
    Arc first_arc(Vertex v) const { return offsets_[v]; }

    bool has_edge(Vertex u, Vertex v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    Arc arc_index(Vertex u, Vertex v) const {
        auto nb = neighbors(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it == nb.end() || *it != v)
            throw std::invalid_argument("no arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        return offsets_[u] + static_cast<Arc>(it - nb.begin());
    }

    Vertex arc_source(Arc a) const { return arc_source_[a]; }
    Vertex arc_target(Arc a) const { return neighbors_[a]; }
    Arc reverse_arc(Arc a) const { return reverse_[a]; }

    /// Canonical edge list: (u, v) with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : neighbors(v))
                if (v < w) out.push_back({v, w});
        return out;
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<int> offsets_;
    std::vector<Vertex> neighbors_;
    std::vector<Vertex> arc_source_;
    std::vector<Arc> reverse_;
};

/// Build a graph from an edge list, inferring the vertex count from the
/// largest vertex id mentioned.
inline Graph build_graph(std::span<const Edge> edges) {
    Vertex max_id = -1;
    for (const Edge& e : edges) max_id = std::max({max_id, e.u, e.v});
    return Graph(max_id + 1, edges);
}

inline Graph build_graph(std::initializer_list<Edge> edges) {
    return build_graph(std::span<const Edge>(edges.begin(), edges.size()));
}

// ---------------------------------------------------------------------------
// Generators

/// Periodic square lattice with row-major vertex numbering (vertex = r*cols + c).
/// Both dimensions must be at least 3, otherwise the wrap-around would create
/// parallel edges.
inline Graph torus_graph(int rows, int cols) {
    if (rows < 3 || cols < 3)
        throw std::invalid_argument("torus dimensions must be at least 3x3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(2) * rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            edges.push_back({id(r, c), id(r, (c + 1) % cols)});
            edges.push_back({id(r, c), id((r + 1) % rows, c)});
        }
    return Graph(rows * cols, edges);
}

inline Graph complete_graph(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    if (n < 2) throw std::invalid_argument("path graph needs at least 2 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph(n, edges);
}

/// k+1 cliques of size `clique_size`, every pair of cliques joined by exactly
/// one edge. Each vertex handles the connection to one other clique, which
/// requires clique_size == k. Clique c owns vertices c*k .. c*k + k - 1, and
/// vertex c*k + j connects to clique j (skipping c itself).
inline Graph simplex_of_cliques(int k, int clique_size) {
    if (k < 2) throw std::invalid_argument("simplex needs at least 3 cliques");
    if (clique_size != k)
        throw std::invalid_argument("simplex requires clique size equal to the number of "
                                    "inter-clique connections per clique (" + std::to_string(k) + ")");
    const int cliques = k + 1;
    std::vector<Edge> edges;
    for (int c = 0; c < cliques; ++c)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges.push_back({c * k + i, c * k + j});
    for (int c = 0; c < cliques; ++c)
        for (int j = 0; j < k; ++j) {
            int other = j < c ? j : j + 1;
            if (other > c) {
                int back = c < other ? c : c - 1;  // the slot in `other` that points to c
                edges.push_back({c * k + j, other * k + back});
            }
        }
    return Graph(cliques * k, edges);
}

// ---------------------------------------------------------------------------
// Text format: first line "N M", then M lines "u v" with 0-based vertex ids.

inline Graph read_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file: missing 'N M' header");
    if (n <= 0 || m < 0) throw std::invalid_argument("graph file: invalid 'N M' header");
    std::vector<Edge> edges(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        if (!(in >> edges[i].u >> edges[i].v))
            throw std::invalid_argument("graph file: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
    return Graph(n, edges);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

// ---------------------------------------------------------------------------
// Structural queries

namespace detail {

/// Flood fill over `allowed` vertices, scanning seeds in ascending order so
/// component order and membership order are deterministic.
inline std::vector<std::vector<Vertex>> components_of(const Graph& g,
                                                      const std::vector<char>& allowed) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (!allowed[s] || seen[s]) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (allowed[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::vector<char> membership_mask(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        mask[v] = 1;
    }
    return mask;
}

}  // namespace detail

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    return detail::components_of(g, std::vector<char>(g.vertex_count(), 1));
}

inline bool is_connected(const Graph& g) {
    auto comps = connected_components(g);
    return comps.size() == 1;
}

/// Vertices flagged by the search oracle, together with the connected
/// components they induce on both sides of the marked/unmarked split.
/// Components are listed in ascending order of their smallest vertex.
class MarkedSet {
public:
    MarkedSet(const Graph& g, std::initializer_list<Vertex> members)
        : MarkedSet(g, std::span<const Vertex>(members.begin(), members.size())) {}

    MarkedSet(const Graph& g, std::span<const Vertex> members) : graph_(&g) {
        is_marked_ = detail::membership_mask(g, members);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (is_marked_[v]) members_.push_back(v);
        marked_components_ = detail::components_of(g, is_marked_);
        std::vector<char> unmarked(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) unmarked[v] = !is_marked_[v];
        unmarked_components_ = detail::components_of(g, unmarked);
        marked_component_of_.assign(g.vertex_count(), -1);
        unmarked_component_of_.assign(g.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(marked_components_.size()); ++i)
            for (Vertex v : marked_components_[i]) marked_component_of_[v] = i;
        for (int i = 0; i < static_cast<int>(unmarked_components_.size()); ++i)
            for (Vertex v : unmarked_components_[i]) unmarked_component_of_[v] = i;
    }

    const Graph& graph() const { return *graph_; }
    bool is_marked(Vertex v) const { return is_marked_[v] != 0; }
    const std::vector<Vertex>& members() const { return members_; }
    bool empty() const { return members_.empty(); }

    const std::vector<std::vector<Vertex>>& marked_components() const { return marked_components_; }
    const std::vector<std::vector<Vertex>>& unmarked_components() const { return unmarked_components_; }

    /// Index into marked_components() / unmarked_components(), -1 when the
    /// vertex is on the other side of the split.
    int marked_component_of(Vertex v) const { return marked_component_of_[v]; }
    int unmarked_component_of(Vertex v) const { return unmarked_component_of_[v]; }

private:
    const Graph* graph_;
    std::vector<char> is_marked_;
    std::vector<Vertex> members_;
    std::vector<std::vector<Vertex>> marked_components_;
    std::vector<std::vector<Vertex>> unmarked_components_;
    std::vector<int> marked_component_of_;
    std::vector<int> unmarked_component_of_;
};

inline MarkedSet marked_structure(const Graph& g, std::span<const Vertex> members) {
    return MarkedSet(g, members);
}

inline MarkedSet marked_structure(const Graph& g, std::initializer_list<Vertex> members) {
    return MarkedSet(g, std::span<const Vertex>(members.begin(), members.size()));
}

/// Two-coloring of one connected component. When valid, every edge inside the
/// component joins an X vertex to a Y vertex, and X contains the smallest
/// vertex id of the component.
struct Bipartition {
    bool valid = false;
    std::vector<signed char> side_of;  // indexed by vertex: -1 outside, 0 = X, 1 = Y
    std::vector<Vertex> x_side;
    std::vector<Vertex> y_side;

    bool in_x(Vertex v) const { return side_of[v] == 0; }
};

inline Bipartition bipartition(const Graph& g, std::span<const Vertex> component) {
    auto mask = detail::membership_mask(g, component);
    if (component.empty()) throw std::invalid_argument("bipartition of an empty component");

    Bipartition out;
    out.side_of.assign(g.vertex_count(), -1);
    Vertex start = *std::min_element(component.begin(), component.end());
    out.side_of[start] = 0;
    std::vector<Vertex> queue{start};
    std::size_t head = 0, reached = 1;
    bool odd_edge = false;
    while (head < queue.size()) {
        Vertex v = queue[head++];
        for (Vertex w : g.neighbors(v)) {
            if (!mask[w]) continue;
            if (out.side_of[w] == -1) {
                out.side_of[w] = static_cast<signed char>(1 - out.side_of[v]);
                queue.push_back(w);
                ++reached;
            } else if (out.side_of[w] == out.side_of[v]) {
                odd_edge = true;
            }
        }
    }
    if (reached != component.size())
        throw std::invalid_argument("bipartition requires a connected component");
    out.valid = !odd_edge;
    if (out.valid) {
        for (Vertex v : component)
            (out.side_of[v] == 0 ? out.x_side : out.y_side).push_back(v);
        std::sort(out.x_side.begin(), out.x_side.end());
        std::sort(out.y_side.begin(), out.y_side.end());
    } else {
        // Colors are meaningless on a non-bipartite component.
        out.side_of.assign(g.vertex_count(), -1);
    }
    return out;
}

struct OddCycle {
    std::vector<Vertex> vertices;  // consecutive (cyclically) adjacent, all distinct
    int length() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

/// Rotate/reflect a cycle so it starts at its smallest vertex and continues
/// in the lexicographically smaller direction.
inline std::vector<Vertex> canonical_cycle(std::vector<Vertex> cyc) {
    int k = static_cast<int>(cyc.size());
    int at = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<Vertex> fwd(k), rev(k);
    for (int i = 0; i < k; ++i) {
        fwd[i] = cyc[(at + i) % k];
        rev[i] = cyc[(at - i + k) % k];
    }
    return std::min(fwd, rev);
}

}  // namespace detail

/// Shortest odd cycle inside the induced subgraph on `component`, found by
/// breadth-first layering from every start vertex: an edge joining two
/// vertices in the same layer closes an odd walk, and the shortest such walk
/// is a simple cycle. Ties between equally short cycles are broken by the
/// lexicographically smallest canonical vertex sequence.
inline OddCycle find_odd_cycle(const Graph& g, std::span<const Vertex> component) {
    auto mask = detail::membership_mask(g, component);
    const int n = g.vertex_count();
    int best_len = std::numeric_limits<int>::max();
    std::vector<Vertex> best;

    std::vector<int> dist(n), parent(n);
    for (Vertex s : component) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::vector<Vertex> queue{s};
        dist[s] = 0;
        std::size_t head = 0;
        while (head < queue.size()) {
            Vertex v = queue[head++];
            if (2 * dist[v] + 1 > best_len) break;
            for (Vertex w : g.neighbors(v)) {
                if (!mask[w] || dist[w] != -1) continue;
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
        for (Vertex u : component) {
            if (dist[u] == -1) continue;
            for (Vertex v : g.neighbors(u)) {
                if (!mask[v] || v <= u || dist[v] != dist[u]) continue;
                int len = dist[u] + dist[v] + 1;
                if (len > best_len) continue;
                // Reconstruct s..u plus the reversed s..v and keep it only if simple.
                std::vector<Vertex> path_u, path_v;
                for (Vertex x = u; x != -1; x = parent[x]) path_u.push_back(x);
                for (Vertex x = v; x != -1; x = parent[x]) path_v.push_back(x);
                std::reverse(path_u.begin(), path_u.end());  // s .. u
                std::vector<Vertex> cyc = path_u;            // s .. u, v .. (excluding s)
                cyc.insert(cyc.end(), path_v.begin(), path_v.end() - 1);
                std::set<Vertex> uniq(cyc.begin(), cyc.end());
                if (static_cast<int>(uniq.size()) != len) continue;
                auto canon = detail::canonical_cycle(std::move(cyc));
                if (len < best_len || canon < best) {
                    best_len = len;
                    best = std::move(canon);
                }
            }
        }
    }
    if (best.empty())
        throw std::invalid_argument("no odd cycle: component is bipartite");
    return OddCycle{std::move(best)};
}

/// Vertex of `component` outside `cycle` whose distance to the cycle (within
/// the induced subgraph) is maximal; ties go to the smallest vertex id.
inline Vertex eccentric_vertex_from_cycle(const Graph& g, std::span<const Vertex> component,
                                          const OddCycle& cycle) {
    auto mask = detail::membership_mask(g, component);
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> queue;
    for (Vertex v : cycle.vertices) {
        if (!mask[v])
            throw std::invalid_argument("cycle vertex " + std::to_string(v) + " not in component");
        dist[v] = 0;
        queue.push_back(v);
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        Vertex v = queue[head++];
        for (Vertex w : g.neighbors(v))
            if (mask[w] && dist[w] == -1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    Vertex best = -1;
    int best_dist = 0;
    for (Vertex v : component)
        if (dist[v] > best_dist || (dist[v] == best_dist && dist[v] > 0 && v < best)) {
            best = v;
            best_dist = dist[v];
        }
    if (best == -1)
        throw std::invalid_argument("no vertex outside the cycle");
    return best;
}

}  // namespace qwalk
