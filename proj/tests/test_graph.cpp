#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include "qwalk/fixtures.hpp"
#include "qwalk/graph.hpp"

using namespace qwalk;

namespace {

// Independent shortest-odd-closed-walk oracle via the bipartite double cover:
// the distance from (v, even) to (v, odd) is the shortest odd closed walk
// through v, and its minimum over v is the shortest odd cycle length.
int shortest_odd_cycle_oracle(const Graph& g, const std::vector<Vertex>& component) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : component) in[v] = 1;
    int best = -1;
    for (Vertex s : component) {
        std::vector<std::array<int, 2>> dist(g.vertex_count(), {-1, -1});
        dist[s][0] = 0;
        std::vector<std::pair<Vertex, int>> queue{{s, 0}};
        std::size_t head = 0;
        while (head < queue.size()) {
            auto [v, parity] = queue[head++];
            for (Vertex w : g.neighbors(v)) {
                if (!in[w]) continue;
                int p = 1 - parity;
                if (dist[w][p] == -1) {
                    dist[w][p] = dist[v][parity] + 1;
                    queue.push_back({w, p});
                }
            }
        }
        if (dist[s][1] != -1 && (best == -1 || dist[s][1] < best)) best = dist[s][1];
    }
    return best;
}

std::vector<Vertex> all_vertices(const Graph& g) {
    std::vector<Vertex> out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = v;
    return out;
}

}  // namespace

TEST_CASE("triangle graph basics") {
    Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.arc_count() == 6);
    for (Vertex v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.arc_index(0, 1) == 0);
    CHECK(g.arc_index(0, 2) == 1);
    CHECK(g.arc_target(g.arc_index(2, 0)) == 0);
}

TEST_CASE("torus generator matches the 4x3 lattice") {
    Graph g = torus_graph(4, 3);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 24);
    for (Vertex v = 0; v < 12; ++v) CHECK(g.degree(v) == 4);
    CHECK(g.has_edge(6, 7));
    CHECK(g.has_edge(6, 8));   // row wrap at width 3
    CHECK(g.has_edge(6, 3));
    CHECK(g.has_edge(6, 9));
    CHECK_THROWS_AS(torus_graph(2, 5), std::invalid_argument);
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_WITH_AS(build_graph({{0, 0}}), doctest::Contains("self-loop at vertex 0"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_graph({{0, 1}, {1, 0}}), doctest::Contains("duplicate edge (0, 1)"),
                         std::invalid_argument);
    std::vector<Edge> edges{{0, 1}};
    CHECK_THROWS_WITH_AS(Graph(3, edges), doctest::Contains("isolated vertex 2"),
                         std::invalid_argument);
    std::vector<Edge> out_of_range{{0, 5}};
    CHECK_THROWS_AS(Graph(2, out_of_range), std::invalid_argument);
}

TEST_CASE("arc reversal is an involution on random graphs") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = fixtures::random_connected_graph(rng, 2, 14, 0.3);
        for (Arc a = 0; a < g.arc_count(); ++a) {
            Arc r = g.reverse_arc(a);
            CHECK(g.reverse_arc(r) == a);
            CHECK(g.arc_source(r) == g.arc_target(a));
            CHECK(g.arc_target(r) == g.arc_source(a));
        }
    }
}

TEST_CASE("marked structure splits components") {
    SUBCASE("torus pair") {
        Graph g = torus_graph(4, 3);
        MarkedSet m = marked_structure(g, {6, 7});
        REQUIRE(m.marked_components().size() == 1);
        CHECK(m.marked_components()[0] == std::vector<Vertex>{6, 7});
        REQUIRE(m.unmarked_components().size() == 1);
        CHECK(m.unmarked_components()[0].size() == 10);
    }
    SUBCASE("empty marked set") {
        Graph g = torus_graph(4, 3);
        MarkedSet m = marked_structure(g, {});
        CHECK(m.marked_components().empty());
        CHECK(m.unmarked_components().size() == 1);
        CHECK(m.unmarked_components()[0].size() == 12);
    }
    SUBCASE("path endpoints") {
        Graph g = path_graph(3);
        MarkedSet m = marked_structure(g, {0, 2});
        REQUIRE(m.marked_components().size() == 2);
        CHECK(m.marked_components()[0] == std::vector<Vertex>{0});
        CHECK(m.marked_components()[1] == std::vector<Vertex>{2});
        REQUIRE(m.unmarked_components().size() == 1);
        CHECK(m.unmarked_components()[0] == std::vector<Vertex>{1});
    }
    SUBCASE("out of range member") {
        Graph g = path_graph(3);
        CHECK_THROWS_AS(marked_structure(g, {7}), std::invalid_argument);
    }
}

TEST_CASE("bipartition") {
    SUBCASE("single edge puts the smaller id in X") {
        Graph g = path_graph(2);
        std::vector<Vertex> comp{0, 1};
        Bipartition b = bipartition(g, comp);
        CHECK(b.valid);
        CHECK(b.x_side == std::vector<Vertex>{0});
        CHECK(b.y_side == std::vector<Vertex>{1});
    }
    SUBCASE("triangle is not bipartite") {
        Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}});
        CHECK_FALSE(bipartition(g, all_vertices(g)).valid);
    }
    SUBCASE("seven-vertex component") {
        Graph g = fixtures::bipartite_component();
        Bipartition b = bipartition(g, all_vertices(g));
        REQUIRE(b.valid);
        CHECK(b.x_side == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(b.y_side == std::vector<Vertex>{4, 5, 6});
        for (const Edge& e : g.edges()) CHECK(b.side_of[e.u] != b.side_of[e.v]);
    }
    SUBCASE("disconnected input is rejected") {
        Graph g = build_graph({{0, 1}, {2, 3}});
        CHECK_THROWS_AS(bipartition(g, all_vertices(g)), std::invalid_argument);
    }
}

TEST_CASE("shortest odd cycle") {
    SUBCASE("triangle") {
        Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}});
        OddCycle c = find_odd_cycle(g, all_vertices(g));
        CHECK(c.vertices == std::vector<Vertex>{0, 1, 2});
    }
    SUBCASE("five-cycle is its own shortest odd cycle") {
        Graph g = cycle_graph(5);
        OddCycle c = find_odd_cycle(g, all_vertices(g));
        CHECK(c.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    }
    SUBCASE("bipartite input is an error") {
        Graph g = path_graph(2);
        CHECK_THROWS_WITH_AS(find_odd_cycle(g, all_vertices(g)), doctest::Contains("no odd cycle"),
                             std::invalid_argument);
    }
    SUBCASE("deterministic and structurally valid on random non-bipartite graphs") {
        std::mt19937 rng(1234);
        for (double density : {0.15, 0.3, 0.6, 0.85}) {
            for (int trial = 0; trial < 30; ++trial) {
                Graph g = fixtures::random_connected_non_bipartite_graph(rng, 3, 12, density);
                auto comp = all_vertices(g);
                OddCycle c = find_odd_cycle(g, comp);
                CHECK(c.length() >= 3);
                CHECK(c.length() % 2 == 1);
                std::set<Vertex> uniq(c.vertices.begin(), c.vertices.end());
                CHECK(static_cast<int>(uniq.size()) == c.length());
                for (int i = 0; i < c.length(); ++i)
                    CHECK(g.has_edge(c.vertices[i], c.vertices[(i + 1) % c.length()]));
                CHECK(c.length() == shortest_odd_cycle_oracle(g, comp));
                CHECK(find_odd_cycle(g, comp).vertices == c.vertices);
            }
        }
    }
}

TEST_CASE("eccentric vertex relative to a cycle") {
    SUBCASE("spur vertex next to the cycle") {
        Graph g = fixtures::five_cycle_with_spur();
        OddCycle cycle{{0, 1, 2, 3, 4}};
        CHECK(eccentric_vertex_from_cycle(g, all_vertices(g), cycle) == 5);
    }
    SUBCASE("cycle-only component is an error") {
        Graph g = cycle_graph(5);
        OddCycle cycle{{0, 1, 2, 3, 4}};
        CHECK_THROWS_AS(eccentric_vertex_from_cycle(g, all_vertices(g), cycle),
                        std::invalid_argument);
    }
    SUBCASE("distance ties go to the smallest vertex id") {
        Graph g = build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {6, 2}});
        OddCycle cycle{{0, 1, 2, 3, 4}};
        CHECK(eccentric_vertex_from_cycle(g, all_vertices(g), cycle) == 5);
    }
    SUBCASE("pendant path, cross-checked against all-pairs distances") {
        Graph g = fixtures::five_cycle_with_pendant_path();
        OddCycle cycle{{0, 1, 2, 3, 4}};
        Vertex got = eccentric_vertex_from_cycle(g, all_vertices(g), cycle);

        // Floyd-Warshall oracle.
        const int n = g.vertex_count();
        std::vector<std::vector<int>> d(n, std::vector<int>(n, 1000));
        for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
        for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        Vertex best = -1;
        int best_dist = 0;
        for (Vertex v = 0; v < n; ++v) {
            int to_cycle = 1000;
            for (Vertex c : cycle.vertices) to_cycle = std::min(to_cycle, d[v][c]);
            if (to_cycle > best_dist) {
                best_dist = to_cycle;
                best = v;
            }
        }
        CHECK(best == 6);
        CHECK(best_dist == 2);
        CHECK(got == best);
    }
}

TEST_CASE("other generators") {
    Graph k5 = complete_graph(5);
    CHECK(k5.edge_count() == 10);
    for (Vertex v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

    Graph simplex = simplex_of_cliques(3, 3);
    CHECK(simplex.vertex_count() == 12);
    CHECK(simplex.edge_count() == 18);
    for (Vertex v = 0; v < 12; ++v) CHECK(simplex.degree(v) == 3);
    CHECK(is_connected(simplex));
    CHECK_THROWS_AS(simplex_of_cliques(3, 4), std::invalid_argument);

    CHECK(path_graph(2).edge_count() == 1);
    CHECK(cycle_graph(6).edge_count() == 6);
}

TEST_CASE("graph text format round trip") {
    Graph g = torus_graph(4, 3);
    std::stringstream buf;
    write_graph(buf, g);
    Graph back = read_graph(buf);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());

    std::stringstream bad("3 2\n0 1\n");
    CHECK_THROWS_WITH_AS(read_graph(bad), doctest::Contains("expected 2 edges"),
                         std::invalid_argument);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_graph(empty), std::invalid_argument);
}
