#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qwalk/fixtures.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/stationary.hpp"

using namespace qwalk;

TEST_CASE("null_space basics") {
    SUBCASE("identity has none") {
        CHECK(null_space(Matrix::identity(4), 1e-9).cols() == 0);
    }
    SUBCASE("zero matrix has everything") {
        Matrix z(2, 3);
        Matrix basis = null_space(z, 1e-9);
        CHECK(basis.cols() == 3);
    }
    SUBCASE("single constraint in three unknowns") {
        Matrix a(1, 3);
        a(0, 0) = 1.0;
        a(0, 1) = 1.0;
        Matrix basis = null_space(a, 1e-9);
        REQUIRE(basis.cols() == 2);
        for (int j = 0; j < 2; ++j) {
            CHECK(std::abs(basis(0, j) + basis(1, j)) <= 1e-12);
            double norm = 0.0;
            for (int i = 0; i < 3; ++i) norm += basis(i, j) * basis(i, j);
            CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
        }
        double cross = 0.0;
        for (int i = 0; i < 3; ++i) cross += basis(i, 0) * basis(i, 1);
        CHECK(std::abs(cross) <= 1e-12);
    }
    SUBCASE("random rank-deficient matrices") {
        std::mt19937 rng(11);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 6, rank = 3;
            Matrix a(n, n);
            // Build A = sum of `rank` outer products.
            for (int r = 0; r < rank; ++r) {
                std::vector<double> u(n), v(n);
                for (double& x : u) x = gauss(rng);
                for (double& x : v) x = gauss(rng);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) a(i, j) += u[i] * v[j];
            }
            Matrix basis = null_space(a, 1e-9);
            CHECK(basis.cols() == n - rank);
            for (int j = 0; j < basis.cols(); ++j) {
                std::vector<double> col(n);
                for (int i = 0; i < n; ++i) col[i] = basis(i, j);
                std::vector<double> ax = a.multiply(col);
                for (double x : ax) CHECK(std::abs(x) <= 1e-9);
            }
        }
    }
}

TEST_CASE("materialized step operators") {
    SUBCASE("path with nothing marked is the swap") {
        Graph g = path_graph(2);
        MarkedSet m(g, {});
        Matrix u = materialize(g, m, StepVariant::grover);
        CHECK(u(0, 0) == doctest::Approx(0.0));
        CHECK(u(0, 1) == doctest::Approx(1.0));
        CHECK(u(1, 0) == doctest::Approx(1.0));
        CHECK(u(1, 1) == doctest::Approx(0.0));
    }
    SUBCASE("path with one marked vertex is the signed swap") {
        Graph g = path_graph(2);
        MarkedSet m(g, {0});
        Matrix u = materialize(g, m, StepVariant::grover);
        // Arc 0 is (0,1): the query negates it, degree-1 coins are identities,
        // the shift swaps, so column 0 is -e1 and column 1 is +e0.
        CHECK(u(0, 0) == doctest::Approx(0.0));
        CHECK(u(1, 0) == doctest::Approx(-1.0));
        CHECK(u(0, 1) == doctest::Approx(1.0));
        CHECK(u(1, 1) == doctest::Approx(0.0));
        CHECK(one_eigenspace(u).dimension() == 0);
    }
    SUBCASE("triangle with nothing marked fixes the uniform vector") {
        Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}});
        MarkedSet m(g, {});
        Matrix u = materialize(g, m, StepVariant::grover);
        std::vector<double> uniform(6, 1.0 / std::sqrt(6.0));
        std::vector<double> mapped = u.multiply(uniform);
        for (int i = 0; i < 6; ++i) CHECK(mapped[i] == doctest::Approx(uniform[i]).epsilon(1e-13));
    }
    SUBCASE("materialized operators are orthogonal") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = fixtures::random_connected_graph(rng, 2, 9, 0.4);
            MarkedSet m(g, fixtures::random_marked_set(rng, g, 0.4, false));
            for (StepVariant variant : {StepVariant::grover, StepVariant::skw}) {
                Matrix u = materialize(g, m, variant);
                Matrix gram = matmul(u.transposed(), u);
                for (int i = 0; i < gram.rows(); ++i)
                    for (int j = 0; j < gram.cols(); ++j)
                        CHECK(std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-12);
            }
        }
    }
    SUBCASE("columns agree with the streaming operator") {
        Graph g = torus_graph(4, 3);
        MarkedSet m(g, {6, 7});
        Matrix u = materialize(g, m, StepVariant::grover);
        for (Arc j = 0; j < g.arc_count(); ++j) {
            WalkState basis(g);
            basis[j] = 1.0;
            WalkState col = apply_step(basis, m, StepVariant::grover);
            for (Arc i = 0; i < g.arc_count(); ++i) CHECK(std::abs(u(i, j) - col[i]) <= 1e-14);
        }
    }
    SUBCASE("the arc cap is enforced") {
        Graph g = complete_graph(50);  // 2450 arcs
        MarkedSet m(g, {0});
        CHECK_THROWS_AS(materialize(g, m, StepVariant::grover), std::length_error);
        CHECK(materialize(g, m, StepVariant::grover, 2450).rows() == 2450);
    }
}

TEST_CASE("one_eigenspace") {
    SUBCASE("contains the torus pair state") {
        auto [g, marked] = fixtures::torus_adjacent_pair();
        MarkedSet m(g, marked);
        EigenspaceBasis basis = one_eigenspace(materialize(g, m, StepVariant::grover));
        REQUIRE(basis.dimension() >= 1);

        WalkState pair(g, 1.0);
        pair[g.arc_index(6, 7)] = -3.0;
        pair[g.arc_index(7, 6)] = -3.0;
        WalkState unit = pair.normalized();
        std::vector<double> coords = basis.vectors.multiply_transposed(unit.amplitudes());
        std::vector<double> back = basis.vectors.multiply(coords);
        for (Arc a = 0; a < g.arc_count(); ++a) CHECK(std::abs(back[a] - unit[a]) <= 1e-9);
    }
    SUBCASE("basis vectors are orthonormal fixed points") {
        auto [g, marked] = fixtures::marked_triangle_host();
        MarkedSet m(g, marked);
        Matrix u = materialize(g, m, StepVariant::grover);
        EigenspaceBasis basis = one_eigenspace(u);
        REQUIRE(basis.dimension() >= 1);
        for (int j = 0; j < basis.dimension(); ++j) {
            std::vector<double> col(g.arc_count());
            for (Arc a = 0; a < g.arc_count(); ++a) col[a] = basis.vectors(a, j);
            std::vector<double> mapped = u.multiply(col);
            for (Arc a = 0; a < g.arc_count(); ++a) CHECK(std::abs(mapped[a] - col[a]) <= 1e-9);
            for (int k = 0; k <= j; ++k) {
                double dot = 0.0;
                for (Arc a = 0; a < g.arc_count(); ++a) dot += basis.vectors(a, j) * basis.vectors(a, k);
                CHECK(std::abs(dot - (j == k ? 1.0 : 0.0)) <= 1e-10);
            }
        }
    }
    SUBCASE("empty marked set keeps the uniform state") {
        Graph g = build_graph({{0, 1}, {1, 2}, {0, 2}});
        MarkedSet m(g, {});
        EigenspaceBasis basis = one_eigenspace(materialize(g, m, StepVariant::grover));
        InitialProjection proj = project_initial(basis, g);
        CHECK(proj.norm == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("dimension is invariant under vertex relabeling") {
        std::mt19937 rng(37);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = fixtures::random_connected_graph(rng, 3, 9, 0.4);
            auto marked = fixtures::random_marked_set(rng, g, 0.4, true);
            std::vector<Vertex> perm(g.vertex_count());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Edge> relabeled;
            for (const Edge& e : g.edges()) relabeled.push_back({perm[e.u], perm[e.v]});
            Graph h(g.vertex_count(), relabeled);
            std::vector<Vertex> marked_h;
            for (Vertex v : marked) marked_h.push_back(perm[v]);
            for (StepVariant variant : {StepVariant::grover, StepVariant::skw}) {
                MarkedSet mg(g, marked);
                MarkedSet mh(h, marked_h);
                CHECK(one_eigenspace(materialize(g, mg, variant)).dimension() ==
                      one_eigenspace(materialize(h, mh, variant)).dimension());
            }
        }
    }
}

TEST_CASE("project_initial") {
    SUBCASE("torus pair projection matches the closed-form overlap") {
        auto [g, marked] = fixtures::torus_adjacent_pair();
        MarkedSet m(g, marked);
        EigenspaceBasis basis = one_eigenspace(materialize(g, m, StepVariant::grover));
        InitialProjection proj = project_initial(basis, g);
        CHECK(proj.norm * proj.norm == doctest::Approx(1600.0 / 3072.0).epsilon(1e-10));
        // The normalized projection is itself stationary.
        WalkState unit = proj.state.normalized();
        CHECK(check_stationary(unit, m, StepVariant::grover, 1e-8).is_stationary);
    }
    SUBCASE("two-vertex path has no overlap-bearing stationary state") {
        auto [g, marked] = fixtures::two_vertex_path_marked();
        MarkedSet m(g, marked);
        EigenspaceBasis basis = one_eigenspace(materialize(g, m, StepVariant::grover));
        CHECK(project_initial(basis, g).norm <= 1e-9);
    }
    SUBCASE("skw projections vanish on connected marked graphs") {
        for (auto fixture : {fixtures::torus_adjacent_pair(), fixtures::marked_triangle_host()}) {
            MarkedSet m(fixture.graph, fixture.marked);
            EigenspaceBasis basis = one_eigenspace(materialize(fixture.graph, m, StepVariant::skw));
            CHECK(project_initial(basis, fixture.graph).norm <= 1e-9);
        }
    }
}

TEST_CASE("skw eigenvectors are antisymmetric on connected marked fixtures") {
    for (auto fixture : {fixtures::torus_adjacent_pair(), fixtures::simplex_marked_clique()}) {
        const Graph& g = fixture.graph;
        MarkedSet m(g, fixture.marked);
        EigenspaceBasis basis = one_eigenspace(materialize(g, m, StepVariant::skw));
        for (int j = 0; j < basis.dimension(); ++j)
            for (Arc a = 0; a < g.arc_count(); ++a) {
                Arc r = g.reverse_arc(a);
                if (a < r) CHECK(std::abs(basis.vectors(a, j) + basis.vectors(r, j)) <= 1e-8);
            }
    }
}
