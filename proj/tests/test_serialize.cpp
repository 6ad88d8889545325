#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "qwalk/fixtures.hpp"
#include "qwalk/serialize.hpp"

using namespace qwalk;

TEST_CASE("graph hash identifies the edge set") {
    Graph a = torus_graph(4, 3);
    Graph b = torus_graph(4, 3);
    Graph c = torus_graph(3, 4);
    CHECK(graph_hash(a) == graph_hash(b));
    CHECK(graph_hash(a) != graph_hash(c));
    CHECK(graph_hash(a).size() == 16);
}

TEST_CASE("state json round trip preserves amplitudes and verifies") {
    auto [g, marked] = fixtures::torus_adjacent_pair();
    MarkedSet m(g, marked);
    ConstructResult built = construct_optimal(g, m);

    json doc = state_to_json(built.state, m, true);
    ParsedState back = state_from_json(g, doc);
    CHECK(back.marked == m.members());
    CHECK(back.normalized);
    for (Arc a = 0; a < g.arc_count(); ++a) CHECK(back.state[a] == built.state[a]);

    StationaryReport report = check_stationary(back.state, m, StepVariant::grover);
    CHECK(report.is_stationary);
}

TEST_CASE("state json validation") {
    auto [g, marked] = fixtures::torus_adjacent_pair();
    MarkedSet m(g, marked);
    json doc = state_to_json(initial_state(g), m, true);

    SUBCASE("hash mismatch") {
        Graph other = torus_graph(3, 4);
        CHECK_THROWS_WITH_AS(state_from_json(other, doc), doctest::Contains("graph_hash"),
                             std::invalid_argument);
    }
    SUBCASE("duplicate arc") {
        doc["amplitudes"].push_back(doc["amplitudes"][0]);
        CHECK_THROWS_WITH_AS(state_from_json(g, doc), doctest::Contains("duplicate"),
                             std::invalid_argument);
    }
    SUBCASE("unknown arc") {
        doc["amplitudes"][0]["to"] = 11;  // vertex 0 is not adjacent to 11
        CHECK_THROWS_WITH_AS(state_from_json(g, doc), doctest::Contains("no arc"),
                             std::invalid_argument);
    }
    SUBCASE("missing arcs default to zero") {
        json sparse{{"graph_hash", graph_hash(g)},
                    {"marked", json::array({6, 7})},
                    {"amplitudes", json::array({{{"from", 0}, {"to", 1}, {"value", 0.5}}})},
                    {"normalized", false}};
        ParsedState parsed = state_from_json(g, sparse);
        CHECK(parsed.state[g.arc_index(0, 1)] == 0.5);
        CHECK(parsed.state[g.arc_index(1, 0)] == 0.0);
    }
}

TEST_CASE("report json lists violations of a perturbed state") {
    auto [g, marked] = fixtures::torus_adjacent_pair();
    MarkedSet m(g, marked);
    ConstructResult built = construct_optimal(g, m);
    WalkState perturbed = built.state;
    perturbed[g.arc_index(6, 7)] += 0.01;

    StationaryReport report = check_stationary(perturbed, m, StepVariant::grover);
    CHECK_FALSE(report.is_stationary);
    json doc = report_to_json(report);
    CHECK(doc["is_stationary"] == false);
    CHECK(doc["violations"].size() == report.violations.size());
    CHECK(doc["violations"].size() > 0);
    bool has_pair_edge = false;
    for (const auto& v : doc["violations"])
        if (v["case"] == "P3") has_pair_edge = true;
    CHECK(has_pair_edge);
}

TEST_CASE("serialization is byte-deterministic") {
    auto [g, marked] = fixtures::torus_adjacent_pair();
    MarkedSet m(g, marked);
    ConstructResult once = construct_optimal(g, m);
    ConstructResult twice = construct_optimal(g, m);
    CHECK(state_to_json(once.state, m, true).dump(2) == state_to_json(twice.state, m, true).dump(2));
    CHECK(report_to_json(once.report).dump(2) == report_to_json(twice.report).dump(2));
}

TEST_CASE("simulation csv format") {
    Graph g = torus_graph(4, 3);
    MarkedSet m(g, {6});
    auto series = simulate(g, m, StepVariant::grover, 3);
    std::ostringstream out;
    write_simulation_csv(out, series);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "step,success_probability,norm");
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        ++rows;
        int step = -1;
        double p = -1.0, n = -1.0;
        CHECK(std::sscanf(line.c_str(), "%d,%lg,%lg", &step, &p, &n) == 3);
        CHECK(step == rows - 1);
        CHECK(p >= 0.0);
        CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(rows == 4);

    json j = simulation_to_json(series);
    CHECK(j.size() == 4);
    CHECK(j[0]["step"] == 0);
}
