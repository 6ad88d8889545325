#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/stationary.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

using nlohmann::json;

/// FNV-1a over the canonical edge list; identifies the graph a state file
/// belongs to.
inline std::string graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    feed(static_cast<std::uint64_t>(g.vertex_count()));
    feed(static_cast<std::uint64_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        feed(static_cast<std::uint64_t>(e.u));
        feed(static_cast<std::uint64_t>(e.v));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline json state_to_json(const WalkState& s, const MarkedSet& m, bool normalized) {
    require_same_graph(s, m);
    const Graph& g = s.graph();
    json amplitudes = json::array();
    for (Arc a = 0; a < g.arc_count(); ++a)
        amplitudes.push_back({{"from", g.arc_source(a)}, {"to", g.arc_target(a)}, {"value", s[a]}});
    return json{{"graph_hash", graph_hash(g)},
                {"marked", m.members()},
                {"amplitudes", amplitudes},
                {"normalized", normalized}};
}

struct ParsedState {
    WalkState state;
    std::vector<Vertex> marked;
    bool normalized = false;
};

/// Read a state file back against a concrete graph. The hash must match.
/// Arcs may be listed at most once; missing arcs default to amplitude 0.
inline ParsedState state_from_json(const Graph& g, const json& j) {
    if (!j.is_object()) throw std::invalid_argument("state file: expected a JSON object");
    if (j.value("graph_hash", std::string{}) != graph_hash(g))
        throw std::invalid_argument("state file: graph_hash does not match the given graph");
    ParsedState out{WalkState(g), {}, j.value("normalized", false)};
    if (j.contains("marked"))
        out.marked = j.at("marked").get<std::vector<Vertex>>();
    std::vector<char> seen(g.arc_count(), 0);
    for (const json& entry : j.at("amplitudes")) {
        Vertex from = entry.at("from").get<Vertex>();
        Vertex to = entry.at("to").get<Vertex>();
        if (from < 0 || from >= g.vertex_count() || !g.has_edge(from, to))
            throw std::invalid_argument("state file: no arc (" + std::to_string(from) + ", " +
                                        std::to_string(to) + ") in the graph");
        Arc a = g.arc_index(from, to);
        if (seen[a])
            throw std::invalid_argument("state file: duplicate amplitude for arc (" +
                                        std::to_string(from) + ", " + std::to_string(to) + ")");
        seen[a] = 1;
        out.state[a] = entry.at("value").get<double>();
    }
    return out;
}

inline json report_to_json(const StationaryReport& r) {
    json violations = json::array();
    for (const EdgeViolation& v : r.violations)
        violations.push_back({{"from", v.from},
                              {"to", v.to},
                              {"case", pair_case_name(v.pair_case)},
                              {"residual", v.residual}});
    return json{{"is_stationary", r.is_stationary},
                {"oracle_variant", step_variant_name(r.variant)},
                {"tolerance", r.tolerance},
                {"max_residual", r.max_residual},
                {"overlap_with_initial", r.overlap_with_initial},
                {"violations", violations}};
}

inline void write_simulation_csv(std::ostream& out, std::span<const SimulationRecord> series) {
    out << "step,success_probability,norm\n";
    char buf[80];
    for (const SimulationRecord& r : series) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", r.step, r.success_probability, r.norm);
        out << buf;
    }
}

inline json simulation_to_json(std::span<const SimulationRecord> series) {
    json out = json::array();
    for (const SimulationRecord& r : series)
        out.push_back({{"step", r.step},
                       {"success_probability", r.success_probability},
                       {"norm", r.norm}});
    return out;
}

inline json basis_to_json(const EigenspaceBasis& basis, const Graph& g) {
    json vectors = json::array();
    for (int j = 0; j < basis.dimension(); ++j) {
        json amplitudes = json::array();
        for (Arc a = 0; a < g.arc_count(); ++a)
            amplitudes.push_back({{"from", g.arc_source(a)},
                                  {"to", g.arc_target(a)},
                                  {"value", basis.vectors(a, j)}});
        vectors.push_back(amplitudes);
    }
    return json{{"graph_hash", graph_hash(g)}, {"dimension", basis.dimension()}, {"vectors", vectors}};
}

}  // namespace qwalk
