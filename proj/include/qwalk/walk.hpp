#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

inline constexpr double kDefaultStationaryTol = 1e-10;
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kNormDriftTol = 1e-9;

/// Real amplitude vector indexed by the arcs of a bound graph. The walk
/// operators are real orthogonal matrices and the initial state is real, so
/// the whole reachable space stays real. Binding is by graph identity; mixing
/// states of different Graph instances is rejected.
class WalkState {
public:
    explicit WalkState(const Graph& g, double fill = 0.0)
        : graph_(&g), amp_(static_cast<std::size_t>(g.arc_count()), fill) {}

    static WalkState from_amplitudes(const Graph& g, std::vector<double> amplitudes) {
        if (static_cast<int>(amplitudes.size()) != g.arc_count())
            throw std::invalid_argument("amplitude vector length must equal the arc count");
        WalkState s(g);
        s.amp_ = std::move(amplitudes);
        return s;
    }

    const Graph& graph() const { return *graph_; }
    int size() const { return static_cast<int>(amp_.size()); }

    double operator[](Arc a) const { return amp_[a]; }
    double& operator[](Arc a) { return amp_[a]; }
    std::span<const double> amplitudes() const { return amp_; }

    bool same_graph(const WalkState& other) const { return graph_ == other.graph_; }

    double norm() const {
        KahanSum acc;
        for (double a : amp_) acc.add(a * a);
        return std::sqrt(acc.value());
    }

    /// Sum of all amplitudes (compensated).
    double amplitude_sum() const {
        KahanSum acc;
        for (double a : amp_) acc.add(a);
        return acc.value();
    }

    WalkState normalized() const {
        double n = norm();
        if (n == 0.0) throw std::invalid_argument("cannot normalize the zero state");
        WalkState out = *this;
        for (double& a : out.amp_) a /= n;
        return out;
    }

private:
    const Graph* graph_;
    std::vector<double> amp_;
};

/// Uniform superposition over all arcs, amplitude 1/sqrt(2|E|) each.
inline WalkState initial_state(const Graph& g) {
    return WalkState(g, 1.0 / std::sqrt(static_cast<double>(g.arc_count())));
}

inline void require_same_graph(const WalkState& s, const MarkedSet& m) {
    if (&s.graph() != &m.graph())
        throw std::invalid_argument("state and marked set are bound to different graphs");
}

inline double inner_product(const WalkState& a, const WalkState& b) {
    if (!a.same_graph(b))
        throw std::invalid_argument("inner product of states bound to different graphs");
    KahanSum acc;
    for (Arc i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
    return acc.value();
}

/// Probability of finding the particle at a marked vertex: total squared
/// amplitude on arcs leaving marked vertices.
inline double success_probability(const WalkState& s, const MarkedSet& m) {
    require_same_graph(s, m);
    const Graph& g = s.graph();
    KahanSum acc;
    for (Vertex v : m.members()) {
        Arc a0 = g.first_arc(v);
        for (Arc a = a0; a < a0 + g.degree(v); ++a) acc.add(s[a] * s[a]);
    }
    return acc.value();
}

// ---------------------------------------------------------------------------
// Operators. The in-place forms stream over vertices and edges; no operator
// matrix is ever materialized here.

/// Negate every amplitude on arcs leaving a marked vertex.
inline void apply_oracle_inplace(WalkState& s, const MarkedSet& m) {
    require_same_graph(s, m);
    const Graph& g = s.graph();
    for (Vertex v : m.members()) {
        Arc a0 = g.first_arc(v);
        for (Arc a = a0; a < a0 + g.degree(v); ++a) s[a] = -s[a];
    }
}

/// Per-vertex inversion about the mean directional amplitude.
inline void apply_coin_inplace(WalkState& s) {
    const Graph& g = s.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Arc a0 = g.first_arc(v);
        int d = g.degree(v);
        double sum = 0.0;
        for (Arc a = a0; a < a0 + d; ++a) sum += s[a];
        double twice_mean = 2.0 * sum / d;
        for (Arc a = a0; a < a0 + d; ++a) s[a] = twice_mean - s[a];
    }
}

/// Swap the amplitudes on (u,v) and (v,u) for every edge.
inline void apply_shift_inplace(WalkState& s) {
    const Graph& g = s.graph();
    for (Arc a = 0; a < g.arc_count(); ++a) {
        Arc r = g.reverse_arc(a);
        if (a < r) std::swap(s[a], s[r]);
    }
}

enum class StepVariant { grover, skw };

inline const char* step_variant_name(StepVariant v) {
    return v == StepVariant::grover ? "grover" : "skw";
}

/// One walk step. The grover variant is shift * coin * oracle; the skw
/// variant applies the coin at unmarked vertices and minus the identity at
/// marked vertices, then shifts.
struct StepOperator {
    StepVariant variant = StepVariant::grover;
    const MarkedSet* marked = nullptr;
};

inline StepOperator grover_step(const MarkedSet& m) { return {StepVariant::grover, &m}; }
inline StepOperator skw_step(const MarkedSet& m) { return {StepVariant::skw, &m}; }

inline void apply_step_inplace(WalkState& s, const StepOperator& op) {
    if (op.marked == nullptr) throw std::invalid_argument("step operator has no marked set");
    const MarkedSet& m = *op.marked;
    require_same_graph(s, m);
    if (op.variant == StepVariant::grover) {
        apply_oracle_inplace(s, m);
        apply_coin_inplace(s);
        apply_shift_inplace(s);
        return;
    }
    const Graph& g = s.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Arc a0 = g.first_arc(v);
        int d = g.degree(v);
        if (m.is_marked(v)) {
            for (Arc a = a0; a < a0 + d; ++a) s[a] = -s[a];
        } else {
            double sum = 0.0;
            for (Arc a = a0; a < a0 + d; ++a) sum += s[a];
            double twice_mean = 2.0 * sum / d;
            for (Arc a = a0; a < a0 + d; ++a) s[a] = twice_mean - s[a];
        }
    }
    apply_shift_inplace(s);
}

inline WalkState apply_oracle(WalkState s, const MarkedSet& m) {
    apply_oracle_inplace(s, m);
    return s;
}

inline WalkState apply_coin(WalkState s) {
    apply_coin_inplace(s);
    return s;
}

inline WalkState apply_shift(WalkState s) {
    apply_shift_inplace(s);
    return s;
}

inline WalkState apply_step(WalkState s, const StepOperator& op) {
    apply_step_inplace(s, op);
    return s;
}

inline WalkState apply_step(WalkState s, const MarkedSet& m, StepVariant variant) {
    apply_step_inplace(s, StepOperator{variant, &m});
    return s;
}

// ---------------------------------------------------------------------------
// Simulation

struct SimulationRecord {
    int step = 0;
    double success_probability = 0.0;
    double norm = 1.0;
};

/// Run the walk from the uniform state and record success probability and
/// norm at every step from 0 to `steps`. Norm drift beyond kNormDriftTol
/// indicates a numerical problem and aborts the run.
inline std::vector<SimulationRecord> simulate(const Graph& g, const MarkedSet& m,
                                              StepVariant variant, int steps) {
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    StepOperator op{variant, &m};
    WalkState s = initial_state(g);
    std::vector<SimulationRecord> series;
    series.reserve(static_cast<std::size_t>(steps) + 1);
    for (int t = 0;; ++t) {
        double norm = s.norm();
        if (std::abs(norm - 1.0) > kNormDriftTol)
            throw std::runtime_error("norm drift " + std::to_string(std::abs(norm - 1.0)) +
                                     " at step " + std::to_string(t) + " exceeds tolerance");
        series.push_back({t, success_probability(s, m), norm});
        if (t == steps) break;
        apply_step_inplace(s, op);
    }
    return series;
}

}  // namespace qwalk
