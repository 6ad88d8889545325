#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Raised when no suitable stationary state exists for the requested
/// configuration (unbalanced partite shortage sums, or a construction that
/// collapses to the zero vector). Distinct from precondition violations: an
/// existence failure is a legitimate result.
class ExistenceError : public std::runtime_error {
public:
    explicit ExistenceError(std::string msg) : std::runtime_error(std::move(msg)) {}
    ExistenceError(std::string msg, std::vector<Vertex> component, double x_sum, double y_sum)
        : std::runtime_error(std::move(msg)), component(std::move(component)),
          x_sum(x_sum), y_sum(y_sum) {}

    std::vector<Vertex> component;
    double x_sum = 0.0;
    double y_sum = 0.0;
};

// ---------------------------------------------------------------------------
// Uniform/flip split of directional states

/// Per-vertex split of the directional amplitudes into a uniform part (the
/// mean, shared by all outgoing arcs) and a flip part (the residuals, which
/// sum to zero). Reconstruction uniform_value[source(a)] + flip_part[a] is
/// exact.
struct DirectionalDecomposition {
    std::vector<double> uniform_value;  // per vertex
    std::vector<double> flip_part;      // per arc
};

inline DirectionalDecomposition decompose(const WalkState& s) {
    const Graph& g = s.graph();
    DirectionalDecomposition d;
    d.uniform_value.resize(g.vertex_count());
    d.flip_part.resize(g.arc_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Arc a0 = g.first_arc(v);
        int deg = g.degree(v);
        KahanSum acc;
        for (Arc a = a0; a < a0 + deg; ++a) acc.add(s[a]);
        double mean = acc.value() / deg;
        d.uniform_value[v] = mean;
        for (Arc a = a0; a < a0 + deg; ++a) d.flip_part[a] = s[a] - mean;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Stationarity conditions

/// Classification of an edge by the marked status of its endpoints.
enum class PairCase { unmarked_marked, both_unmarked, both_marked };

inline const char* pair_case_name(PairCase c) {
    switch (c) {
        case PairCase::unmarked_marked: return "P1";
        case PairCase::both_unmarked: return "P2";
        case PairCase::both_marked: return "P3";
    }
    return "?";
}

struct EdgeViolation {
    Vertex from = 0;  // for unmarked_marked edges, the unmarked endpoint
    Vertex to = 0;
    PairCase pair_case = PairCase::both_unmarked;
    double residual = 0.0;
};

struct StationaryReport {
    bool is_stationary = false;
    StepVariant variant = StepVariant::grover;
    double tolerance = kDefaultStationaryTol;
    double max_residual = 0.0;
    std::vector<EdgeViolation> violations;  // edges whose residual exceeds the tolerance
    double overlap_with_initial = 0.0;      // of the normalized state
};

/// Decide whether a state is fixed by the walk step by checking, per edge,
/// the relations between the uniform and flip components on its two arcs.
///
/// Writing the amplitude on (a,b) as sigma_a + phi_ab, the fixed-point
/// conditions of the grover step are
///   unmarked a, marked b:  sigma_a = phi_ba   and  phi_ab = -sigma_b
///   both unmarked:         sigma_a = sigma_b  and  phi_ab = -phi_ba
///   both marked:           sigma_a = -sigma_b and  phi_ab = phi_ba
/// and of the skw step
///   unmarked a, marked b:  sigma_a = 0        and  phi_ab = -(sigma_b + phi_ba)
///   both unmarked:         sigma_a = sigma_b  and  phi_ab = -phi_ba
///   both marked:           amplitude(a,b) = -amplitude(b,a)
/// The reported residual of an edge is the larger condition defect.
inline StationaryReport check_stationary(const WalkState& s, const MarkedSet& m,
                                         StepVariant variant,
                                         double tol = kDefaultStationaryTol) {
    require_same_graph(s, m);
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const Graph& g = s.graph();
    DirectionalDecomposition d = decompose(s);

    StationaryReport report;
    report.variant = variant;
    report.tolerance = tol;

    for (Arc a = 0; a < g.arc_count(); ++a) {
        Vertex u = g.arc_source(a);
        Vertex v = g.arc_target(a);
        if (u > v) continue;  // one visit per edge
        Arc r = g.reverse_arc(a);

        // Orient so that for mixed edges x is the unmarked endpoint.
        Vertex x = u, y = v;
        Arc axy = a, ayx = r;
        if (m.is_marked(u) && !m.is_marked(v)) {
            std::swap(x, y);
            std::swap(axy, ayx);
        }
        double sig_x = d.uniform_value[x], sig_y = d.uniform_value[y];
        double phi_xy = d.flip_part[axy], phi_yx = d.flip_part[ayx];

        PairCase pc;
        double r1, r2;
        bool x_marked = m.is_marked(x), y_marked = m.is_marked(y);
        if (!x_marked && y_marked) {
            pc = PairCase::unmarked_marked;
            if (variant == StepVariant::grover) {
                r1 = sig_x - phi_yx;
                r2 = phi_xy + sig_y;
            } else {
                r1 = sig_x;
                r2 = phi_xy + sig_y + phi_yx;
            }
        } else if (!x_marked && !y_marked) {
            pc = PairCase::both_unmarked;
            r1 = sig_x - sig_y;
            r2 = phi_xy + phi_yx;
        } else {
            pc = PairCase::both_marked;
            if (variant == StepVariant::grover) {
                r1 = sig_x + sig_y;
                r2 = phi_xy - phi_yx;
            } else {
                r1 = sig_x + phi_xy + sig_y + phi_yx;
                r2 = 0.0;
            }
        }
        double residual = std::max(std::abs(r1), std::abs(r2));
        report.max_residual = std::max(report.max_residual, residual);
        if (residual > tol) report.violations.push_back({x, y, pc, residual});
    }

    report.is_stationary = report.max_residual <= tol;
    double norm = s.norm();
    report.overlap_with_initial =
        norm > 0.0 ? s.amplitude_sum() / (std::sqrt(static_cast<double>(g.arc_count())) * norm)
                   : 0.0;
    return report;
}

/// Project a stationary state onto the maximal-overlap form: drop the flip
/// parts of unmarked vertices and the uniform parts of marked vertices, then
/// renormalize. The result is stationary, has uniform unmarked vertices, flip
/// marked vertices and symmetric edge amplitudes, and its overlap with the
/// uniform state is at least that of the normalized input.
inline WalkState optimize_stationary(const WalkState& s, const MarkedSet& m,
                                     double tol = kDefaultStationaryTol) {
    StationaryReport pre = check_stationary(s, m, StepVariant::grover, tol);
    if (!pre.is_stationary)
        throw std::invalid_argument("optimize_stationary requires a stationary input state "
                                    "(max residual " + std::to_string(pre.max_residual) + ")");
    const Graph& g = s.graph();
    DirectionalDecomposition d = decompose(s);
    WalkState out(g);
    for (Arc a = 0; a < g.arc_count(); ++a) {
        Vertex v = g.arc_source(a);
        out[a] = m.is_marked(v) ? d.flip_part[a] : d.uniform_value[v];
    }
    double n = out.norm();
    if (n <= kAlgebraTol * std::max(1.0, s.norm()))
        throw ExistenceError("no overlap-bearing stationary state from this input: "
                             "the projection annihilated the state");
    return out.normalized();
}

// ---------------------------------------------------------------------------
// Shortages

/// Shortage of each marked vertex under a fixed uniform assignment to the
/// unmarked components: s_v = -(sum of the amplitudes on v's edges to
/// unmarked neighbors), i.e. the value the edges inside the marked component
/// must supply for v to be a flip state.
struct ShortageMap {
    std::vector<double> unmarked_values;  // per unmarked component
    std::map<Vertex, double> shortage;    // per marked vertex

    double at(Vertex v) const {
        auto it = shortage.find(v);
        if (it == shortage.end())
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not marked");
        return it->second;
    }
};

inline ShortageMap compute_shortages(const Graph& g, const MarkedSet& m,
                                     std::span<const double> unmarked_values) {
    if (unmarked_values.size() != m.unmarked_components().size())
        throw std::invalid_argument("need one value per unmarked component (" +
                                    std::to_string(m.unmarked_components().size()) + ")");
    ShortageMap out;
    out.unmarked_values.assign(unmarked_values.begin(), unmarked_values.end());
    for (Vertex v : m.members()) {
        KahanSum acc;
        for (Vertex w : g.neighbors(v))
            if (!m.is_marked(w)) acc.add(unmarked_values[m.unmarked_component_of(w)]);
        out.shortage[v] = -acc.value();
    }
    return out;
}

inline ShortageMap compute_shortages(const Graph& g, const MarkedSet& m) {
    std::vector<double> ones(m.unmarked_components().size(), 1.0);
    return compute_shortages(g, m, ones);
}

// ---------------------------------------------------------------------------
// Edge assignments inside a marked component

/// Amplitudes for the edges inside one marked component, placed symmetrically
/// on both arcs. Every internal edge of the component has an entry.
struct EdgeAssignment {
    std::map<std::pair<Vertex, Vertex>, double> value;  // key (min,max)

    double at(Vertex u, Vertex v) const {
        auto it = value.find({std::min(u, v), std::max(u, v)});
        if (it == value.end())
            throw std::invalid_argument("no assignment for edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ")");
        return it->second;
    }
};

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> internal_edges(const Graph& g,
                                                             std::span<const Vertex> component) {
    auto mask = membership_mask(g, component);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v : component)
        for (Vertex w : g.neighbors(v))
            if (v < w && mask[w]) edges.emplace_back(v, w);
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace detail

/// Neutralize the shortages of a connected bipartite marked component.
///
/// Feasible exactly when the shortage sums of the two sides agree. The
/// assignment is built recursively: take the vertex with the largest |s|
/// (smallest id on ties), split the component by removing it, give the edges
/// toward each piece an equal share of that piece's signed shortage surplus,
/// fold the assigned amounts into the neighbors' shortages, and recurse into
/// the pieces. Each piece inherits balanced sums, so the recursion bottoms
/// out with everything neutralized; untouched edges keep amplitude 0.
inline EdgeAssignment assign_bipartite(const Graph& g, std::span<const Vertex> component,
                                       const Bipartition& bip, const ShortageMap& shortages,
                                       double balance_tol = kAlgebraTol) {
    if (!bip.valid) throw std::invalid_argument("assign_bipartite needs a valid bipartition");
    for (Vertex v : component)
        if (bip.side_of[v] == -1)
            throw std::invalid_argument("bipartition does not cover vertex " + std::to_string(v));

    std::map<Vertex, double> s;
    double scale = 1.0;
    for (Vertex v : component) {
        s[v] = shortages.at(v);
        scale = std::max(scale, std::abs(s[v]));
    }
    const double zero_tol = balance_tol * scale;

    KahanSum x_sum, y_sum;
    for (Vertex v : component) (bip.in_x(v) ? x_sum : y_sum).add(s[v]);
    if (std::abs(x_sum.value() - y_sum.value()) > zero_tol)
        throw ExistenceError("partite shortage sums differ: X side " +
                                 std::to_string(x_sum.value()) + " vs Y side " +
                                 std::to_string(y_sum.value()),
                             std::vector<Vertex>(component.begin(), component.end()),
                             x_sum.value(), y_sum.value());

    EdgeAssignment assignment;
    for (auto& e : detail::internal_edges(g, component)) assignment.value[e] = 0.0;

    std::vector<std::vector<Vertex>> pending{std::vector<Vertex>(component.begin(), component.end())};
    while (!pending.empty()) {
        std::vector<Vertex> part = std::move(pending.back());
        pending.pop_back();

        Vertex pivot = -1;
        double pivot_abs = zero_tol;
        for (Vertex v : part)
            if (std::abs(s[v]) > pivot_abs) {
                pivot = v;
                pivot_abs = std::abs(s[v]);
            }
        if (pivot == -1) continue;  // all shortages neutralized; edges stay 0

        // Pieces of the part after removing the pivot.
        std::vector<char> allowed(g.vertex_count(), 0);
        for (Vertex v : part) allowed[v] = 1;
        allowed[pivot] = 0;
        std::vector<std::vector<Vertex>> pieces;
        {
            std::vector<char> seen(g.vertex_count(), 0);
            for (Vertex v : part) {
                if (!allowed[v] || seen[v]) continue;
                std::vector<Vertex> piece;
                std::vector<Vertex> stack{v};
                seen[v] = 1;
                while (!stack.empty()) {
                    Vertex x = stack.back();
                    stack.pop_back();
                    piece.push_back(x);
                    for (Vertex w : g.neighbors(x))
                        if (allowed[w] && !seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                }
                std::sort(piece.begin(), piece.end());
                pieces.push_back(std::move(piece));
            }
        }

        const bool pivot_in_x = bip.in_x(pivot);
        for (auto& piece : pieces) {
            // Signed surplus of the piece, counted from the pivot's side.
            KahanSum surplus;
            for (Vertex v : piece) surplus.add(bip.in_x(v) == pivot_in_x ? s[v] : -s[v]);
            double b = surplus.value();

            std::vector<Vertex> joint;  // pivot's neighbors inside the piece
            std::set<Vertex> in_piece(piece.begin(), piece.end());
            for (Vertex w : g.neighbors(pivot))
                if (in_piece.count(w)) joint.push_back(w);
            if (joint.empty())
                throw std::invalid_argument("assign_bipartite requires a connected component");
            double share = -b / static_cast<double>(joint.size());
            for (Vertex w : joint) {
                assignment.value[{std::min(pivot, w), std::max(pivot, w)}] = share;
                s[w] -= share;
            }
            pending.push_back(std::move(piece));
        }
        s[pivot] = 0.0;
    }
    return assignment;
}

/// Neutralize the shortages of a connected non-bipartite marked component;
/// always succeeds.
///
/// Vertices outside a shortest odd cycle are peeled farthest-first, each
/// spreading its shortage equally over its remaining internal edges. Once
/// only the cycle is left, the alternating closed form fixes its edges;
/// chords keep amplitude 0.
inline EdgeAssignment assign_non_bipartite(const Graph& g, std::span<const Vertex> component,
                                           const ShortageMap& shortages) {
    OddCycle cycle = find_odd_cycle(g, component);  // rejects bipartite input

    std::map<Vertex, double> s;
    for (Vertex v : component) s[v] = shortages.at(v);

    EdgeAssignment assignment;
    for (auto& e : detail::internal_edges(g, component)) assignment.value[e] = 0.0;

    std::set<Vertex> remaining(component.begin(), component.end());
    std::set<Vertex> on_cycle(cycle.vertices.begin(), cycle.vertices.end());

    while (remaining.size() > on_cycle.size()) {
        std::vector<Vertex> current(remaining.begin(), remaining.end());
        Vertex u = eccentric_vertex_from_cycle(g, current, cycle);
        std::vector<Vertex> internal;
        for (Vertex w : g.neighbors(u))
            if (remaining.count(w)) internal.push_back(w);
        double share = s[u] / static_cast<double>(internal.size());
        for (Vertex w : internal) {
            assignment.value[{std::min(u, w), std::max(u, w)}] = share;
            s[w] -= share;
        }
        remaining.erase(u);
    }

    // Alternating closed form around the cycle: consecutive edge sums
    // telescope so that the two edges at each cycle vertex add up to exactly
    // its shortage.
    const int k = cycle.length();
    for (int i = 0; i < k; ++i) {
        Vertex a = cycle.vertices[i];
        Vertex b = cycle.vertices[(i + 1) % k];
        KahanSum acc;
        for (int j = 0; j < k; ++j) {
            int sign = ((i - j) % k + k) % k;
            acc.add((sign % 2 == 0 ? 0.5 : -0.5) * s[cycle.vertices[j]]);
        }
        assignment.value[{std::min(a, b), std::max(a, b)}] = acc.value();
    }
    return assignment;
}

// ---------------------------------------------------------------------------
// Full construction

struct ConstructResult {
    WalkState state;
    StationaryReport report;
};

namespace detail {

/// Replace a component's internal assignment by the minimum-norm solution of
/// the same neutralization constraints. The per-vertex sums B x (unsigned
/// incidence) are preserved while any null-space content of B is removed;
/// since null-space directions change the state's norm but not its overlap
/// with the uniform state, this is what makes the constructed state the
/// maximal-overlap one.
inline void reduce_to_min_norm(const Graph& g, std::span<const Vertex> component,
                               EdgeAssignment& assignment) {
    auto edges = internal_edges(g, component);
    if (edges.empty()) return;
    std::map<Vertex, int> local;
    int nv = 0;
    for (Vertex v : component) local[v] = nv++;
    Matrix incidence(nv, static_cast<int>(edges.size()));
    for (int j = 0; j < static_cast<int>(edges.size()); ++j) {
        incidence(local[edges[j].first], j) = 1.0;
        incidence(local[edges[j].second], j) = 1.0;
    }
    Matrix kernel = null_space(incidence, 1e-9);
    if (kernel.cols() == 0) return;
    std::vector<double> x(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) x[j] = assignment.value[edges[j]];
    std::vector<double> coeff = kernel.multiply_transposed(x);
    std::vector<double> shadow = kernel.multiply(coeff);
    for (std::size_t j = 0; j < edges.size(); ++j)
        assignment.value[edges[j]] = x[j] - shadow[j];
}

}  // namespace detail

/// Build the maximal-overlap stationary state of the grover step for the
/// given uniform values on the unmarked components. Arcs touching an unmarked
/// vertex carry that vertex's component value symmetrically; each marked
/// component's internal edges are assigned by the bipartite or non-bipartite
/// procedure and then reduced to the minimum-norm solution. Throws
/// ExistenceError when a bipartite component has unbalanced partite shortage
/// sums or when the construction collapses to the zero vector.
inline ConstructResult construct_optimal(const Graph& g, const MarkedSet& m,
                                         std::span<const double> unmarked_values,
                                         double tol = kDefaultStationaryTol) {
    if (&g != &m.graph())
        throw std::invalid_argument("marked set is bound to a different graph");
    ShortageMap shortages = compute_shortages(g, m, unmarked_values);

    WalkState state(g);
    for (Arc a = 0; a < g.arc_count(); ++a) {
        Vertex u = g.arc_source(a);
        Vertex v = g.arc_target(a);
        if (!m.is_marked(u))
            state[a] = unmarked_values[m.unmarked_component_of(u)];
        else if (!m.is_marked(v))
            state[a] = unmarked_values[m.unmarked_component_of(v)];
    }

    for (const auto& component : m.marked_components()) {
        Bipartition bip = bipartition(g, component);
        EdgeAssignment assignment =
            bip.valid ? assign_bipartite(g, component, bip, shortages)
                      : assign_non_bipartite(g, component, shortages);
        detail::reduce_to_min_norm(g, component, assignment);
        for (const auto& [edge, value] : assignment.value) {
            state[g.arc_index(edge.first, edge.second)] = value;
            state[g.arc_index(edge.second, edge.first)] = value;
        }
    }

    double norm = state.norm();
    if (norm <= kAlgebraTol)
        throw ExistenceError("constructed state has zero norm: "
                             "no overlap-bearing stationary state for this configuration");
    WalkState normalized = state.normalized();
    StationaryReport report = check_stationary(normalized, m, StepVariant::grover, tol);
    return {std::move(normalized), std::move(report)};
}

inline ConstructResult construct_optimal(const Graph& g, const MarkedSet& m,
                                         double tol = kDefaultStationaryTol) {
    std::vector<double> ones(m.unmarked_components().size(), 1.0);
    return construct_optimal(g, m, ones, tol);
}

// ---------------------------------------------------------------------------
// Balancing the unmarked components

/// Best-effort search for uniform values on the unmarked components that
/// balance the partite shortage sums of every bipartite marked component.
/// One linear equation per bipartite component; non-bipartite components
/// impose none. Returns values with no zero entries (normalized to largest
/// magnitude 1, first entry positive), or nullopt when every solution of the
/// linear system forces some component value to zero.
inline std::optional<std::vector<double>> balance_unmarked_assignment(const Graph& g,
                                                                      const MarkedSet& m) {
    const int k = static_cast<int>(m.unmarked_components().size());
    if (k == 0) return std::nullopt;  // with no unmarked vertices there is nothing to balance

    std::vector<std::vector<double>> rows;
    for (const auto& component : m.marked_components()) {
        Bipartition bip = bipartition(g, component);
        if (!bip.valid) continue;
        // Shortage sums are linear in the component values: the X-vs-Y
        // difference has one coefficient per unmarked component, the count of
        // X-side edges into it minus the count of Y-side edges.
        std::vector<double> row(k, 0.0);
        for (Vertex v : component)
            for (Vertex w : g.neighbors(v))
                if (!m.is_marked(w)) row[m.unmarked_component_of(w)] += bip.in_x(v) ? 1.0 : -1.0;
        rows.push_back(std::move(row));
    }

    Matrix eq(static_cast<int>(rows.size()), k);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < k; ++j) eq(i, j) = rows[i][j];

    Matrix kernel = null_space(eq, 1e-9);
    const int d = kernel.cols();
    if (d == 0) return std::nullopt;

    // A component whose kernel row vanishes is forced to zero in every solution.
    for (int i = 0; i < k; ++i) {
        double row_norm = 0.0;
        for (int j = 0; j < d; ++j) row_norm += kernel(i, j) * kernel(i, j);
        if (std::sqrt(row_norm) <= 1e-12) return std::nullopt;
    }

    // Generic combinations avoid the remaining zero sets; scan deterministic
    // coefficient vectors (1, t, t^2, ...) until all entries are nonzero.
    std::vector<double> values(k);
    for (int t = 1; t <= k * d + 1; ++t) {
        for (int i = 0; i < k; ++i) {
            double acc = 0.0, power = 1.0;
            for (int j = 0; j < d; ++j) {
                acc += power * kernel(i, j);
                power *= t;
            }
            values[i] = acc;
        }
        double max_abs = 0.0, min_abs = std::numeric_limits<double>::max();
        for (double x : values) {
            max_abs = std::max(max_abs, std::abs(x));
            min_abs = std::min(min_abs, std::abs(x));
        }
        if (max_abs > 0.0 && min_abs > 1e-9 * max_abs) {
            for (double& x : values) x /= max_abs;
            if (values[0] < 0.0)
                for (double& x : values) x = -x;
            return values;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Orthogonality of skw stationary states

struct SkwStateReport {
    double overlap = 0.0;                // |<uniform initial | state>|
    double antisymmetry_residual = 0.0;  // max |amp(u,v) + amp(v,u)| over edges
    double stationarity_residual = 0.0;
};

struct SkwOrthogonalityReport {
    /// The orthogonality guarantee needs a connected graph with at least one
    /// marked vertex; outside that regime the report only describes, it does
    /// not certify.
    bool guarantee_applies = false;
    std::vector<SkwStateReport> states;
};

inline SkwOrthogonalityReport skw_orthogonality_check(const Graph& g, const MarkedSet& m,
                                                      std::span<const WalkState> states,
                                                      double tol = kDefaultStationaryTol) {
    SkwOrthogonalityReport out;
    out.guarantee_applies = !m.empty() && is_connected(g);
    WalkState psi0 = initial_state(g);
    for (std::size_t i = 0; i < states.size(); ++i) {
        const WalkState& s = states[i];
        StationaryReport pre = check_stationary(s, m, StepVariant::skw, tol);
        if (!pre.is_stationary)
            throw std::invalid_argument("state " + std::to_string(i) +
                                        " is not stationary under the skw step (max residual " +
                                        std::to_string(pre.max_residual) + ")");
        SkwStateReport r;
        r.stationarity_residual = pre.max_residual;
        r.overlap = std::abs(inner_product(psi0, s));
        for (Arc a = 0; a < g.arc_count(); ++a) {
            Arc rev = g.reverse_arc(a);
            if (a < rev)
                r.antisymmetry_residual =
                    std::max(r.antisymmetry_residual, std::abs(s[a] + s[rev]));
        }
        out.states.push_back(r);
    }
    return out;
}

}  // namespace qwalk
