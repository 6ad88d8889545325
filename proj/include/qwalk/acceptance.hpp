#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/fixtures.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/stationary.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::acceptance {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

class Check {
public:
    explicit Check(std::ostringstream& out) : out_(out) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            failed_ = true;
            out_ << " | FAILED: " << what;
        }
    }
    bool failed() const { return failed_; }

private:
    std::ostringstream& out_;
    bool failed_ = false;
};

struct Peak {
    int step = 0;
    double probability = 0.0;
};

/// Earliest near-maximal peak of the success probability. The raw series
/// oscillates with period ~2 on top of a smooth envelope and revisits
/// comparable peaks periodically, so the peak is located on a 3-step moving
/// average (earliest local maximum within 5% of the best smoothed value) and
/// its height is read off the raw series next to that point.
inline Peak first_peak(const std::vector<SimulationRecord>& series) {
    const std::size_t n = series.size();
    auto raw = [&](std::size_t i) { return series[i].success_probability; };
    if (n < 3) {
        Peak p;
        for (std::size_t i = 0; i < n; ++i)
            if (raw(i) >= p.probability) p = {series[i].step, raw(i)};
        return p;
    }
    std::vector<double> smooth(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) smooth[i] = (raw(i - 1) + raw(i) + raw(i + 1)) / 3.0;
    double best = 0.0;
    for (double q : smooth) best = std::max(best, q);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (smooth[i] < 0.95 * best) continue;
        if (smooth[i] >= smooth[i - 1] && (i + 2 == n || smooth[i] >= smooth[i + 1])) {
            std::size_t at = i;
            for (std::size_t j = i - 1; j <= i + 1; ++j)
                if (raw(j) > raw(at)) at = j;
            return {series[at].step, raw(at)};
        }
    }
    Peak p;
    for (std::size_t i = 0; i < n; ++i)
        if (raw(i) >= p.probability) p = {series[i].step, raw(i)};
    return p;
}

}  // namespace detail

// --------------------------------------------------------------------------
// Criterion 1: the torus pair construction reproduces the known optimal
// pattern (all non-pair arcs equal, the two facing pair arcs at -3x) and
// verifies stationary at 1e-10.
inline CheckResult check_torus_pair_state() {
    std::ostringstream out;
    detail::Check chk(out);
    auto [g, marked] = fixtures::torus_adjacent_pair();
    MarkedSet m(g, marked);
    ConstructResult result = construct_optimal(g, m);

    double base = result.state[g.arc_index(0, 1)];
    chk.expect(base > 0.0, "reference amplitude should be positive");
    Arc pair_a = g.arc_index(6, 7), pair_b = g.arc_index(7, 6);
    double worst = 0.0;
    for (Arc a = 0; a < g.arc_count(); ++a) {
        double want = (a == pair_a || a == pair_b) ? -3.0 * base : base;
        worst = std::max(worst, std::abs(result.state[a] - want));
    }
    out << "pattern deviation " << worst << ", residual " << result.report.max_residual;
    chk.expect(worst <= 1e-10, "amplitudes deviate from the pair pattern");
    chk.expect(result.report.is_stationary && result.report.max_residual <= 1e-10,
               "constructed state not stationary at 1e-10");
    return {1, "torus pair optimal state", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 2: on every small fixture the construction's overlap equals the
// norm of the spectral projection of the initial state, within 1e-8.
inline CheckResult check_optimality_cross_check() {
    std::ostringstream out;
    detail::Check chk(out);
    std::vector<std::pair<std::string, fixtures::MarkedGraph>> cases;
    cases.emplace_back("torus pair", fixtures::torus_adjacent_pair());
    cases.emplace_back("triangle host", fixtures::marked_triangle_host());
    cases.emplace_back("bipartite host", fixtures::bipartite_component_host());
    cases.emplace_back("simplex clique", fixtures::simplex_marked_clique());
    for (auto& [name, fixture] : cases) {
        const Graph& g = fixture.graph;
        MarkedSet m(g, fixture.marked);
        ConstructResult built = construct_optimal(g, m);
        double overlap = std::abs(built.report.overlap_with_initial);
        EigenspaceBasis basis = one_eigenspace(materialize(g, m, StepVariant::grover));
        double projected = project_initial(basis, g).norm;
        out << name << ": overlap " << overlap << " vs projection " << projected << "; ";
        chk.expect(std::abs(overlap - projected) <= 1e-8,
                   name + " overlap disagrees with the spectral projection");
    }
    return {2, "optimality cross-check", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 3: the per-edge stationarity conditions agree with the direct
// fixed-point test on 1000 randomized instances, for both step variants.
inline CheckResult check_condition_equivalence() {
    std::ostringstream out;
    detail::Check chk(out);
    std::mt19937 rng(0xACC3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double tol = 1e-10;
    int disagreements = 0;

    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = fixtures::random_connected_graph(rng, 2, 12, 0.35);
        MarkedSet m(g, fixtures::random_marked_set(rng, g, 0.3, false));
        for (StepVariant variant : {StepVariant::grover, StepVariant::skw}) {
            WalkState s(g);
            bool want_stationary = trial % 2 == 1;
            if (want_stationary) {
                EigenspaceBasis basis = one_eigenspace(materialize(g, m, variant));
                if (basis.dimension() > 0) {
                    std::vector<double> coeff(basis.dimension());
                    for (double& c : coeff) c = gauss(rng);
                    s = WalkState::from_amplitudes(g, basis.vectors.multiply(coeff));
                } else {
                    want_stationary = false;
                }
            }
            if (!want_stationary)
                for (Arc a = 0; a < g.arc_count(); ++a) s[a] = gauss(rng);

            bool by_conditions = check_stationary(s, m, variant, tol).is_stationary;
            WalkState stepped = apply_step(s, m, variant);
            double fp_residual = 0.0;
            for (Arc a = 0; a < g.arc_count(); ++a)
                fp_residual = std::max(fp_residual, std::abs(stepped[a] - s[a]));
            if (by_conditions != (fp_residual <= tol)) ++disagreements;
        }
    }
    out << disagreements << " disagreements in 1000 trials x 2 variants";
    chk.expect(disagreements == 0, "condition check disagrees with the fixed-point test");
    return {3, "stationarity condition equivalence", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 4: unbalanced bipartite configurations are detected as existence
// failures, and on the two-vertex path the spectral projection is zero.
inline CheckResult check_bipartite_failure_detection() {
    std::ostringstream out;
    detail::Check chk(out);
    std::vector<std::pair<std::string, fixtures::MarkedGraph>> cases;
    cases.emplace_back("two-vertex path", fixtures::two_vertex_path_marked());
    cases.emplace_back("unequal-degree pair", fixtures::unequal_degree_pair_host());
    for (auto& [name, fixture] : cases) {
        const Graph& g = fixture.graph;
        MarkedSet m(g, fixture.marked);
        bool failed_to_exist = false;
        try {
            construct_optimal(g, m);
        } catch (const ExistenceError&) {
            failed_to_exist = true;
        }
        chk.expect(failed_to_exist, name + " should be an existence failure");
        chk.expect(!balance_unmarked_assignment(g, m).has_value(),
                   name + " balance should be infeasible");
    }
    {
        auto fixture = fixtures::two_vertex_path_marked();
        MarkedSet m(fixture.graph, fixture.marked);
        EigenspaceBasis basis = one_eigenspace(materialize(fixture.graph, m, StepVariant::grover));
        double norm = project_initial(basis, fixture.graph).norm;
        out << "two-vertex projection norm " << norm;
        chk.expect(norm <= 1e-9, "two-vertex path should have zero projection");
    }
    return {4, "bipartite existence failure detection", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 5: the non-bipartite assignment never fails and always
// neutralizes every shortage, over 500 random components.
inline CheckResult check_non_bipartite_totality() {
    std::ostringstream out;
    detail::Check chk(out);
    std::mt19937 rng(0xACC5);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = fixtures::random_connected_non_bipartite_graph(rng, 3, 15, 0.35);
        std::vector<Vertex> component(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) component[v] = v;
        ShortageMap shortages;
        for (Vertex v : component) shortages.shortage[v] = uniform(rng);

        EdgeAssignment assignment = assign_non_bipartite(g, component, shortages);
        for (Vertex v : component) {
            KahanSum sum;
            for (Vertex w : g.neighbors(v)) sum.add(assignment.at(v, w));
            worst = std::max(worst, std::abs(sum.value() - shortages.at(v)));
        }
    }
    out << "max neutralization defect " << worst << " over 500 components";
    chk.expect(worst <= 1e-10, "some shortage was not neutralized");
    return {5, "non-bipartite assignment totality", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 6: the two-component pair balances to values in ratio 3:2 and the
// resulting construction is stationary.
inline CheckResult check_split_support_balance() {
    std::ostringstream out;
    detail::Check chk(out);
    auto [g, marked] = fixtures::pair_with_split_support();
    MarkedSet m(g, marked);
    auto values = balance_unmarked_assignment(g, m);
    chk.expect(values.has_value(), "balance should be feasible");
    if (values) {
        out << "values";
        for (double v : *values) out << ' ' << v;
        chk.expect(values->size() == 2, "expected two unmarked components");
        if (values->size() == 2)
            chk.expect(std::abs((*values)[0] / (*values)[1] - 1.5) <= 1e-12,
                       "component values not in ratio 3:2");
        ConstructResult built = construct_optimal(g, m, *values);
        out << "; residual " << built.report.max_residual;
        chk.expect(built.report.is_stationary, "balanced construction should verify stationary");
    }
    return {6, "split-support balance", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 7: every skw stationary basis vector on random marked connected
// graphs is orthogonal to the initial state and antisymmetric per edge.
inline CheckResult check_skw_orthogonality() {
    std::ostringstream out;
    detail::Check chk(out);
    std::mt19937 rng(0xACC7);
    double worst_overlap = 0.0, worst_antisym = 0.0;
    int vectors = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = fixtures::random_connected_graph(rng, 2, 10, 0.4);
        MarkedSet m(g, fixtures::random_marked_set(rng, g, 0.35, true));
        EigenspaceBasis basis = one_eigenspace(materialize(g, m, StepVariant::skw));
        WalkState psi0 = initial_state(g);
        for (int j = 0; j < basis.dimension(); ++j) {
            ++vectors;
            KahanSum overlap;
            for (Arc a = 0; a < g.arc_count(); ++a) overlap.add(psi0[a] * basis.vectors(a, j));
            worst_overlap = std::max(worst_overlap, std::abs(overlap.value()));
            for (Arc a = 0; a < g.arc_count(); ++a) {
                Arc r = g.reverse_arc(a);
                if (a < r)
                    worst_antisym = std::max(
                        worst_antisym, std::abs(basis.vectors(a, j) + basis.vectors(r, j)));
            }
        }
    }
    out << vectors << " basis vectors; max overlap " << worst_overlap << ", max antisymmetry defect "
        << worst_antisym;
    chk.expect(worst_overlap <= 1e-9, "a stationary basis vector overlaps the initial state");
    chk.expect(worst_antisym <= 1e-8, "a stationary basis vector is not antisymmetric");
    return {7, "skw orthogonality", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 8: complete-graph dynamics at N=256 hit the known peak heights
// and times for one and two marked vertices under both step variants.
inline CheckResult check_complete_graph_dynamics() {
    std::ostringstream out;
    detail::Check chk(out);
    Graph g = complete_graph(256);
    const int window = static_cast<int>(std::ceil(2.0 * 3.14159265358979 * 16.0));

    {
        MarkedSet m(g, {0});
        auto series = simulate(g, m, StepVariant::grover, window);
        auto peak = detail::first_peak(series);
        out << "k=1 grover peak " << peak.probability << " at " << peak.step << "; ";
        chk.expect(peak.probability >= 0.40 && peak.probability <= 0.60,
                   "k=1 grover peak height out of range");
        chk.expect(std::abs(peak.step - 18) <= 2, "k=1 grover peak time out of range");
    }
    {
        MarkedSet m(g, {0, 1});
        auto series = simulate(g, m, StepVariant::grover, window);
        auto peak = detail::first_peak(series);
        out << "k=2 grover peak " << peak.probability << " at " << peak.step << "; ";
        chk.expect(std::abs(peak.probability - 8.0 / 9.0) <= 0.06,
                   "k=2 grover peak height out of range");
        chk.expect(std::abs(peak.step - 21) <= 2, "k=2 grover peak time out of range");
    }
    {
        MarkedSet m(g, {0, 1});
        auto series = simulate(g, m, StepVariant::skw, window);
        auto peak = detail::first_peak(series);
        out << "k=2 skw peak " << peak.probability << " at " << peak.step;
        chk.expect(peak.probability >= 0.40 && peak.probability <= 0.60,
                   "k=2 skw peak height out of range");
        chk.expect(std::abs(peak.step - 13) <= 2, "k=2 skw peak time out of range");
    }
    return {8, "complete-graph dynamics", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 9: on the 20x20 torus an adjacent marked pair stays trapped near
// its initial success probability while a single marked vertex does not.
inline CheckResult check_torus_trapping() {
    std::ostringstream out;
    detail::Check chk(out);
    Graph g = torus_graph(20, 20);
    const double n = static_cast<double>(g.vertex_count());
    const int steps = static_cast<int>(10.0 * std::sqrt(n * std::log(n)));

    auto max_probability = [](const std::vector<SimulationRecord>& series) {
        double best = 0.0;
        for (const auto& r : series) best = std::max(best, r.success_probability);
        return best;
    };

    MarkedSet pair(g, {6, 7});
    auto pair_series = simulate(g, pair, StepVariant::grover, steps);
    double pair_initial = pair_series.front().success_probability;
    double pair_max = max_probability(pair_series);
    out << "pair max/initial " << pair_max / pair_initial;

    MarkedSet single(g, {6});
    auto single_series = simulate(g, single, StepVariant::grover, steps);
    double single_initial = single_series.front().success_probability;
    double single_max = max_probability(single_series);
    out << ", single max/initial " << single_max / single_initial << " over " << steps << " steps";

    chk.expect(pair_max < 3.0 * pair_initial, "marked pair escaped the trapped regime");
    chk.expect(single_max > 10.0 * single_initial, "single marked vertex failed to amplify");
    return {9, "torus trapping vs amplification", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------
// Criterion 10: the squared overlap of the constructed pair state on an RxC
// torus matches its closed form (4N-8)^2 / (4N(4N+16)), N = RC.
inline CheckResult check_torus_overlap_closed_form() {
    std::ostringstream out;
    detail::Check chk(out);
    struct Case {
        int rows, cols;
        Vertex a, b;
    };
    for (const Case& c : {Case{4, 3, 6, 7}, Case{10, 10, 0, 1}, Case{20, 20, 0, 1}}) {
        Graph g = torus_graph(c.rows, c.cols);
        MarkedSet m(g, {c.a, c.b});
        ConstructResult built = construct_optimal(g, m);
        double overlap = built.report.overlap_with_initial;
        double n = static_cast<double>(c.rows) * c.cols;
        double expected = (4 * n - 8) * (4 * n - 8) / (4 * n * (4 * n + 16));
        double defect = std::abs(overlap * overlap - expected);
        out << c.rows << "x" << c.cols << " defect " << defect << "; ";
        chk.expect(defect <= 1e-12, "squared overlap deviates from the closed form");
    }
    return {10, "torus overlap closed form", !chk.failed(), out.str(), 0.0};
}

// --------------------------------------------------------------------------

struct Criterion {
    int id;
    std::string name;
    std::function<CheckResult()> run;
    double time_limit_seconds;
};

inline const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "torus pair optimal state", check_torus_pair_state, 1.0},
        {2, "optimality cross-check", check_optimality_cross_check, 30.0},
        {3, "stationarity condition equivalence", check_condition_equivalence, 60.0},
        {4, "bipartite existence failure detection", check_bipartite_failure_detection, 5.0},
        {5, "non-bipartite assignment totality", check_non_bipartite_totality, 30.0},
        {6, "split-support balance", check_split_support_balance, 1.0},
        {7, "skw orthogonality", check_skw_orthogonality, 120.0},
        {8, "complete-graph dynamics", check_complete_graph_dynamics, 60.0},
        {9, "torus trapping vs amplification", check_torus_trapping, 120.0},
        {10, "torus overlap closed form", check_torus_overlap_closed_form, 5.0},
    };
    return list;
}

inline CheckResult run_one(const Criterion& criterion) {
    auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
        result = criterion.run();
    } catch (const std::exception& e) {
        result = {criterion.id, criterion.name, false, std::string("exception: ") + e.what(), 0.0};
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.seconds > criterion.time_limit_seconds) {
        result.passed = false;
        result.detail += " [exceeded time limit " + std::to_string(criterion.time_limit_seconds) + "s]";
    }
    return result;
}

inline std::vector<CheckResult> run_all() {
    std::vector<CheckResult> results;
    for (const Criterion& c : criteria()) results.push_back(run_one(c));
    return results;
}

}  // namespace qwalk::acceptance
