// Minimal library walkthrough: build a graph, balance the unmarked
// components, construct the maximal-overlap stationary state and check it.

#include <cstdio>

#include "qwalk/serialize.hpp"
#include "qwalk/stationary.hpp"

int main() {
    using namespace qwalk;

    // Adjacent marked pair whose endpoints lean on two different unmarked
    // components; the balance solver finds uniform values making a stationary
    // state possible.
    Graph g = build_graph({{0, 1},
                           {0, 2}, {0, 3}, {2, 3},
                           {1, 4}, {1, 5}, {1, 6}, {4, 5}, {5, 6}});
    MarkedSet m(g, {0, 1});

    auto values = balance_unmarked_assignment(g, m);
    if (!values) {
        std::printf("no balanced assignment exists\n");
        return 1;
    }
    std::printf("balanced component values:");
    for (double v : *values) std::printf(" %g", v);
    std::printf("\n");

    ConstructResult result = construct_optimal(g, m, *values);
    std::printf("stationary: %s  (max residual %.3g)\n",
                result.report.is_stationary ? "yes" : "no", result.report.max_residual);
    std::printf("overlap with the uniform start: %.6f\n", result.report.overlap_with_initial);
    std::printf("%s\n", state_to_json(result.state, m, true).dump(2).c_str());
    return 0;
}
