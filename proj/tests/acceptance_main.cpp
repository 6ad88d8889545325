// Acceptance suite: runs every built-in check and prints one pass/fail line
// per criterion. Exits nonzero if any check fails.
//
// Criterion 9's first clause (adjacent-pair success probability bounded by 3x
// its initial value) is known to be unattainable: exact arithmetic already
// gives p(2) = 4*p(0) on any torus, because the coin at each unmarked
// neighbor of a marked vertex inverts (-a, a, a, a) about its mean a/2 and
// hands 2a to the shift. The check is implemented as stated and reports the
// measured ratios; see README.md for the analysis.

#include <cstdio>

#include "qwalk/acceptance.hpp"

int main() {
    auto results = qwalk::acceptance::run_all();
    int failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        std::printf("%s  %2d  %-38s  %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
    }
    std::printf("%d/%zu acceptance checks passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
