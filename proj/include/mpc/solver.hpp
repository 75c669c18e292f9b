#pragma once

#include <string>
#include <vector>

#include "mpc/components.hpp"
#include "mpc/graph.hpp"

namespace mpc {

// Both ratio tests compare against the positive root r of 10r^2 - 15r - 7 = 0,
// roughly 1.874. Clearing denominators turns each into "linear form vs
// sqrt(505) times a nonnegative integer", which one guarded squaring decides
// exactly; 505 is not a square, so ties are impossible.

// 7a > 5rb for census totals a and b; requires b >= 1.
bool census_ratio_exceeds(long long a, long long b);

// opt <= r * alg, the end-to-end guarantee checked by the oracle harness.
bool ratio_within_bound(long long opt, long long alg);

enum class Branch {
    OutputComponents,  // no critical component, or the census ratio beats the threshold
    Recurse,           // strip critical 2-anchors with their satellites, solve the rest
};

Branch census_and_branch(const Census& census);

struct SolveStats {
    int depth = 0;        // deepest recursion level reached, 0 when none
    long long moves = 0;  // rescue moves summed over all levels
};

// Union of the per-component solutions, paths split to orders 4..7. Isolated
// bad components and vertices outside H contribute nothing.
Solution assemble_component_solution(const HcState& st);

// For every critical 2-anchor v: keep its anchor path, drop v and its two
// satellites from the graph, and solve the remainder recursively. Requires
// the recurse branch for the given census.
Solution recurse_and_combine(const Graph& g, const HcState& st, const Census& census,
                             SolveStats* stats = nullptr);

// The full algorithm: exact search up to 8 vertices, otherwise grow H, pick
// the cover, run the rescue loop to a fixpoint, and branch on the census.
// A trace sink, when given, receives one line per phase event and rescue
// move, prefixed with the recursion level.
Solution solve(const Graph& g);
Solution solve(const Graph& g, SolveStats& stats, std::vector<std::string>* trace = nullptr);

}  // namespace mpc
