#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mpc/graph.hpp"
#include "mpc/phase1.hpp"

namespace mpc {

// Candidate edges for the degree-bounded cover built after the growth phase.
// A component of H that is not a 5-path is "bad"; a candidate edge joins two
// distinct H components and touches at least one bad one. A bad component is
// saturated by a cover when some cover edge touches it.
struct SaturationInstance {
    HComponents hc;
    std::vector<int> bad_ids;    // bad component ids, ascending
    std::vector<int> bad_index;  // component id -> index in bad_ids, else -1
    std::vector<std::pair<int, int>> edges;  // candidate edges, ascending
};

SaturationInstance build_saturation_instance(const Workspace& ws);

// Degree-constrained selection problem whose maximum weight equals the
// largest number of bad components a single cover can saturate. Vertices are
// the original ones followed by three helpers per bad component: two
// absorbers that soak up the degree the component's vertices cannot place on
// candidate edges, and a prize vertex whose unit-weight edges become
// selectable exactly when the component is saturated. Every vertex v must
// end with degree in [f[v], g[v]].
struct FactorInstance {
    int n_orig = 0;  // original vertex count; helper ids follow
    int n = 0;       // total vertex count
    std::vector<std::pair<int, int>> edges;  // candidates, absorber edges, prize edges
    std::vector<int> f, g;
    std::size_t n_candidate = 0;  // edges[0..n_candidate) come from the graph
    std::size_t prize_begin = 0;  // edges[prize_begin..] have weight 1, rest 0
    std::vector<int> absorb_a, absorb_b, prize;  // helper ids per bad component
};

FactorInstance build_factor_instance(const SaturationInstance& si);

struct FactorSolution {
    std::vector<char> selected;  // per edge of the instance
    int weight = 0;
};

FactorSolution solve_max_weight_fg_factor(const FactorInstance& fi);

// Cover edges kept after discarding selections that no saturated component
// needs, plus the per-component saturation flags.
struct CoverResult {
    EdgeSet cover;
    std::vector<char> saturated;  // per bad_ids index
    int saturated_count = 0;
};

CoverResult extract_and_prune_cover(const SaturationInstance& si, const FactorInstance& fi,
                                    const FactorSolution& sol);

// Matching edges whose component survives the cover phase: all edges inside
// 5-paths plus the edges of saturated bad components. Their endpoints are the
// vertices the final solution is guaranteed to keep covered.
EdgeSet compute_core_matching(const Workspace& ws, const SaturationInstance& si,
                              const CoverResult& cover);

struct CoverOutcome {
    SaturationInstance sat;
    FactorInstance factor;
    FactorSolution sol;
    CoverResult cover;
    EdgeSet core;
};

CoverOutcome run_cover(const Workspace& ws);

}  // namespace mpc
