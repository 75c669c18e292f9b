#pragma once

#include <utility>
#include <vector>

#include "mpc/exact.hpp"
#include "mpc/graph.hpp"
#include "mpc/phase1.hpp"

namespace mpc {

// Components of H plus the cover C, decomposed into a center element and its
// satellite elements. The contracted view of such a component is a star (an
// edge counts as a one-satellite star whose bad endpoint is the satellite).
// Isolated bad components are excluded from analysis altogether.

enum class CenterKind { FivePath, Edge, Star };

struct Satellite {
    int comp = -1;    // H component id
    int anchor = -1;  // supporting anchor vertex inside the center element
    int attach = -1;  // cover-edge endpoint inside this satellite
    std::vector<int> kept;  // vertices surviving the size pruning, ascending
};

struct HcComp {
    bool composite = false;  // false: an isolated 5-path
    CenterKind kind = CenterKind::FivePath;
    int center = -1;             // H component id of the center element
    std::vector<int> anchors;    // ordered along the center element
    std::vector<int> support;    // per anchor: number of satellites it supports
    int star_mate = -1;          // star center only: M-mate of the single anchor
    std::vector<Satellite> sats;  // ascending by component id
    std::vector<int> vertices;    // ascending

    int s = 0;    // vertices shared with the core matching
    int opt = 0;  // path packing optimum using only this component's edges

    // raw_critical is the bare ratio test 11*s >= 14*opt. A raw-critical
    // component whose own structure lets a satellite re-anchor onto a
    // 1-anchor while keeping the ratio is downgraded: it gets a better
    // solution through one extra graph edge and counts as neither critical
    // nor responsible afterwards.
    bool raw_critical = false;
    bool critical = false;
    bool critical_and_responsible = false;
    bool responsible = false;
    std::vector<char> anchor_responsible;  // per anchor, against final critical pool
    int witness_sat = -1;     // critical_and_responsible: index into sats
    int witness_from = -1;    // the graph edge used for the better solution
    int witness_to = -1;

    int r_count = 0;     // 2-anchors plus responsible 1-anchors
    int opt_value = 0;   // value assembled for this component (>= opt)
    Solution opt_solution;  // paths achieving opt_value, in graph ids

    // Per anchor: longest path leaving through one supported satellite
    // (3 or 4 vertices; just the anchor when it supports none), and for
    // 2-anchors the longest path through both satellites (5 to 7 vertices).
    std::vector<VertexPath> q_paths;
    std::vector<VertexPath> p_paths;
};

struct HcState {
    const Workspace* ws = nullptr;
    const HComponents* hc = nullptr;
    std::vector<char> in_core;  // per vertex: covered by the core matching

    std::vector<HcComp> comps;
    std::vector<int> isolated_bad;  // H component ids, ascending

    std::vector<int> comp_index;   // vertex -> index into comps, else -1
    std::vector<int> anchor_rank;  // vertex -> position among its comp's anchors, else -1
    std::vector<int> sat_rank;     // vertex -> position among its comp's sats, else -1

    int n0 = 0;   // 0-anchors (isolated 5-paths contribute five each)
    int ncc = 0;  // raw-critical components
    int nc = 0;   // components over V(H), isolated bad ones included
    long long potential() const { return n0 + ncc - 3LL * nc; }
};

// Full decomposition plus classification for the given cover. The core
// matching only feeds the per-component vertex counts; it never changes
// during the rescue loop.
HcState analyze_components(const Workspace& ws, const HComponents& hc, const EdgeSet& cover,
                           const EdgeSet& core);

// Ratio test of the target component after satellite sat_comp re-anchors
// onto anchor_vertex through the edge {anchor_vertex, attach}. Works for a
// satellite already inside the target (re-anchoring) and for one arriving
// from another component; the target may also be an isolated 5-path.
bool move_keeps_raw_critical(const HcState& st, int target, int anchor_vertex, int sat_comp,
                             int attach);

struct Census {
    long long k_count[6] = {0, 0, 0, 0, 0, 0};  // components by r_count
    long long k1c = 0, k2c = 0;                 // critical ones among r_count 1 / 2
    long long a = 0;                            // sum over i of i * k_count[i]
    long long b = 0;                            // k1c + 2*k2c
    std::vector<int> r_vertices;  // 2-anchors and responsible 1-anchors, ascending
    std::vector<int> rc;          // 2-anchors of critical components, ascending
    std::vector<int> uc;          // vertices of their satellites, ascending
};

Census build_census(const HcState& st);

}  // namespace mpc
