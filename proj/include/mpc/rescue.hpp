#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpc/components.hpp"
#include "mpc/graph.hpp"
#include "mpc/phase1.hpp"

namespace mpc {

// A move re-anchors one satellite of a critical component through a single
// graph edge {v, v2}. The satellite keeps its vertices; only rescue edges
// change, and every bad component stays saturated, so the cover keeps its
// weight.
enum class MoveKind {
    MoveToAnchor,         // v2 is a 0-anchor, or a 1-anchor whose component
                          // stays clear of the critical census after receiving
    MoveToLoneSatellite,  // v2 sits in the only satellite of an edge or star
                          // center; that satellite becomes the new center
    MergeSatellites,      // v2 sits in a satellite that cannot take over its
                          // center; both rescue edges collapse into {v, v2},
                          // splitting off a fresh two-element component
};

const char* move_kind_name(MoveKind kind);

struct RescueMove {
    MoveKind kind = MoveKind::MoveToAnchor;
    int v = -1;           // inside the moving satellite
    int v2 = -1;          // target endpoint, outside the moving element
    int sat_comp = -1;    // H component id of the moving satellite
    int other_comp = -1;  // H component id of the element holding v2, else -1
};

// Progress measure forcing termination: 0-anchors plus raw-critical
// components minus three times the component count over V(H). Every move
// lowers g by at least one, and -3n <= g <= 2n.
struct Potential {
    int n0 = 0;
    int ncc = 0;
    int nc = 0;
    long long g = 0;
};

Potential potential_of(const HcState& st);

// The lowest pair (v, v2) such that v lies in a satellite supported by a
// 2-anchor of a critical component and v2, outside that element, is neither
// a 2-anchor nor a responsible 1-anchor. Empty exactly when no such pair is
// left. Targets that would stay raw-critical after receiving the satellite
// carry the responsible flag already, so every returned move is safe to
// apply as is.
std::optional<RescueMove> find_move(const HcState& st);

// Rewrites the cover for one move; st must be the analysis of that cover.
void apply_move(EdgeSet& cover, const HcState& st, const RescueMove& mv);

// Bad component ids appearing in composite components, ascending. Moves
// must keep this set fixed: it is the weight of the cover.
std::vector<int> saturated_bad_ids(const HcState& st);

// Every graph edge {v, v2} that still admits a move, recomputed from
// scratch. Empty exactly when find_move is exhausted.
std::vector<std::pair<int, int>> audit_rescue_fixpoint(const HcState& st);

struct RescueOutcome {
    HcState state;  // analysis of the final cover
    int moves = 0;
    std::vector<std::string> trace;  // one line per move when requested
};

// Applies moves until none is left, re-analysing all components after each
// one. Asserts the potential drop, the weight invariant, the 5n move bound,
// and the final fixpoint.
RescueOutcome run_rescue_loop(const Workspace& ws, const HComponents& hc, EdgeSet& cover,
                              const EdgeSet& core, bool want_trace = false);

}  // namespace mpc
