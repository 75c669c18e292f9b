#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mpc/graph.hpp"
#include "mpc/matching.hpp"

namespace mpc {

// Evolving structure H: a subgraph of G containing every matching edge.
// Throughout phase 1, M stays a maximum matching and every H-component is an
// edge of M, a 5-path with its end edges in M, or (after attach_outside) a
// triangle or star containing exactly one M-edge.
struct Workspace {
    const Graph* g = nullptr;
    Matching m;
    EdgeSet m_set;
    EdgeSet h_edges;
    std::vector<char> in_h;
    std::uint64_t revision = 0;

    bool outside(int v) const { return !in_h[v]; }
};

Workspace init_workspace(const Graph& g);

// H-components with their shapes (shapes relative to H's edges only).
struct HComponents {
    std::vector<std::vector<int>> comps;
    std::vector<ShapeInfo> shapes;
    std::vector<int> comp_of;  // -1 for vertices outside H
};
HComponents h_components(const Workspace& ws);

// (u0, e0={v0,w0}, e1={v1,w1}): u0 outside H, e0 and e1 distinct single-edge
// components. c1 means {u0,v0},{u0,v1} in E(G); otherwise {u0,v0},{w0,v1}.
struct AugTriple {
    int u0, v0, w0, v1, w1;
    bool c1;
    std::uint64_t revision;
};

// Deterministic scan: all outside vertices in id order for a c1 triple first,
// then edge components in id order for a c2 triple.
std::optional<AugTriple> find_augmenting_triple(const Workspace& ws);

// Merges e0, u0, e1 into a 5-path component. c1 keeps M; otherwise M swaps
// e0 for {u0,v0}. Throws if the triple was found against another revision.
void apply_triple(Workspace& ws, const AugTriple& t);

// Applies triples until none remains; returns how many.
int run_step_1_1(Workspace& ws);

// Adds every edge between an outside vertex and an endpoint of a single-edge
// component (both taken against the state at entry); returns how many.
int run_step_1_2(Workspace& ws);

using Violations = std::vector<std::string>;

// Structure checks after step 1.1: maximum matching, component shapes,
// adjacency confinement of outside vertices and edge-component endpoints.
Violations verify_after_augmenting(const Workspace& ws);

// Structure checks after step 1.2: maximum matching, shapes edge/triangle/
// star/5-path with the right M-edges, and the two adjacency restrictions
// (star satellites and triangles see only internal non-middle 5-path
// vertices; outside vertices likewise).
Violations verify_after_attach(const Workspace& ws);

// Both phase-1 steps on a fresh workspace.
Workspace run_phase1(const Graph& g);

}  // namespace mpc
