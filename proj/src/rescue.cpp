#include "mpc/rescue.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mpc {

namespace {

// Vertices eligible to move: members of satellites hanging off a 2-anchor
// of a critical component, tagged with their component and satellite index.
struct MovableVertex {
    int v;
    int comp;  // index into st.comps
    int sat;   // index into comps[comp].sats
};

std::vector<MovableVertex> movable_vertices(const HcState& st) {
    std::vector<MovableVertex> rows;
    for (std::size_t i = 0; i < st.comps.size(); ++i) {
        const HcComp& k = st.comps[i];
        if (!k.critical) continue;
        for (std::size_t j = 0; j < k.sats.size(); ++j) {
            const Satellite& sat = k.sats[j];
            int rank = st.anchor_rank[sat.anchor];
            assert(rank != -1);
            if (k.support[rank] != 2) continue;
            for (int v : st.hc->comps[sat.comp])
                rows.push_back({v, static_cast<int>(i), static_cast<int>(j)});
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const MovableVertex& x, const MovableVertex& y) { return x.v < y.v; });
    return rows;
}

// 2-anchors and responsible 1-anchors never take a satellite.
bool blocked_target(const HcState& st, int v2) {
    int rank = st.anchor_rank[v2];
    if (rank == -1) return false;
    const HcComp& k = st.comps[st.comp_index[v2]];
    if (k.support[rank] == 2) return true;
    return !k.anchor_responsible.empty() && k.anchor_responsible[rank] != 0;
}

}  // namespace

const char* move_kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::MoveToAnchor:
            return "move-to-anchor";
        case MoveKind::MoveToLoneSatellite:
            return "move-to-lone-satellite";
        case MoveKind::MergeSatellites:
            return "merge-satellites";
    }
    return "?";
}

Potential potential_of(const HcState& st) {
    Potential p;
    p.n0 = st.n0;
    p.ncc = st.ncc;
    p.nc = st.nc;
    p.g = st.potential();
    long long n = st.ws->g->n;
    assert(p.g <= 2 * n && p.g >= -3 * n);
    return p;
}

std::optional<RescueMove> find_move(const HcState& st) {
    const Workspace& ws = *st.ws;
    for (const MovableVertex& row : movable_vertices(st)) {
        const Satellite& sat = st.comps[row.comp].sats[row.sat];
        for (int v2 : ws.g->adj[row.v]) {
            if (st.hc->comp_of[v2] == sat.comp) continue;  // inside the moving element
            if (blocked_target(st, v2)) continue;
            // Satellite members sit in bad components, which only outside
            // vertices and star leaves shun; and a neighbouring unsaturated
            // bad component would have let the cover grow heavier.
            assert(!ws.outside(v2));
            assert(st.comp_index[v2] != -1);
            RescueMove mv;
            mv.v = row.v;
            mv.v2 = v2;
            mv.sat_comp = sat.comp;
            int rank = st.anchor_rank[v2];
            if (rank != -1) {
                const HcComp& t = st.comps[st.comp_index[v2]];
                // A 1-anchor that kept its component raw-critical after this
                // arrival would carry the responsible flag, so the receiving
                // side always leaves the critical census.
                assert(t.support[rank] == 0 ||
                       !move_keeps_raw_critical(st, st.comp_index[v2], v2, sat.comp, row.v));
                mv.kind = MoveKind::MoveToAnchor;
                return mv;
            }
            int srank = st.sat_rank[v2];
            assert(srank != -1);  // non-anchor center vertices admit no such edge
            const HcComp& t = st.comps[st.comp_index[v2]];
            mv.other_comp = t.sats[srank].comp;
            bool lone_over_bad_center = t.kind != CenterKind::FivePath && t.sats.size() == 1;
            mv.kind = lone_over_bad_center ? MoveKind::MoveToLoneSatellite
                                           : MoveKind::MergeSatellites;
            return mv;
        }
    }
    return std::nullopt;
}

void apply_move(EdgeSet& cover, const HcState& st, const RescueMove& mv) {
    int ci = st.comp_index[mv.v];
    assert(ci != -1 && st.sat_rank[mv.v] != -1);
    const Satellite& sat = st.comps[ci].sats[st.sat_rank[mv.v]];
    assert(sat.comp == mv.sat_comp);
    assert(cover.contains(sat.anchor, sat.attach));
    cover.erase(sat.anchor, sat.attach);
    if (mv.kind == MoveKind::MergeSatellites) {
        int ti = st.comp_index[mv.v2];
        assert(ti != -1 && st.sat_rank[mv.v2] != -1);
        const Satellite& other = st.comps[ti].sats[st.sat_rank[mv.v2]];
        assert(other.comp == mv.other_comp);
        assert(cover.contains(other.anchor, other.attach));
        cover.erase(other.anchor, other.attach);
    }
    assert(!cover.contains(mv.v, mv.v2));
    cover.insert(mv.v, mv.v2);
}

std::vector<int> saturated_bad_ids(const HcState& st) {
    std::vector<int> ids;
    for (const HcComp& k : st.comps) {
        if (!k.composite) continue;
        if (k.kind != CenterKind::FivePath) ids.push_back(k.center);
        for (const Satellite& sat : k.sats) ids.push_back(sat.comp);
    }
    std::sort(ids.begin(), ids.end());
    assert(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    return ids;
}

std::vector<std::pair<int, int>> audit_rescue_fixpoint(const HcState& st) {
    std::vector<std::pair<int, int>> offending;
    for (const MovableVertex& row : movable_vertices(st)) {
        const Satellite& sat = st.comps[row.comp].sats[row.sat];
        for (int v2 : st.ws->g->adj[row.v]) {
            if (st.hc->comp_of[v2] == sat.comp) continue;
            if (!blocked_target(st, v2)) offending.push_back({row.v, v2});
        }
    }
    return offending;
}

RescueOutcome run_rescue_loop(const Workspace& ws, const HComponents& hc, EdgeSet& cover,
                              const EdgeSet& core, bool want_trace) {
    RescueOutcome out;
    out.state = analyze_components(ws, hc, cover, core);
    const std::vector<int> touched = saturated_bad_ids(out.state);
    const long long limit = 5LL * ws.g->n;
    while (std::optional<RescueMove> mv = find_move(out.state)) {
        Potential before = potential_of(out.state);
        apply_move(cover, out.state, *mv);
        out.state = analyze_components(ws, hc, cover, core);
        Potential after = potential_of(out.state);
        assert(after.g < before.g);
        assert(saturated_bad_ids(out.state) == touched);
        out.moves += 1;
        assert(out.moves <= limit);
        if (want_trace) {
            std::ostringstream line;
            line << move_kind_name(mv->kind) << " {" << mv->v << "," << mv->v2 << "} g "
                 << before.g << " -> " << after.g;
            out.trace.push_back(line.str());
        }
    }
    assert(audit_rescue_fixpoint(out.state).empty());
    return out;
}

}  // namespace mpc
