#include "mpc/components.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace mpc {

namespace {

// H-neighbours of v inside its own component.
std::vector<int> h_neighbors(const Workspace& ws, int v) {
    std::vector<int> out;
    for (int u : ws.g->adj[v])
        if (ws.h_edges.contains(v, u)) out.push_back(u);
    return out;
}

// Vertex sequence of a path-shaped H component, walked from its lower end.
std::vector<int> path_sequence(const Workspace& ws, const std::vector<int>& comp) {
    int start = -1;
    for (int v : comp)
        if (h_neighbors(ws, v).size() == 1 && (start == -1 || v < start)) start = v;
    assert(start != -1);
    std::vector<int> seq = {start};
    int prev = -1, cur = start;
    while (seq.size() < comp.size()) {
        int next = -1;
        for (int u : h_neighbors(ws, cur))
            if (u != prev) next = u;
        assert(next != -1);
        seq.push_back(next);
        prev = cur;
        cur = next;
    }
    return seq;
}

// Star satellites sorted ascending (every vertex except the center).
std::vector<int> star_leaves(const std::vector<int>& comp, int hub) {
    std::vector<int> out;
    for (int v : comp)
        if (v != hub) out.push_back(v);
    return out;
}

// Longest path into a satellite from its attach vertex, attach first.
// 2 vertices for an edge or a center-attached star, 3 otherwise.
std::vector<int> satellite_arm(const HComponents& hc, const Satellite& sat) {
    const std::vector<int>& comp = hc.comps[sat.comp];
    const ShapeInfo& sh = hc.shapes[sat.comp];
    if (sh.shape == Shape::Edge) {
        int other = comp[0] == sat.attach ? comp[1] : comp[0];
        return {sat.attach, other};
    }
    if (sh.shape == Shape::Triangle) {
        std::vector<int> rest;
        for (int v : comp)
            if (v != sat.attach) rest.push_back(v);
        return {sat.attach, rest[0], rest[1]};
    }
    assert(sh.shape == Shape::Star);
    std::vector<int> leaves = star_leaves(comp, sh.center);
    if (sat.attach == sh.center) return {sh.center, leaves[0]};
    for (int v : leaves)
        if (v != sat.attach) return {sat.attach, sh.center, v};
    assert(false);
    return {};
}

// Size pruning ahead of the exact search: edges and triangles stay whole,
// stars keep the attach vertex, the center, and one spare leaf. The optimum
// over the component's own edges is unchanged because dropped leaves are
// interchangeable with the kept one.
std::vector<int> prune_satellite(const HComponents& hc, const Satellite& sat) {
    const std::vector<int>& comp = hc.comps[sat.comp];
    const ShapeInfo& sh = hc.shapes[sat.comp];
    if (sh.shape == Shape::Edge || sh.shape == Shape::Triangle) return comp;
    assert(sh.shape == Shape::Star);
    std::vector<int> kept = satellite_arm(hc, sat);
    std::sort(kept.begin(), kept.end());
    return kept;
}

struct EvalResult {
    int s = 0;
    int opt = 0;
};

// s and the exact path-packing optimum of a component described by its
// center and satellite list, using only the component's own edges (element
// edges plus rescue edges) over the pruned vertex set.
EvalResult eval_component(const Workspace& ws, const HComponents& hc,
                          const std::vector<char>& in_core, CenterKind kind, int center,
                          const std::vector<Satellite>& sats, Solution* out_sol) {
    const std::vector<int>& cverts = hc.comps[center];
    EvalResult res;
    for (int v : cverts) res.s += in_core[v];
    for (const Satellite& sat : sats)
        for (int v : hc.comps[sat.comp]) res.s += in_core[v];

    std::vector<int> kept;
    if (kind == CenterKind::Star) {
        int hub = hc.shapes[center].center;
        int mate = ws.m.mate[hub];
        kept = {std::min(hub, mate), std::max(hub, mate)};
    } else {
        kept = cverts;
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (ws.h_edges.contains(kept[i], kept[j])) edges.push_back({kept[i], kept[j]});
    for (const Satellite& sat : sats) {
        for (std::size_t i = 0; i < sat.kept.size(); ++i)
            for (std::size_t j = i + 1; j < sat.kept.size(); ++j)
                if (ws.h_edges.contains(sat.kept[i], sat.kept[j]))
                    edges.push_back({sat.kept[i], sat.kept[j]});
        edges.push_back({sat.anchor, sat.attach});
        kept.insert(kept.end(), sat.kept.begin(), sat.kept.end());
    }
    std::sort(kept.begin(), kept.end());
    assert(std::adjacent_find(kept.begin(), kept.end()) == kept.end());
    assert(static_cast<int>(kept.size()) <= 35);

    std::vector<int> to_new(ws.g->n, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) to_new[kept[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : edges) mapped.push_back({to_new[u], to_new[v]});
    Graph sub = Graph::from_edges(static_cast<int>(kept.size()), mapped);
    ExactConfig cfg;
    cfg.cap = 40;
    ExactResult er = exact_opt(sub, cfg);
    assert(er.exact);
    res.opt = static_cast<int>(er.sol.value);
    if (out_sol) {
        out_sol->paths.clear();
        for (const VertexPath& p : er.sol.paths) {
            VertexPath q;
            for (int v : p) q.push_back(kept[v]);
            out_sol->paths.push_back(q);
        }
        out_sol->value = er.sol.value;
    }
    return res;
}

bool is_bad(const ShapeInfo& sh) { return !(sh.shape == Shape::Path && sh.order == 5); }

// Internal non-middle vertices of a 5-path sequence: positions 1 and 3.
bool is_inm(const std::vector<int>& seq, int v) { return v == seq[1] || v == seq[3]; }

}  // namespace

HcState analyze_components(const Workspace& ws, const HComponents& hc, const EdgeSet& cover,
                           const EdgeSet& core) {
    const Graph& g = *ws.g;
    HcState st;
    st.ws = &ws;
    st.hc = &hc;
    st.in_core.assign(g.n, 0);
    for (auto [u, v] : core.sorted_edges()) {
        st.in_core[u] = 1;
        st.in_core[v] = 1;
    }

    int nelem = static_cast<int>(hc.comps.size());
    std::vector<std::vector<std::pair<int, int>>> links(nelem);  // per element: (other elem, cover edge idx)
    std::vector<std::pair<int, int>> cedges = cover.sorted_edges();
    for (std::size_t e = 0; e < cedges.size(); ++e) {
        auto [u, v] = cedges[e];
        int cu = hc.comp_of[u], cv = hc.comp_of[v];
        assert(cu >= 0 && cv >= 0 && cu != cv);
        links[cu].push_back({cv, static_cast<int>(e)});
        links[cv].push_back({cu, static_cast<int>(e)});
    }

    // Group elements into components of H plus cover.
    std::vector<int> group(nelem, -1);
    std::vector<std::vector<int>> groups;
    for (int c = 0; c < nelem; ++c) {
        if (group[c] != -1) continue;
        std::vector<int> members = {c};
        group[c] = static_cast<int>(groups.size());
        for (std::size_t head = 0; head < members.size(); ++head)
            for (auto [other, e] : links[members[head]])
                if (group[other] == -1) {
                    group[other] = group[c];
                    members.push_back(other);
                }
        groups.push_back(members);
    }

    st.comp_index.assign(g.n, -1);
    st.anchor_rank.assign(g.n, -1);
    st.sat_rank.assign(g.n, -1);

    for (std::vector<int>& members : groups) {
        std::sort(members.begin(), members.end());
        if (members.size() == 1) {
            int c = members[0];
            if (is_bad(hc.shapes[c])) {
                st.isolated_bad.push_back(c);
                continue;
            }
            HcComp k;
            k.composite = false;
            k.kind = CenterKind::FivePath;
            k.center = c;
            k.anchors = path_sequence(ws, hc.comps[c]);
            k.support.assign(5, 0);
            k.vertices = hc.comps[c];
            std::sort(k.vertices.begin(), k.vertices.end());
            EvalResult ev = eval_component(ws, hc, st.in_core, k.kind, c, {}, &k.opt_solution);
            k.s = ev.s;
            k.opt = ev.opt;
            assert(k.s == 4 && k.opt == 5);
            k.q_paths.assign(5, {});
            k.p_paths.assign(5, {});
            for (int i = 0; i < 5; ++i) k.q_paths[i] = {k.anchors[i]};
            st.comps.push_back(std::move(k));
            continue;
        }

        // Composite: the element of cover-degree >= 2 is the center; with
        // only two elements the non-bad one is, or the lower id when both
        // are bad.
        int center = -1;
        for (int c : members)
            if (links[c].size() >= 2) {
                assert(center == -1);
                center = c;
            }
        if (center == -1) {
            assert(members.size() == 2);
            bool bad0 = is_bad(hc.shapes[members[0]]);
            bool bad1 = is_bad(hc.shapes[members[1]]);
            assert(bad0 || bad1);
            center = !bad0 ? members[0] : (!bad1 ? members[1] : members[0]);
        }
        const ShapeInfo& csh = hc.shapes[center];

        HcComp k;
        k.composite = true;
        k.center = center;
        std::vector<int> cseq;
        if (csh.shape == Shape::Path && csh.order == 5) {
            k.kind = CenterKind::FivePath;
            cseq = path_sequence(ws, hc.comps[center]);
            k.anchors = cseq;
        } else if (csh.shape == Shape::Edge) {
            k.kind = CenterKind::Edge;
            k.anchors = hc.comps[center];
            std::sort(k.anchors.begin(), k.anchors.end());
        } else {
            assert(csh.shape == Shape::Star);
            k.kind = CenterKind::Star;
            k.anchors = {csh.center};
            k.star_mate = ws.m.mate[csh.center];
            assert(k.star_mate >= 0 && hc.comp_of[k.star_mate] == center);
        }
        k.support.assign(k.anchors.size(), 0);

        for (int c : members) {
            if (c == center) continue;
            const ShapeInfo& sh = hc.shapes[c];
            assert(is_bad(sh));
            assert(sh.shape == Shape::Edge || sh.shape == Shape::Star || sh.shape == Shape::Triangle);
            assert(links[c].size() == 1);
            auto [other, e] = links[c][0];
            assert(other == center);
            auto [u, v] = cedges[e];
            Satellite sat;
            sat.comp = c;
            sat.anchor = hc.comp_of[u] == center ? u : v;
            sat.attach = hc.comp_of[u] == center ? v : u;
            assert(hc.comp_of[sat.anchor] == center && hc.comp_of[sat.attach] == c);
            if (sh.shape == Shape::Triangle) {
                assert(k.kind == CenterKind::FivePath && is_inm(cseq, sat.anchor));
            }
            if (sh.shape == Shape::Star && sat.attach != sh.center) {
                assert(k.kind == CenterKind::FivePath && is_inm(cseq, sat.anchor));
            }
            if (k.kind == CenterKind::Star) assert(sat.anchor == csh.center);
            sat.kept = prune_satellite(hc, sat);
            k.sats.push_back(std::move(sat));
        }
        assert(!k.sats.empty());

        for (const Satellite& sat : k.sats) {
            int rank = -1;
            for (std::size_t i = 0; i < k.anchors.size(); ++i)
                if (k.anchors[i] == sat.anchor) rank = static_cast<int>(i);
            assert(rank != -1);
            k.support[rank] += 1;
            assert(k.support[rank] <= 2);
        }

        for (int c : members) {
            const std::vector<int>& verts = hc.comps[c];
            k.vertices.insert(k.vertices.end(), verts.begin(), verts.end());
        }
        std::sort(k.vertices.begin(), k.vertices.end());

        EvalResult ev =
            eval_component(ws, hc, st.in_core, k.kind, center, k.sats, &k.opt_solution);
        k.s = ev.s;
        k.opt = ev.opt;
        int base = k.kind == CenterKind::FivePath ? 4 : 2;
        assert(k.s == base + 2 * static_cast<int>(k.sats.size()));
        k.raw_critical = 11 * k.s >= 14 * k.opt;

        k.q_paths.assign(k.anchors.size(), {});
        k.p_paths.assign(k.anchors.size(), {});
        for (std::size_t i = 0; i < k.anchors.size(); ++i) {
            int v = k.anchors[i];
            if (k.support[i] == 0) {
                k.q_paths[i] = {v};
                continue;
            }
            std::vector<std::vector<int>> arms;
            for (const Satellite& sat : k.sats)
                if (sat.anchor == v) arms.push_back(satellite_arm(hc, sat));
            assert(static_cast<int>(arms.size()) == k.support[i]);
            if (arms.size() == 2 && arms[1].size() > arms[0].size()) std::swap(arms[0], arms[1]);
            k.q_paths[i].push_back(v);
            k.q_paths[i].insert(k.q_paths[i].end(), arms[0].begin(), arms[0].end());
            assert(k.q_paths[i].size() >= 3 && k.q_paths[i].size() <= 4);
            if (k.support[i] == 2) {
                std::vector<int> p(arms[1].rbegin(), arms[1].rend());
                p.push_back(v);
                p.insert(p.end(), arms[0].begin(), arms[0].end());
                k.p_paths[i] = p;
                assert(p.size() >= 5 && p.size() <= 7);
            }
        }
        st.comps.push_back(std::move(k));
    }

    std::sort(st.comps.begin(), st.comps.end(),
              [](const HcComp& a, const HcComp& b) { return a.vertices[0] < b.vertices[0]; });

    for (std::size_t i = 0; i < st.comps.size(); ++i) {
        HcComp& k = st.comps[i];
        for (int v : k.vertices) st.comp_index[v] = static_cast<int>(i);
        for (std::size_t a = 0; a < k.anchors.size(); ++a)
            st.anchor_rank[k.anchors[a]] = static_cast<int>(a);
        for (std::size_t s = 0; s < k.sats.size(); ++s)
            for (int v : hc.comps[k.sats[s].comp]) st.sat_rank[v] = static_cast<int>(s);
    }

    // Responsibility, round one: witnesses from satellites of raw-critical
    // components that hang off a 2-anchor. A hit on a raw-critical component
    // means its own structure absorbs the move; it is downgraded and later
    // assembled through one extra graph edge.
    auto collect_pool = [&](bool final_pool) {
        std::vector<char> pool(g.n, 0);
        for (const HcComp& k : st.comps) {
            if (final_pool ? !k.critical : !k.raw_critical) continue;
            for (const Satellite& sat : k.sats) {
                int rank = st.anchor_rank[sat.anchor];
                if (k.support[rank] == 2)
                    for (int v : hc.comps[sat.comp]) pool[v] = 1;
            }
        }
        return pool;
    };
    auto scan_responsibility = [&](const std::vector<char>& pool, bool record) {
        for (std::size_t i = 0; i < st.comps.size(); ++i) {
            HcComp& k = st.comps[i];
            if (!k.composite) continue;
            if (record) k.anchor_responsible.assign(k.anchors.size(), 0);
            bool hit = false;
            for (std::size_t a = 0; a < k.anchors.size(); ++a) {
                if (k.support[a] != 1) continue;
                int v = k.anchors[a];
                for (int w : g.adj[v]) {
                    if (!pool[w]) continue;
                    int sc = hc.comp_of[w];
                    if (!move_keeps_raw_critical(st, static_cast<int>(i), v, sc, w)) continue;
                    hit = true;
                    if (record) {
                        k.anchor_responsible[a] = 1;
                    } else if (k.raw_critical) {
                        int sidx = -1;
                        for (std::size_t j = 0; j < k.sats.size(); ++j)
                            if (k.sats[j].comp == sc) sidx = static_cast<int>(j);
                        assert(sidx != -1);  // a raw-critical hit is always internal
                        k.witness_sat = sidx;
                        k.witness_from = v;
                        k.witness_to = w;
                    }
                    break;
                }
                if (!record && hit) break;
            }
            if (record) {
                assert(!(hit && k.raw_critical));
                k.responsible = hit && !k.raw_critical;
            } else {
                k.critical = k.raw_critical && !hit;
                k.critical_and_responsible = k.raw_critical && hit;
            }
        }
    };
    scan_responsibility(collect_pool(false), false);
    scan_responsibility(collect_pool(true), true);

    for (HcComp& k : st.comps) {
        k.r_count = 0;
        for (std::size_t a = 0; a < k.anchors.size(); ++a) {
            if (k.support[a] == 2)
                k.r_count += 1;
            else if (!k.anchor_responsible.empty() && k.anchor_responsible[a])
                k.r_count += 1;
        }
        if (k.critical) assert(k.r_count == 1 || k.r_count == 2);

        k.opt_value = k.opt;
        if (k.critical_and_responsible) {
            assert((k.kind == CenterKind::Edge && k.s == 8) ||
                   (k.kind == CenterKind::FivePath && k.s == 14));
            std::vector<int> kept;
            if (k.kind == CenterKind::Star) {
                kept = {k.anchors[0], k.star_mate};
            } else {
                kept = hc.comps[k.center];
            }
            for (const Satellite& sat : k.sats)
                kept.insert(kept.end(), sat.kept.begin(), sat.kept.end());
            kept.push_back(k.witness_to);
            std::sort(kept.begin(), kept.end());
            kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
            InducedSubgraph sub = induced_subgraph(g, kept);
            ExactConfig cfg;
            cfg.cap = 40;
            ExactResult er = exact_opt(sub.graph, cfg);
            assert(er.exact);
            k.opt_value = static_cast<int>(er.sol.value);
            assert(k.opt_value >= (k.s == 8 ? 7 : 12));
            k.opt_solution.paths.clear();
            for (const VertexPath& p : er.sol.paths) {
                VertexPath q;
                for (int v : p) q.push_back(sub.to_old[v]);
                k.opt_solution.paths.push_back(q);
            }
            k.opt_solution.value = er.sol.value;
        }
    }

    st.nc = static_cast<int>(st.comps.size() + st.isolated_bad.size());
    for (const HcComp& k : st.comps) {
        st.ncc += k.raw_critical;
        for (std::size_t a = 0; a < k.anchors.size(); ++a) st.n0 += k.support[a] == 0;
    }
    return st;
}

bool move_keeps_raw_critical(const HcState& st, int target, int anchor_vertex, int sat_comp,
                             int attach) {
    const HcComp& t = st.comps[target];
    assert(st.comp_index[anchor_vertex] == target && st.anchor_rank[anchor_vertex] != -1);
    assert(st.hc->comp_of[attach] == sat_comp);
    std::vector<Satellite> sats;
    bool replaced = false;
    for (const Satellite& sat : t.sats) {
        if (sat.comp == sat_comp) {
            Satellite moved = sat;
            moved.anchor = anchor_vertex;
            moved.attach = attach;
            moved.kept = prune_satellite(*st.hc, moved);
            sats.push_back(std::move(moved));
            replaced = true;
        } else {
            sats.push_back(sat);
        }
    }
    if (!replaced) {
        Satellite sat;
        sat.comp = sat_comp;
        sat.anchor = anchor_vertex;
        sat.attach = attach;
        sat.kept = prune_satellite(*st.hc, sat);
        sats.push_back(std::move(sat));
    }
    EvalResult ev =
        eval_component(*st.ws, *st.hc, st.in_core, t.kind, t.center, sats, nullptr);
    return 11 * ev.s >= 14 * ev.opt;
}

Census build_census(const HcState& st) {
    Census c;
    for (const HcComp& k : st.comps) {
        assert(k.r_count >= 0 && k.r_count <= 5);
        c.k_count[k.r_count] += 1;
        c.a += k.r_count;
        if (k.critical) {
            assert(k.r_count == 1 || k.r_count == 2);
            (k.r_count == 1 ? c.k1c : c.k2c) += 1;
        }
        for (std::size_t a = 0; a < k.anchors.size(); ++a) {
            bool in_r = k.support[a] == 2 ||
                        (!k.anchor_responsible.empty() && k.anchor_responsible[a]);
            if (in_r) c.r_vertices.push_back(k.anchors[a]);
            if (k.critical && k.support[a] == 2) c.rc.push_back(k.anchors[a]);
        }
        if (k.critical)
            for (const Satellite& sat : k.sats)
                if (k.support[st.anchor_rank[sat.anchor]] == 2)
                    for (int v : st.hc->comps[sat.comp]) c.uc.push_back(v);
    }
    c.b = c.k1c + 2 * c.k2c;
    std::sort(c.r_vertices.begin(), c.r_vertices.end());
    std::sort(c.rc.begin(), c.rc.end());
    std::sort(c.uc.begin(), c.uc.end());
    assert(static_cast<long long>(c.rc.size()) == c.b);
    return c;
}

}  // namespace mpc
