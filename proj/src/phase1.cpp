#include "mpc/phase1.hpp"

#include <algorithm>
#include <cassert>

namespace mpc {

namespace {

// Vertex sequence of a path-shaped component within H's edges.
std::vector<int> path_sequence(const Workspace& ws, const std::vector<int>& comp) {
    std::unordered_set<int> members(comp.begin(), comp.end());
    auto h_deg = [&](int v) {
        int d = 0;
        for (int w : ws.g->adj[v])
            if (members.count(w) && ws.h_edges.contains(v, w)) ++d;
        return d;
    };
    int start = -1;
    for (int v : comp)
        if (h_deg(v) == 1) {
            start = v;
            break;
        }
    assert(start >= 0);
    std::vector<int> seq{start};
    int prev = -1;
    while (seq.size() < comp.size()) {
        int cur = seq.back(), next = -1;
        for (int w : ws.g->adj[cur])
            if (w != prev && members.count(w) && ws.h_edges.contains(cur, w)) {
                next = w;
                break;
            }
        assert(next >= 0);
        prev = cur;
        seq.push_back(next);
    }
    return seq;
}

}  // namespace

Workspace init_workspace(const Graph& g) {
    Workspace ws;
    ws.g = &g;
    ws.m = max_cardinality_matching(g);
    ws.in_h.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (ws.m.covers(v)) ws.in_h[v] = 1;
    for (auto [u, v] : ws.m.edges()) {
        ws.m_set.insert(u, v);
        ws.h_edges.insert(u, v);
    }
    return ws;
}

HComponents h_components(const Workspace& ws) {
    const Graph& g = *ws.g;
    HComponents hc;
    hc.comp_of.assign(g.n, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (!ws.in_h[s] || hc.comp_of[s] != -1) continue;
        int id = static_cast<int>(hc.comps.size());
        std::vector<int> comp;
        hc.comp_of[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (ws.h_edges.contains(v, w) && hc.comp_of[w] == -1) {
                    hc.comp_of[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        hc.comps.push_back(std::move(comp));
    }
    // Shapes are relative to H's edge set, so classify within a graph holding
    // only those edges.
    Graph h_graph = Graph::from_edges(g.n, ws.h_edges.sorted_edges());
    hc.shapes.reserve(hc.comps.size());
    for (const auto& comp : hc.comps) hc.shapes.push_back(classify_component(h_graph, comp));
    return hc;
}

std::optional<AugTriple> find_augmenting_triple(const Workspace& ws) {
    const Graph& g = *ws.g;
    HComponents hc = h_components(ws);
    // edge-component id per vertex, -1 elsewhere
    std::vector<int> edge_comp(g.n, -1);
    std::vector<std::pair<int, int>> comp_edge(hc.comps.size(), {-1, -1});
    for (std::size_t i = 0; i < hc.comps.size(); ++i)
        if (hc.shapes[i].shape == Shape::Edge) {
            edge_comp[hc.comps[i][0]] = static_cast<int>(i);
            edge_comp[hc.comps[i][1]] = static_cast<int>(i);
            comp_edge[i] = {hc.comps[i][0], hc.comps[i][1]};
        }

    auto mk = [&](int u0, int v0, int v1, bool c1) {
        AugTriple t;
        t.u0 = u0;
        t.v0 = v0;
        t.w0 = ws.m.mate[v0];
        t.v1 = v1;
        t.w1 = ws.m.mate[v1];
        t.c1 = c1;
        t.revision = ws.revision;
        return t;
    };

    for (int u = 0; u < g.n; ++u) {
        if (!ws.outside(u)) continue;
        int first = -1;
        for (int v : g.adj[u]) {
            int c = edge_comp[v];
            if (c < 0) continue;
            if (first < 0) {
                first = v;
            } else if (edge_comp[first] != c) {
                return mk(u, first, v, true);
            }
        }
    }
    for (std::size_t i = 0; i < hc.comps.size(); ++i) {
        if (comp_edge[i].first < 0) continue;
        for (int v0 : {comp_edge[i].first, comp_edge[i].second}) {
            int w0 = ws.m.mate[v0];
            int u0 = -1;
            for (int u : g.adj[v0])
                if (ws.outside(u)) {
                    u0 = u;
                    break;
                }
            if (u0 < 0) continue;
            for (int v1 : g.adj[w0]) {
                int c = edge_comp[v1];
                if (c >= 0 && c != static_cast<int>(i)) return mk(u0, v0, v1, false);
            }
        }
    }
    return std::nullopt;
}

void apply_triple(Workspace& ws, const AugTriple& t) {
    if (t.revision != ws.revision)
        throw GraphError("augmenting triple is stale: found at revision " +
                         std::to_string(t.revision) + ", workspace at " +
                         std::to_string(ws.revision));
    assert(ws.outside(t.u0));
    assert(ws.m_set.contains(t.v0, t.w0) && ws.m_set.contains(t.v1, t.w1));
    ws.in_h[t.u0] = 1;
    ws.h_edges.insert(t.u0, t.v0);
    if (t.c1) {
        ws.h_edges.insert(t.u0, t.v1);
    } else {
        ws.h_edges.insert(t.w0, t.v1);
        ws.m_set.erase(t.v0, t.w0);
        ws.m_set.insert(t.u0, t.v0);
        ws.m.mate[t.u0] = t.v0;
        ws.m.mate[t.v0] = t.u0;
        ws.m.mate[t.w0] = -1;
    }
    ++ws.revision;
}

int run_step_1_1(Workspace& ws) {
    int applied = 0;
    while (auto t = find_augmenting_triple(ws)) {
        apply_triple(ws, *t);
        ++applied;
        assert(applied <= ws.g->n);
    }
    return applied;
}

int run_step_1_2(Workspace& ws) {
    const Graph& g = *ws.g;
    HComponents hc = h_components(ws);
    std::vector<char> endpoint(g.n, 0);
    for (std::size_t i = 0; i < hc.comps.size(); ++i)
        if (hc.shapes[i].shape == Shape::Edge)
            for (int v : hc.comps[i]) endpoint[v] = 1;
    std::vector<int> outside_now;
    for (int u = 0; u < g.n; ++u)
        if (ws.outside(u)) outside_now.push_back(u);
    int added = 0;
    for (int u : outside_now)
        for (int v : g.adj[u])
            if (endpoint[v]) {
                ws.in_h[u] = 1;
                ws.h_edges.insert(u, v);
                ++added;
            }
    if (added > 0) ++ws.revision;
    return added;
}

namespace {

// Internal non-middle vertices of 5-paths: positions 2 and 4 of the sequence.
std::vector<char> receptive_vertices(const Workspace& ws, const HComponents& hc) {
    std::vector<char> ok(ws.g->n, 0);
    for (std::size_t i = 0; i < hc.comps.size(); ++i)
        if (hc.shapes[i].shape == Shape::Path && hc.shapes[i].order == 5) {
            auto seq = path_sequence(ws, hc.comps[i]);
            ok[seq[1]] = 1;
            ok[seq[3]] = 1;
        }
    return ok;
}

void check_matching(const Workspace& ws, Violations& out) {
    if (!is_maximum_matching(*ws.g, ws.m)) out.push_back("matching is not maximum");
    for (auto [u, v] : ws.m.edges())
        if (!ws.h_edges.contains(u, v))
            out.push_back("matching edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") missing from the working subgraph");
    if (ws.m_set.size() != static_cast<std::size_t>(ws.m.size()))
        out.push_back("matching edge set out of sync");
    for (int v = 0; v < ws.g->n; ++v)
        if (ws.m.covers(v) && !ws.in_h[v])
            out.push_back("matched vertex " + std::to_string(v) + " not in the working subgraph");
    for (auto [u, v] : ws.h_edges.sorted_edges())
        if (!ws.g->has_edge(u, v))
            out.push_back("working subgraph edge (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") not in the input graph");
}

// True iff the component is a 5-path whose end edges are in M.
bool proper_5path(const Workspace& ws, const HComponents& hc, std::size_t i, Violations& out) {
    if (hc.shapes[i].shape != Shape::Path || hc.shapes[i].order != 5) return false;
    auto seq = path_sequence(ws, hc.comps[i]);
    if (!ws.m_set.contains(seq[0], seq[1]) || !ws.m_set.contains(seq[3], seq[4]))
        out.push_back("5-path component at vertex " + std::to_string(seq[0]) +
                      " lacks matched end edges");
    return true;
}

}  // namespace

Violations verify_after_augmenting(const Workspace& ws) {
    const Graph& g = *ws.g;
    Violations out;
    check_matching(ws, out);
    HComponents hc = h_components(ws);
    std::vector<char> receptive = receptive_vertices(ws, hc);
    std::vector<int> edge_comp(g.n, -1);
    for (std::size_t i = 0; i < hc.comps.size(); ++i) {
        if (proper_5path(ws, hc, i, out)) continue;
        if (hc.shapes[i].shape == Shape::Edge &&
            ws.m_set.contains(hc.comps[i][0], hc.comps[i][1])) {
            edge_comp[hc.comps[i][0]] = static_cast<int>(i);
            edge_comp[hc.comps[i][1]] = static_cast<int>(i);
            continue;
        }
        out.push_back("component at vertex " + std::to_string(hc.comps[i][0]) +
                      " is neither a matched edge nor a 5-path");
    }
    // Adjacency confinement around each (edge component, outside neighbor) pair.
    for (std::size_t i = 0; i < hc.comps.size(); ++i) {
        if (edge_comp[hc.comps[i][0]] != static_cast<int>(i)) continue;
        for (int k = 0; k < 2; ++k) {
            int v = hc.comps[i][k], w = hc.comps[i][1 - k];
            for (int u : g.adj[v]) {
                if (!ws.outside(u)) continue;
                for (int x : g.adj[u])
                    if (x != v && x != w && !receptive[x])
                        out.push_back("outside vertex " + std::to_string(u) +
                                      " adjacent to edge component {" + std::to_string(v) + "," +
                                      std::to_string(w) + "} reaches stray vertex " +
                                      std::to_string(x));
                for (int y : g.adj[w])
                    if (y != v && y != u && !receptive[y])
                        out.push_back("endpoint " + std::to_string(w) + " of edge component {" +
                                      std::to_string(v) + "," + std::to_string(w) +
                                      "} with outside neighbor " + std::to_string(u) +
                                      " reaches stray vertex " + std::to_string(y));
            }
        }
    }
    return out;
}

Violations verify_after_attach(const Workspace& ws) {
    const Graph& g = *ws.g;
    Violations out;
    check_matching(ws, out);
    HComponents hc = h_components(ws);
    std::vector<char> receptive = receptive_vertices(ws, hc);
    std::vector<char> restricted(g.n, 0);  // star satellites and triangle vertices
    for (std::size_t i = 0; i < hc.comps.size(); ++i) {
        const auto& comp = hc.comps[i];
        const auto& shape = hc.shapes[i];
        if (proper_5path(ws, hc, i, out)) continue;
        int m_edges = 0;
        for (int v : comp)
            for (int w : g.adj[v])
                if (v < w && ws.m_set.contains(v, w) && ws.h_edges.contains(v, w)) ++m_edges;
        if (m_edges != 1)
            out.push_back("component at vertex " + std::to_string(comp[0]) + " carries " +
                          std::to_string(m_edges) + " matching edges, expected 1");
        switch (shape.shape) {
            case Shape::Edge:
                break;
            case Shape::Triangle:
                for (int v : comp) restricted[v] = 1;
                break;
            case Shape::Star:
                for (int v : comp)
                    if (v != shape.center) restricted[v] = 1;
                break;
            default:
                out.push_back("component at vertex " + std::to_string(comp[0]) +
                              " has a disallowed shape");
        }
    }
    for (int v = 0; v < g.n; ++v) {
        if (restricted[v]) {
            int cv = hc.comp_of[v];
            for (int w : g.adj[v])
                if (hc.comp_of[w] != cv && !receptive[w])
                    out.push_back("restricted vertex " + std::to_string(v) +
                                  " adjacent to non-receptive vertex " + std::to_string(w));
        } else if (!ws.in_h[v]) {
            for (int w : g.adj[v])
                if (!receptive[w])
                    out.push_back("outside vertex " + std::to_string(v) +
                                  " adjacent to non-receptive vertex " + std::to_string(w));
        }
    }
    return out;
}

Workspace run_phase1(const Graph& g) {
    Workspace ws = init_workspace(g);
    run_step_1_1(ws);
    run_step_1_2(ws);
    return ws;
}

}  // namespace mpc
