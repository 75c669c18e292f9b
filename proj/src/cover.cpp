#include "mpc/cover.hpp"

#include <cassert>
#include <utility>

#include "mpc/matching.hpp"

namespace mpc {

namespace {

bool is_five_path(const ShapeInfo& s) { return s.shape == Shape::Path && s.order == 5; }

}  // namespace

SaturationInstance build_saturation_instance(const Workspace& ws) {
    SaturationInstance si;
    si.hc = h_components(ws);
    const int nc = static_cast<int>(si.hc.comps.size());
    si.bad_index.assign(nc, -1);
    for (int ci = 0; ci < nc; ++ci)
        if (!is_five_path(si.hc.shapes[ci])) {
            si.bad_index[ci] = static_cast<int>(si.bad_ids.size());
            si.bad_ids.push_back(ci);
        }
    for (auto [u, v] : ws.g->edges()) {
        int cu = si.hc.comp_of[u], cv = si.hc.comp_of[v];
        if (cu < 0 || cv < 0 || cu == cv) continue;
        if (si.bad_index[cu] >= 0 || si.bad_index[cv] >= 0) si.edges.emplace_back(u, v);
    }
    return si;
}

FactorInstance build_factor_instance(const SaturationInstance& si) {
    FactorInstance fi;
    fi.n_orig = static_cast<int>(si.hc.comp_of.size());
    const int h = static_cast<int>(si.bad_ids.size());
    fi.n = fi.n_orig + 3 * h;
    fi.f.assign(fi.n, 0);
    fi.g.assign(fi.n, 2);
    fi.edges = si.edges;
    fi.n_candidate = fi.edges.size();
    for (int i = 0; i < h; ++i) {
        int xa = fi.n_orig + 3 * i;
        fi.absorb_a.push_back(xa);
        fi.absorb_b.push_back(xa + 1);
        fi.prize.push_back(xa + 2);
        const auto& comp = si.hc.comps[si.bad_ids[i]];
        fi.g[xa] = fi.g[xa + 1] = static_cast<int>(comp.size());
        fi.g[xa + 2] = 1;
        for (int v : comp) {
            fi.f[v] = 2;
            fi.edges.emplace_back(xa, v);
            fi.edges.emplace_back(xa + 1, v);
        }
    }
    fi.prize_begin = fi.edges.size();
    for (int i = 0; i < h; ++i) {
        fi.edges.emplace_back(fi.absorb_a[i], fi.prize[i]);
        fi.edges.emplace_back(fi.absorb_b[i], fi.prize[i]);
    }
    return fi;
}

FactorSolution solve_max_weight_fg_factor(const FactorInstance& fi) {
    const int ne = static_cast<int>(fi.edges.size());
    // Expansion into a matching problem: g[v] interchangeable copies per
    // vertex and two stubs per edge. An edge is selected exactly when both
    // stubs are matched to copies; unselected edges pair their stubs. Copies
    // never touch each other and stubs never touch foreign stubs, so every
    // matching that covers all stubs induces a consistent selection.
    std::vector<int> copy_off(fi.n + 1, 0);
    for (int v = 0; v < fi.n; ++v) {
        assert(fi.f[v] == 0 || fi.f[v] == fi.g[v]);
        copy_off[v + 1] = copy_off[v] + fi.g[v];
    }
    const int n_copies = copy_off[fi.n];
    const int n_gamma = n_copies + 2 * ne;
    auto stub = [&](std::size_t e, int side) {
        return n_copies + 2 * static_cast<int>(e) + side;
    };

    std::vector<std::pair<int, int>> gedges;
    std::size_t esz = fi.edges.size();
    for (auto [a, b] : fi.edges) esz += fi.g[a] + fi.g[b];
    gedges.reserve(esz);
    for (std::size_t e = 0; e < fi.edges.size(); ++e) {
        auto [a, b] = fi.edges[e];
        gedges.emplace_back(stub(e, 0), stub(e, 1));
        for (int k = 0; k < fi.g[a]; ++k) gedges.emplace_back(stub(e, 0), copy_off[a] + k);
        for (int k = 0; k < fi.g[b]; ++k) gedges.emplace_back(stub(e, 1), copy_off[b] + k);
    }
    Graph gamma = Graph::from_edges(n_gamma, gedges);

    // Stubs and copies of f=g vertices must stay covered; absorber and good
    // vertex copies may trade their coverage away; prize copies are the
    // vertices whose coverage is being maximized.
    std::vector<char> is_prize_vertex(fi.n, 0);
    for (int z : fi.prize) is_prize_vertex[z] = 1;
    std::vector<char> releasable(n_gamma, 0);
    std::vector<char> must_cover(n_gamma, 0);
    for (int v = 0; v < fi.n; ++v)
        for (int k = copy_off[v]; k < copy_off[v + 1]; ++k) {
            if (fi.f[v] == fi.g[v])
                must_cover[k] = 1;
            else if (!is_prize_vertex[v])
                releasable[k] = 1;
        }
    for (int s = n_copies; s < n_gamma; ++s) must_cover[s] = 1;

    // start from the all-absorber selection: it meets every degree bound
    // with zero weight and covers exactly the stubs, the f=g copies and the
    // absorber copies
    std::vector<int> mate(n_gamma, -1);
    std::vector<int> ctr(fi.n, 0);
    auto pair_up = [&](int a, int b) {
        assert(mate[a] == -1 && mate[b] == -1);
        mate[a] = b;
        mate[b] = a;
    };
    for (std::size_t e = 0; e < fi.edges.size(); ++e) {
        if (e < fi.n_candidate || e >= fi.prize_begin) {
            pair_up(stub(e, 0), stub(e, 1));
            continue;
        }
        auto [a, v] = fi.edges[e];
        assert(a >= fi.n_orig && v < fi.n_orig);
        assert(ctr[a] < fi.g[a] && ctr[v] < fi.g[v]);
        pair_up(stub(e, 0), copy_off[a] + ctr[a]++);
        pair_up(stub(e, 1), copy_off[v] + ctr[v]++);
    }
    for (int v = 0; v < fi.n; ++v) {
        int expect = v < fi.n_orig ? fi.f[v] : (is_prize_vertex[v] ? 0 : fi.g[v]);
        assert(ctr[v] == expect);
        (void)expect;
    }

    auto check_state = [&](const std::vector<int>& mt) {
        for (int v = 0; v < n_gamma; ++v) {
            int w = mt[v];
            assert(w >= -1 && w < n_gamma && w != v);
            if (w >= 0) {
                assert(mt[w] == v);
                assert(gamma.has_edge(v, w));
            } else {
                assert(!must_cover[v]);
            }
        }
    };
    check_state(mate);

    // one coverage-or-release search per uncovered prize copy, repeated until
    // a full pass changes nothing; a pass with no change certifies that no
    // remaining prize can be covered
    BlossomSearch search(gamma);
    int rounds = 0;
    for (bool changed = true; changed;) {
        changed = false;
        ++rounds;
        assert(rounds <= static_cast<int>(fi.prize.size()) + 1);
        for (int z : fi.prize) {
            int zc = copy_off[z];
            if (mate[zc] == -1 && search.augment_from(zc, mate, &releasable)) changed = true;
        }
        check_state(mate);
    }

    FactorSolution out;
    out.selected.assign(ne, 0);
    std::vector<int> deg(fi.n, 0);
    for (std::size_t e = 0; e < fi.edges.size(); ++e) {
        int s0 = stub(e, 0), s1 = stub(e, 1);
        if (mate[s0] == s1) {
            assert(mate[s1] == s0);
            continue;
        }
        auto [a, b] = fi.edges[e];
        assert(mate[s0] >= copy_off[a] && mate[s0] < copy_off[a + 1]);
        assert(mate[s1] >= copy_off[b] && mate[s1] < copy_off[b + 1]);
        out.selected[e] = 1;
        ++deg[a];
        ++deg[b];
        if (e >= fi.prize_begin) ++out.weight;
    }
    for (int v = 0; v < fi.n; ++v) {
        assert(deg[v] >= fi.f[v] && deg[v] <= fi.g[v]);
    }
    int prizes_covered = 0;
    for (int z : fi.prize)
        if (mate[copy_off[z]] != -1) ++prizes_covered;
    assert(out.weight == prizes_covered);
    (void)prizes_covered;
    return out;
}

CoverResult extract_and_prune_cover(const SaturationInstance& si, const FactorInstance& fi,
                                    const FactorSolution& sol) {
    const int h = static_cast<int>(si.bad_ids.size());
    CoverResult res;
    res.saturated.assign(h, 0);
    for (int i = 0; i < h; ++i)
        res.saturated[i] = sol.selected[fi.prize_begin + 2 * i] ||
                           sol.selected[fi.prize_begin + 2 * i + 1];

    std::vector<int> chosen;
    for (std::size_t e = 0; e < fi.n_candidate; ++e)
        if (sol.selected[e]) chosen.push_back(static_cast<int>(e));
    auto sides = [&](int e) {
        auto [u, v] = si.edges[e];
        return std::pair(si.bad_index[si.hc.comp_of[u]], si.bad_index[si.hc.comp_of[v]]);
    };
    std::vector<int> cnt(h, 0);
    std::vector<char> touched(h, 0);
    for (int e : chosen) {
        auto [iu, iv] = sides(e);
        assert(iu >= 0 || iv >= 0);
        if (iu >= 0) {
            ++cnt[iu];
            touched[iu] = 1;
        }
        if (iv >= 0) {
            ++cnt[iv];
            touched[iv] = 1;
        }
    }
    // a maximum selection touches a component exactly when it saturates it
    for (int i = 0; i < h; ++i) {
        assert(touched[i] == res.saturated[i]);
    }

    // drop, scanning in id order and restarting after each removal, any edge
    // all of whose bad sides keep another incidence
    std::vector<char> kept(chosen.size(), 1);
    for (bool removed = true; removed;) {
        removed = false;
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            if (!kept[k]) continue;
            auto [iu, iv] = sides(chosen[k]);
            if ((iu < 0 || cnt[iu] >= 2) && (iv < 0 || cnt[iv] >= 2)) {
                kept[k] = 0;
                if (iu >= 0) --cnt[iu];
                if (iv >= 0) --cnt[iv];
                removed = true;
                break;
            }
        }
    }
    for (int i = 0; i < h; ++i) {
        assert(!res.saturated[i] || cnt[i] >= 1);
    }
    std::vector<int> cdeg(fi.n_orig, 0);
    for (std::size_t k = 0; k < chosen.size(); ++k)
        if (kept[k]) {
            auto [u, v] = si.edges[chosen[k]];
            res.cover.insert(u, v);
            ++cdeg[u];
            ++cdeg[v];
        }
    for (int v = 0; v < fi.n_orig; ++v) {
        assert(cdeg[v] <= 2);
    }
    res.saturated_count = 0;
    for (char s : res.saturated) res.saturated_count += s;
    return res;
}

EdgeSet compute_core_matching(const Workspace& ws, const SaturationInstance& si,
                              const CoverResult& cover) {
    EdgeSet core;
    for (int v = 0; v < ws.g->n; ++v) {
        int w = ws.m.mate[v];
        if (w <= v) continue;
        int ci = si.hc.comp_of[v];
        assert(ci >= 0 && ci == si.hc.comp_of[w]);
        if (is_five_path(si.hc.shapes[ci])) {
            core.insert(v, w);
            continue;
        }
        int bi = si.bad_index[ci];
        assert(bi >= 0);
        if (cover.saturated[bi]) core.insert(v, w);
    }
    return core;
}

CoverOutcome run_cover(const Workspace& ws) {
    CoverOutcome out;
    out.sat = build_saturation_instance(ws);
    out.factor = build_factor_instance(out.sat);
    out.sol = solve_max_weight_fg_factor(out.factor);
    out.cover = extract_and_prune_cover(out.sat, out.factor, out.sol);
    out.core = compute_core_matching(ws, out.sat, out.cover);
    return out;
}

}  // namespace mpc
