#include "mpc/solver.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "mpc/cover.hpp"
#include "mpc/exact.hpp"
#include "mpc/phase1.hpp"
#include "mpc/rescue.hpp"

namespace mpc {

namespace {

// Census counts are bounded by the vertex count, but the squared forms can
// pass 2^63 for adversarial direct calls, so square in 128 bits.
using Wide = __int128;

using Trace = std::vector<std::string>;

void log_line(Trace* trace, int level, const std::string& text) {
    if (trace) trace->push_back("level " + std::to_string(level) + ": " + text);
}

Solution solve_level(const Graph& g, SolveStats& stats, int level, Trace* trace);

// Shared by the internal recursion and the public wrapper, so the public
// entry can recurse with fresh bookkeeping.
Solution recurse_level(const Graph& g, const HcState& st, const Census& census,
                       SolveStats& stats, int level, Trace* trace) {
    assert(census_and_branch(census) == Branch::Recurse);

    std::vector<char> removed(g.n, 0);
    for (int v : census.rc) removed[v] = 1;
    for (int v : census.uc) {
        assert(!removed[v]);
        removed[v] = 1;
    }
    long long gone =
        static_cast<long long>(census.rc.size()) + static_cast<long long>(census.uc.size());
    assert(gone >= 3);
    assert(gone >= 5 * static_cast<long long>(census.rc.size()));

    std::vector<char> in_uc(g.n, 0);
    for (int v : census.uc) in_uc[v] = 1;

    // Anchor paths run through both satellites of a critical 2-anchor, so
    // they live entirely inside the removed vertex set.
    std::vector<char> seen(g.n, 0);
    std::vector<VertexPath> anchor_paths;
    for (int v : census.rc) {
        int ci = st.comp_index[v];
        assert(ci != -1);
        const HcComp& k = st.comps[ci];
        int rank = st.anchor_rank[v];
        assert(k.critical && rank != -1 && k.support[rank] == 2);
        const VertexPath& path = k.p_paths[rank];
        assert(path.size() >= 5 && path.size() <= 7);
        for (int u : path) {
            assert(u == v || in_uc[u]);
            assert(!seen[u]);
            seen[u] = 1;
        }
        anchor_paths.push_back(path);
    }

    std::vector<int> keep;
    keep.reserve(g.n - gone);
    for (int v = 0; v < g.n; ++v)
        if (!removed[v]) keep.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, keep);
    assert(sub.graph.n == g.n - gone);
    log_line(trace, level, "recurse, dropping " + std::to_string(gone) + " vertices");

    Solution inner = solve_level(sub.graph, stats, level + 1, trace);

    Solution out;
    for (VertexPath& path : inner.paths) {
        for (int& u : path) {
            u = sub.to_old[u];
            assert(!seen[u]);
            seen[u] = 1;
        }
        out.paths.push_back(std::move(path));
    }
    out.value = inner.value;
    for (VertexPath& path : anchor_paths) {
        out.value += static_cast<long long>(path.size());
        out.paths.push_back(std::move(path));
    }
    assert(out.value >= 5 * static_cast<long long>(census.rc.size()) + inner.value);
    log_line(trace, level, "combined value " + std::to_string(out.value));
    return out;
}

Solution solve_level(const Graph& g, SolveStats& stats, int level, Trace* trace) {
    stats.depth = std::max(stats.depth, level);
    if (g.n <= 8) {
        ExactResult er = exact_opt(g);
        assert(er.exact);
        log_line(trace, level, "exact base n=" + std::to_string(g.n) + ", value " +
                                   std::to_string(er.sol.value));
        return er.sol;
    }

    log_line(trace, level, "n=" + std::to_string(g.n) + " m=" + std::to_string(g.m));
    Workspace ws = run_phase1(g);
    CoverOutcome co = run_cover(ws);
    RescueOutcome ro = run_rescue_loop(ws, co.sat.hc, co.cover.cover, co.core, trace != nullptr);
    stats.moves += ro.moves;
    if (trace)
        for (const std::string& line : ro.trace) log_line(trace, level, line);

    Census census = build_census(ro.state);
    log_line(trace, level,
             "census a=" + std::to_string(census.a) + " b=" + std::to_string(census.b));
    if (census_and_branch(census) == Branch::OutputComponents) {
        Solution out = assemble_component_solution(ro.state);
        log_line(trace, level, "output components, value " + std::to_string(out.value));
        return out;
    }
    return recurse_level(g, ro.state, census, stats, level, trace);
}

}  // namespace

bool census_ratio_exceeds(long long a, long long b) {
    assert(a >= 0 && b >= 1);
    long long lhs = 28 * a - 15 * b;
    if (lhs <= 0) return false;
    return Wide(lhs) * lhs > Wide(505) * b * b;
}

bool ratio_within_bound(long long opt, long long alg) {
    assert(opt >= 0 && alg >= 0);
    long long lhs = 20 * opt - 15 * alg;
    if (lhs <= 0) return true;
    return Wide(lhs) * lhs <= Wide(505) * alg * alg;
}

Branch census_and_branch(const Census& census) {
    if (census.b == 0) return Branch::OutputComponents;
    return census_ratio_exceeds(census.a, census.b) ? Branch::OutputComponents : Branch::Recurse;
}

Solution assemble_component_solution(const HcState& st) {
    Solution out;
    std::vector<char> seen(st.ws->g->n, 0);
    for (const HcComp& k : st.comps) {
        assert(k.opt_solution.value == k.opt_value);
        long long got = 0;
        for (const VertexPath& path : k.opt_solution.paths)
            for (VertexPath& piece : split_long_path(path)) {
                for (int v : piece) {
                    assert(!seen[v]);
                    seen[v] = 1;
                }
                got += static_cast<long long>(piece.size());
                out.paths.push_back(std::move(piece));
            }
        assert(got == k.opt_value);
        out.value += got;
    }
    return out;
}

Solution recurse_and_combine(const Graph& g, const HcState& st, const Census& census,
                             SolveStats* stats) {
    SolveStats local;
    Solution out = recurse_level(g, st, census, local, 0, nullptr);
    if (stats) {
        stats->depth = std::max(stats->depth, local.depth);
        stats->moves += local.moves;
    }
    return out;
}

Solution solve(const Graph& g) {
    SolveStats stats;
    return solve(g, stats);
}

Solution solve(const Graph& g, SolveStats& stats, std::vector<std::string>* trace) {
    stats = SolveStats{};
    return solve_level(g, stats, 0, trace);
}

}  // namespace mpc
