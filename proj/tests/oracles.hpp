#pragma once

// Test-side oracles, deliberately written with different algorithmics than the
// library: set packing over path masks, plain recursion over vertices/edges.
// Small n only.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mpc/graph.hpp"

namespace oracle {

// All distinct vertex sets of simple paths with 4..7 vertices.
inline std::vector<std::uint32_t> path_masks(const mpc::Graph& g) {
    std::set<std::uint32_t> masks;
    std::vector<int> walk;
    std::uint32_t used = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        walk.push_back(v);
        used |= 1u << v;
        if (walk.size() >= 4) masks.insert(used);
        if (walk.size() < 7)
            for (int w : g.adj[v])
                if (!(used >> w & 1)) self(self, w);
        used &= ~(1u << v);
        walk.pop_back();
    };
    for (int v = 0; v < g.n; ++v) dfs(dfs, v);
    return {masks.begin(), masks.end()};
}

// Maximum vertices coverable by disjoint 4..7-vertex paths (n <= ~12).
inline int brute_path_cover_opt(const mpc::Graph& g) {
    auto masks = path_masks(g);
    int best = 0;
    std::uint32_t all = g.n >= 32 ? ~0u : ((1u << g.n) - 1);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t used, int got) -> void {
        best = std::max(best, got);
        if (i == masks.size() || got + std::popcount(all & ~used) <= best) return;
        if ((masks[i] & used) == 0)
            self(self, i + 1, used | masks[i], got + std::popcount(masks[i]));
        self(self, i + 1, used, got);
    };
    rec(rec, 0, 0, 0);
    return best;
}

// Maximum matching size by recursion over the lowest unmatched vertex (n <= ~12).
inline int brute_matching_size(const mpc::Graph& g, std::uint32_t used = 0, int from = 0) {
    int v = -1;
    for (int i = from; i < g.n; ++i)
        if (!(used >> i & 1)) {
            v = i;
            break;
        }
    if (v < 0) return 0;
    int best = brute_matching_size(g, used | (1u << v), v + 1);  // leave v single
    for (int w : g.adj[v])
        if (w > v && !(used >> w & 1))
            best = std::max(best, 1 + brute_matching_size(g, used | (1u << v) | (1u << w), v + 1));
    return best;
}

// Max-weight perfect matching value over explicit edges, or nullopt (n <= ~10).
inline std::optional<long long> brute_perfect_matching(
    int n, const std::vector<std::pair<int, int>>& edges, const std::vector<long long>& w) {
    std::optional<long long> best;
    auto rec = [&](auto&& self, std::uint32_t used, long long got) -> void {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (!(used >> i & 1)) {
                v = i;
                break;
            }
        if (v < 0) {
            if (!best || got > *best) best = got;
            return;
        }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            int other = a == v ? b : (b == v ? a : -1);
            if (other < 0 || (used >> other & 1)) continue;
            self(self, used | (1u << v) | (1u << other), got + w[e]);
        }
    };
    rec(rec, 0, 0);
    return best;
}

// Maximum number of saturated groups over subgraphs of the given edges with
// all degrees <= 2. group[v] = group id or -1; a group is saturated when some
// selected edge touches it (n <= ~10, few groups).
inline int brute_saturation_weight(int n, const std::vector<std::pair<int, int>>& edges,
                                   const std::vector<int>& group) {
    std::vector<int> deg(n, 0);
    int best = 0;
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t covered) -> void {
        best = std::max(best, std::popcount(covered));
        if (i == edges.size()) return;
        self(self, i + 1, covered);
        auto [u, v] = edges[i];
        if (deg[u] < 2 && deg[v] < 2) {
            ++deg[u];
            ++deg[v];
            std::uint32_t add = 0;
            if (group[u] >= 0) add |= 1u << group[u];
            if (group[v] >= 0) add |= 1u << group[v];
            self(self, i + 1, covered | add);
            --deg[u];
            --deg[v];
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace oracle
