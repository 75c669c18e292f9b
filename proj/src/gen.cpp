#include "mpc/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mpc {

Graph gen_gnm(int n, long long m, std::uint64_t seed) {
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m) throw GraphError("gnm: edge count out of range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n > 0 ? n - 1 : 0);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<int, int>> edges;
    while (static_cast<long long>(edges.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (!seen.insert(EdgeSet::key(u, v)).second) continue;
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph gen_regular(int n, int d, std::uint64_t seed) {
    if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw GraphError("regular: need 0 <= d < n and n*d even");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs[static_cast<std::size_t>(v) * d + k] = v;
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.insert(EdgeSet::key(u, v)).second) {
                ok = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (ok) return Graph::from_edges(n, edges);
    }
    throw GraphError("regular: failed to sample a simple graph");
}

Graph gen_planted_paths(int n, int paths, long long noise, std::uint64_t seed) {
    if (paths < 0 || 4 * paths > n) throw GraphError("planted: paths do not fit");
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> order_dist(4, 7);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<int, int>> edges;
    int pos = 0;
    for (int p = 0; p < paths; ++p) {
        int left = n - pos;
        int reserve = 4 * (paths - 1 - p);
        int order = std::min(order_dist(rng), left - reserve);
        for (int i = 1; i < order; ++i) {
            int u = perm[pos + i - 1], v = perm[pos + i];
            seen.insert(EdgeSet::key(u, v));
            edges.emplace_back(u, v);
        }
        pos += order;
    }
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (noise < 0 || static_cast<long long>(edges.size()) + noise > max_m)
        throw GraphError("planted: noise out of range");
    std::uniform_int_distribution<int> pick(0, n > 0 ? n - 1 : 0);
    long long added = 0;
    while (added < noise) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (!seen.insert(EdgeSet::key(u, v)).second) continue;
        edges.emplace_back(u, v);
        ++added;
    }
    return Graph::from_edges(n, edges);
}

}  // namespace mpc
