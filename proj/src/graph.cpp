#include "mpc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mpc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::unordered_set<std::uint64_t> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (!seen.insert(EdgeSet::key(u, v)).second)
            throw GraphError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    g.m = static_cast<long long>(edges.size());
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int t = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph load_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1, read_edges = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw GraphError("line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw GraphError("line " + std::to_string(lineno) + ": malformed header");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw GraphError("line " + std::to_string(lineno) + ": edge before header");
            long long u, v;
            if (!(ls >> u >> v))
                throw GraphError("line " + std::to_string(lineno) + ": malformed edge");
            if (u < 1 || u > n || v < 1 || v > n)
                throw GraphError("line " + std::to_string(lineno) + ": endpoint out of range");
            if (u == v) throw GraphError("line " + std::to_string(lineno) + ": self-loop");
            ++read_edges;
            if (read_edges > m)
                throw GraphError("line " + std::to_string(lineno) + ": more edges than declared");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw GraphError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
    if (n < 0) throw GraphError("missing 'p' header");
    if (read_edges != m)
        throw GraphError("declared " + std::to_string(m) + " edges but found " +
                         std::to_string(read_edges));
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!seen.insert(EdgeSet::key(edges[i].first, edges[i].second)).second)
            throw GraphError("duplicate edge (" + std::to_string(edges[i].first + 1) + ", " +
                             std::to_string(edges[i].second + 1) + ")");
    return Graph::from_edges(n, edges);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return load_graph(in);
}

void dump_graph(const Graph& g, std::ostream& out) {
    out << "p " << g.n << " " << g.m << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    InducedSubgraph res;
    res.to_old = keep;
    std::sort(res.to_old.begin(), res.to_old.end());
    res.to_old.erase(std::unique(res.to_old.begin(), res.to_old.end()), res.to_old.end());
    for (int v : res.to_old)
        if (v < 0 || v >= g.n) throw GraphError("induced vertex out of range");
    res.to_new.assign(g.n, -1);
    for (int i = 0; i < static_cast<int>(res.to_old.size()); ++i) res.to_new[res.to_old[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(res.to_old.size()); ++i)
        for (int w : g.adj[res.to_old[i]]) {
            int j = res.to_new[w];
            if (j > i) edges.emplace_back(i, j);
        }
    res.graph = Graph::from_edges(static_cast<int>(res.to_old.size()), edges);
    return res;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

ShapeInfo classify_component(const Graph& g, const std::vector<int>& comp) {
    ShapeInfo info;
    info.order = static_cast<int>(comp.size());
    if (comp.empty()) throw GraphError("empty component");
    std::unordered_set<int> members(comp.begin(), comp.end());
    long long deg_sum = 0;
    int max_deg = 0, max_deg_v = -1, big = 0, leaves = 0;
    for (int v : comp) {
        int d = 0;
        for (int w : g.adj[v])
            if (members.count(w)) ++d;
        deg_sum += d;
        if (d > max_deg) max_deg = d, max_deg_v = v;
        if (d >= 2) ++big;
        if (d == 1) ++leaves;
        if (d == 0 && info.order > 1) throw GraphError("component not connected");
    }
    long long edges = deg_sum / 2;
    if (info.order == 1) {
        info.shape = Shape::IsolatedVertex;
        return info;
    }
    if (info.order == 2) {
        info.shape = Shape::Edge;
        return info;
    }
    if (info.order == 3 && edges == 3) {
        info.shape = Shape::Triangle;
        return info;
    }
    bool tree = edges == info.order - 1;
    if (tree && big <= 1) {
        info.shape = Shape::Star;
        info.center = max_deg_v;
        return info;
    }
    if (tree && leaves == 2 && max_deg == 2) {
        info.shape = Shape::Path;
        return info;
    }
    if (edges == info.order && max_deg == 2) {
        info.shape = Shape::Cycle;
        return info;
    }
    info.shape = Shape::Other;
    return info;
}

std::vector<VertexPath> split_long_path(const VertexPath& path) {
    int len = static_cast<int>(path.size());
    if (len < 4) throw GraphError("cannot split path with fewer than 4 vertices");
    std::vector<VertexPath> pieces;
    int pos = 0;
    while (len - pos > 7) {
        // 8..10 left: a 7 would strand fewer than 4, so peel a 4 instead.
        int take = (len - pos >= 11) ? 7 : 4;
        pieces.emplace_back(path.begin() + pos, path.begin() + pos + take);
        pos += take;
    }
    pieces.emplace_back(path.begin() + pos, path.end());
    return pieces;
}

std::vector<std::pair<int, int>> EdgeSet::sorted_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(keys.size());
    for (std::uint64_t k : keys)
        out.emplace_back(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mpc
