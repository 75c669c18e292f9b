#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mpc {

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simple undirected graph, vertices 0..n-1, adjacency lists kept sorted.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;

    // Validates range, rejects self-loops and duplicates.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    bool has_edge(int u, int v) const;
    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
};

// Text format: optional 'c' comment lines, one 'p <n> <m>' header, then exactly
// m lines 'e <u> <v>' with 1-based endpoints. Errors carry 1-based line numbers.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void dump_graph(const Graph& g, std::ostream& out);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old;  // new id -> old id, increasing
    std::vector<int> to_new;  // old id -> new id, -1 if dropped
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Vertex sets of connected components; components ordered by smallest member,
// members ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

enum class Shape { IsolatedVertex, Edge, Path, Cycle, Star, Triangle, Other };

struct ShapeInfo {
    Shape shape;
    int order = 0;
    int center = -1;  // star center, else -1
};

// Shape of the subgraph induced by comp (which must be connected in g).
// A triangle is not reported as a cycle, a single edge is not a star, and a
// 3-vertex path counts as a star (one vertex of degree >= 2, centre in the
// middle), matching how such components behave downstream.
ShapeInfo classify_component(const Graph& g, const std::vector<int>& comp);

using VertexPath = std::vector<int>;

struct Solution {
    std::vector<VertexPath> paths;
    long long value = 0;
};

// Splits a path with >= 4 vertices into consecutive pieces of 4..7 vertices:
// greedy 7s, with the final two pieces rebalanced when the remainder would
// drop below 4. Piece count is ceil(len/7).
std::vector<VertexPath> split_long_path(const VertexPath& path);

// Unordered-pair set keyed on packed endpoints.
struct EdgeSet {
    std::unordered_set<std::uint64_t> keys;

    static std::uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }
    bool contains(int u, int v) const { return keys.count(key(u, v)) != 0; }
    void insert(int u, int v) { keys.insert(key(u, v)); }
    void erase(int u, int v) { keys.erase(key(u, v)); }
    std::size_t size() const { return keys.size(); }
    // Pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> sorted_edges() const;
};

}  // namespace mpc
