#pragma once

#include <optional>

#include "mpc/graph.hpp"

namespace mpc {

struct Matching {
    std::vector<int> mate;  // -1 when unmatched

    int size() const;
    bool covers(int v) const { return mate[v] >= 0; }
    // Pairs (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;
};

// Single-source alternating-tree search with blossom contraction. Exposed as
// a class because the cover module drives it incrementally on gadget graphs.
//
// Plain form: augment_from(root, mate) flips one augmenting path if it finds
// one; coverage only grows.
//
// With a releasable mask, the search additionally accepts alternating paths
// that end through the matched edge of a releasable vertex. Flipping such a
// path covers root and uncovers that vertex; everyone else stays covered.
// This is the move needed to trade low-priority coverage for root coverage.
class BlossomSearch {
public:
    explicit BlossomSearch(const Graph& g);
    bool augment_from(int root, std::vector<int>& mate,
                      const std::vector<char>* releasable = nullptr);

private:
    void mark_path(int v, int b, int child, const std::vector<int>& mate);
    int lca(int a, int b, const std::vector<int>& mate);
    void flip_to(int u, std::vector<int>& mate);

    const Graph& g_;
    std::vector<int> p_, base_, queue_;
    std::vector<char> used_, blossom_, lca_mark_;
};

Matching max_cardinality_matching(const Graph& g);

// True iff m is a valid matching of g admitting no augmenting path. The
// maximality check runs through an independent engine, not BlossomSearch.
bool is_maximum_matching(const Graph& g, const Matching& m);

// Maximum-weight perfect matching over explicit weighted edges; nullopt when
// no perfect matching exists. Weights may be negative.
struct WeightedMatchingResult {
    Matching matching;
    long long weight = 0;
};
std::optional<WeightedMatchingResult> max_weight_perfect_matching(
    int n, const std::vector<std::pair<int, int>>& edges, const std::vector<long long>& weights);

}  // namespace mpc
