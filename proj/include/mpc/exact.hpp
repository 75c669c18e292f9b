#pragma once

#include <cstdint>

#include "mpc/graph.hpp"

namespace mpc {

struct ExactConfig {
    int cap = 20;               // refuse larger inputs outright
    long long budget_ms = 60000;  // wall-clock budget; exceeded -> best found so far
};

struct ExactResult {
    Solution sol;
    bool exact = true;
};

// Maximum total number of vertices coverable by vertex-disjoint paths of
// 4..7 vertices (longer paths never help: any path splits into such pieces).
// Branch and bound over "discard lowest free vertex or route a path through
// it", with incumbent bound and same-vertex-set dominance pruning.
ExactResult exact_opt(const Graph& g, const ExactConfig& cfg = {});

// True iff sol is a valid packing in g: disjoint simple paths, consecutive
// vertices adjacent, each path 4..7 vertices, value consistent.
bool verify_solution(const Graph& g, const Solution& sol, std::string* why = nullptr);

}  // namespace mpc
