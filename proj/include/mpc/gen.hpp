#pragma once

#include <cstdint>

#include "mpc/graph.hpp"

namespace mpc {

// Uniform random graph with exactly m distinct edges.
Graph gen_gnm(int n, long long m, std::uint64_t seed);

// Random d-regular simple graph via the pairing model (resampled until simple).
Graph gen_regular(int n, int d, std::uint64_t seed);

// `paths` vertex-disjoint paths of random order 4..7 on shuffled vertex ids,
// plus `noise` additional random edges. Guarantees opt >= 4*paths.
Graph gen_planted_paths(int n, int paths, long long noise, std::uint64_t seed);

}  // namespace mpc
