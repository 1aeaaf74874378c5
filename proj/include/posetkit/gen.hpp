#pragma once

#include "posetkit/poset.hpp"
#include "posetkit/rng.hpp"

namespace posetkit {

struct GenConfig {
    int n = 0;
    double edge_prob = 0.0; // in [0, 1]
    std::uint64_t seed = 0;
};

/// Random DAG on indices 0..n-1 (labels "e0".."e{n-1}"), closed into a
/// poset. Stream discipline, fixed forever because fixtures depend on it:
/// one splitmix64 draw per ordered pair (i, j) with i < j, i ascending
/// outer, j ascending inner; the edge i -> j is present iff
/// next_unit() < edge_prob. Identical configs give bit-identical posets.
Poset random_poset(const GenConfig& cfg);

} // namespace posetkit
