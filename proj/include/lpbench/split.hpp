#pragma once

#include <cstdint>
#include <vector>

#include "lpbench/graph.hpp"

namespace lpbench {

/// Observed/held-out edge partition plus the balanced negative sample.
/// Invariants: observed and heldout partition the graph's edge set;
/// negatives are non-edges; |negatives| == |heldout|.
struct EvalSet {
    std::vector<Edge> observed;
    std::vector<Edge> heldout;
    std::vector<Edge> negatives;
    std::uint64_t seed = 0;
};

struct EdgeSplit {
    std::vector<Edge> observed;
    std::vector<Edge> heldout;
};

/// Uniformly samples round(holdout_fraction * |E|) edges (half-up rounding)
/// without replacement into heldout; the rest stay observed. Deterministic
/// per seed. Throws ConfigError unless 0 < holdout_fraction < 1 and the
/// graph has edges.
EdgeSplit split_edges(const SyntheticGraph& graph, double holdout_fraction, std::uint64_t seed);

/// Uniform sample of `count` distinct non-existing pairs, any class.
/// Rejection sampling, switching to full enumeration when fewer than
/// 10 * count non-edges exist. Throws ConfigError when count exceeds the
/// number of non-edges.
std::vector<Edge> sample_negatives(const SyntheticGraph& graph, std::uint64_t count,
                                   std::uint64_t seed);

/// Splits and draws |heldout| negatives using sub-seeds derived from `seed`.
EvalSet make_eval_set(const SyntheticGraph& graph, double holdout_fraction, std::uint64_t seed);

} // namespace lpbench
