#include "lpbench/split.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lpbench/rng.hpp"

namespace lpbench {

namespace {

std::uint64_t pair_key(const Edge& e, std::uint64_t n) {
    return static_cast<std::uint64_t>(e.u) * n + e.v;
}

// First `count` entries of a seeded partial Fisher-Yates shuffle.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::uint64_t count, Rng& rng) {
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

} // namespace

EdgeSplit split_edges(const SyntheticGraph& graph, double holdout_fraction, std::uint64_t seed) {
    if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0))
        throw ConfigError("holdout fraction must lie strictly between 0 and 1");
    const std::uint64_t n_edges = graph.edges.size();
    if (n_edges == 0) throw ConfigError("cannot split a graph without edges");

    const auto n_heldout =
        static_cast<std::uint64_t>(std::floor(holdout_fraction * static_cast<double>(n_edges) + 0.5));

    std::vector<std::uint64_t> indices(n_edges);
    for (std::uint64_t i = 0; i < n_edges; ++i) indices[i] = i;
    Rng rng(seed);
    auto chosen = sample_without_replacement(std::move(indices), n_heldout, rng);
    std::vector<char> is_heldout(n_edges, 0);
    for (const auto i : chosen) is_heldout[i] = 1;

    EdgeSplit split;
    split.heldout.reserve(n_heldout);
    split.observed.reserve(n_edges - n_heldout);
    for (std::uint64_t i = 0; i < n_edges; ++i)
        (is_heldout[i] ? split.heldout : split.observed).push_back(graph.edges[i]);
    return split;
}

std::vector<Edge> sample_negatives(const SyntheticGraph& graph, std::uint64_t count,
                                   std::uint64_t seed) {
    const std::uint64_t n = graph.n_nodes();
    const std::uint64_t non_edges = graph.n_pairs() - graph.edges.size();
    if (count > non_edges)
        throw ConfigError("requested " + std::to_string(count) + " negatives but only " +
                          std::to_string(non_edges) + " non-edges exist");
    if (count == 0) return {};

    Rng rng(seed);
    std::vector<Edge> sample;
    sample.reserve(count);

    if (non_edges < 10 * count) {
        // Dense regime: enumerate every non-edge, walking the sorted edge
        // list alongside the lexicographic pair stream.
        std::vector<Edge> pool;
        pool.reserve(non_edges);
        auto next_edge = graph.edges.begin();
        for (std::uint32_t u = 0; u + 1 < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) {
                if (next_edge != graph.edges.end() && next_edge->u == u && next_edge->v == v) {
                    ++next_edge;
                    continue;
                }
                pool.push_back({u, v});
            }
        sample = sample_without_replacement(std::move(pool), count, rng);
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(count * 2);
        while (sample.size() < count) {
            const auto a = static_cast<std::uint32_t>(rng.below(n));
            const auto b = static_cast<std::uint32_t>(rng.below(n));
            if (a == b) continue;
            const Edge e = a < b ? Edge{a, b} : Edge{b, a};
            if (graph.has_edge(e.u, e.v)) continue;
            if (!seen.insert(pair_key(e, n)).second) continue;
            sample.push_back(e);
        }
    }
    std::sort(sample.begin(), sample.end());
    return sample;
}

EvalSet make_eval_set(const SyntheticGraph& graph, double holdout_fraction, std::uint64_t seed) {
    EvalSet set;
    set.seed = seed;
    auto split = split_edges(graph, holdout_fraction, mix_seed(seed, 1));
    set.observed = std::move(split.observed);
    set.heldout = std::move(split.heldout);
    set.negatives = sample_negatives(graph, set.heldout.size(), mix_seed(seed, 2));
    return set;
}

} // namespace lpbench
