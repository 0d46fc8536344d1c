#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpbench/analytic.hpp"
#include "lpbench/graph.hpp"

namespace lpbench {

/// Adjacency view over the observed edge set E_O. Non-oracle predictors see
/// nothing else, so they cannot depend on held-out edges.
class ObservedGraph {
  public:
    ObservedGraph(std::uint32_t n_nodes, std::span<const Edge> edges);

    std::uint32_t n_nodes() const { return static_cast<std::uint32_t>(adjacency_.size()); }
    std::span<const std::uint32_t> neighbors(std::uint32_t u) const;
    std::size_t degree(std::uint32_t u) const { return neighbors(u).size(); }

  private:
    std::vector<std::vector<std::uint32_t>> adjacency_; // sorted per node
};

/// Sum over common neighbours w of 1 / ln(deg(w)); 0 without common
/// neighbours. Degrees are taken in the observed graph (a common neighbour
/// always has degree >= 2 there).
double adamic_adar(const ObservedGraph& observed, const Edge& pair);

/// |Gamma(u) n Gamma(v)| as a real.
double common_neighbors(const ObservedGraph& observed, const Edge& pair);

/// |Gamma(u) n Gamma(v)| / |Gamma(u) u Gamma(v)|; 0 when the union is empty.
double jaccard(const ObservedGraph& observed, const Edge& pair);

/// Ideal predictor: 1 for within-structure pairs joined by the link
/// function, D_B/N_S for structure-bridge pairs, 0 otherwise. Reads roles
/// and the link function from the generation metadata.
double oracle_ideal_score(const SyntheticGraph& graph, const Edge& pair);

/// Planted-SBM predictor: q within a structure, p for structure-bridge
/// pairs, 0 otherwise.
double planted_sbm_score(const SyntheticGraph& graph, const PlantedProbabilities& probs,
                         const Edge& pair);

/// Stateless pseudo-random score in [0, 1) from hash(seed, pair).
double random_score(std::uint64_t seed, const Edge& pair);

/// A named score table over unique pairs.
struct ScoredPairs {
    std::string predictor_name;
    std::vector<std::pair<Edge, double>> entries;
};

/// Score file: "u<TAB>v<TAB>score" per line, '#' comments; an optional
/// "# predictor=NAME" names the table (file stem otherwise). Pairs are
/// normalized to u < v; malformed lines, non-finite scores and duplicate
/// pairs raise DataError with the offending line or pair.
ScoredPairs import_scores(const std::filesystem::path& path);
void write_scores(const std::filesystem::path& path, const ScoredPairs& scores,
                  std::span<const std::string> extra_comments = {});

/// Everything a registered predictor may look at.
struct PredictorContext {
    const SyntheticGraph* graph = nullptr; // generation metadata, oracles only
    const ObservedGraph* observed = nullptr;
    PlantedProbabilities probs;
    std::uint64_t random_seed = 0;
};

using ScoreFunction = double (*)(const PredictorContext&, const Edge&);

/// Registered predictor names, in canonical order.
std::span<const std::string> predictor_names();

/// Looks a predictor up by name; throws ConfigError for unknown names.
ScoreFunction predictor_by_name(const std::string& name);

/// True for predictors that read generation metadata (oracles).
bool predictor_needs_metadata(const std::string& name);

} // namespace lpbench
