#include "lpbench/predict.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "lpbench/rng.hpp"
#include "lpbench/text.hpp"

namespace lpbench {

ObservedGraph::ObservedGraph(std::uint32_t n_nodes, std::span<const Edge> edges)
    : adjacency_(n_nodes) {
    for (const auto& e : edges) {
        if (e.v >= n_nodes)
            throw ConfigError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") out of range for N = " + std::to_string(n_nodes));
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const std::uint32_t> ObservedGraph::neighbors(std::uint32_t u) const {
    if (u >= adjacency_.size())
        throw ConfigError("node " + std::to_string(u) + " out of range");
    return adjacency_[u];
}

namespace {

// Applies `fn` to every common neighbour of the pair (sorted-list merge).
template <typename Fn>
void for_common_neighbors(const ObservedGraph& g, const Edge& pair, Fn&& fn) {
    const auto nu = g.neighbors(pair.u);
    const auto nv = g.neighbors(pair.v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
            ++i;
        } else if (nv[j] < nu[i]) {
            ++j;
        } else {
            fn(nu[i]);
            ++i;
            ++j;
        }
    }
}

} // namespace

double adamic_adar(const ObservedGraph& observed, const Edge& pair) {
    double score = 0.0;
    for_common_neighbors(observed, pair, [&](std::uint32_t w) {
        score += 1.0 / std::log(static_cast<double>(observed.degree(w)));
    });
    return score;
}

double common_neighbors(const ObservedGraph& observed, const Edge& pair) {
    double count = 0.0;
    for_common_neighbors(observed, pair, [&](std::uint32_t) { count += 1.0; });
    return count;
}

double jaccard(const ObservedGraph& observed, const Edge& pair) {
    const double shared = common_neighbors(observed, pair);
    const auto nu = observed.neighbors(pair.u);
    const auto nv = observed.neighbors(pair.v);
    const double unioned = static_cast<double>(nu.size() + nv.size()) - shared;
    return unioned == 0.0 ? 0.0 : shared / unioned;
}

double oracle_ideal_score(const SyntheticGraph& graph, const Edge& pair) {
    const NodeRole ru = graph.role_of(pair.u), rv = graph.role_of(pair.v);
    if (ru.is_bridge() && rv.is_bridge()) return 0.0;
    if (ru.is_bridge() || rv.is_bridge()) return graph.spec.bridge_link_probability();
    if (ru.structure != rv.structure) return 0.0;
    const std::uint64_t base = static_cast<std::uint64_t>(ru.structure - 1) * graph.spec.structure_size();
    return structure_link(graph.spec.kind, graph.spec.k, pair.u - base, pair.v - base) ? 1.0 : 0.0;
}

double planted_sbm_score(const SyntheticGraph& graph, const PlantedProbabilities& probs,
                         const Edge& pair) {
    const NodeRole ru = graph.role_of(pair.u), rv = graph.role_of(pair.v);
    if (ru.is_bridge() && rv.is_bridge()) return 0.0;
    if (ru.is_bridge() || rv.is_bridge()) return probs.p;
    return ru.structure == rv.structure ? probs.q : 0.0;
}

double random_score(std::uint64_t seed, const Edge& pair) {
    return to_unit_double(mix_seed(mix_seed(seed, pair.u), pair.v));
}

ScoredPairs import_scores(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "' for reading");

    ScoredPairs scores;
    scores.predictor_name = path.stem().string();
    std::unordered_set<std::uint64_t> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const auto body = trim(text.substr(1));
            constexpr std::string_view kPredictorKey = "predictor=";
            if (body.starts_with(kPredictorKey))
                scores.predictor_name = std::string(body.substr(kPredictorKey.size()));
            continue;
        }
        const auto fields = split_fields(text);
        if (fields.size() != 3)
            throw DataError(path.string() + ":" + std::to_string(line_no) +
                            ": expected 'u<TAB>v<TAB>score'");
        const std::uint64_t a = parse_u64(fields[0], "node index");
        const std::uint64_t b = parse_u64(fields[1], "node index");
        if (a == b)
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": self-loop pair");
        const double value = parse_double(fields[2], "score");
        if (!std::isfinite(value))
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": non-finite score");
        const Edge e = make_edge(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
        if (!seen.insert(key).second)
            throw DataError(path.string() + ": duplicate pair (" + std::to_string(e.u) + ", " +
                            std::to_string(e.v) + ")");
        scores.entries.emplace_back(e, value);
    }
    return scores;
}

void write_scores(const std::filesystem::path& path, const ScoredPairs& scores,
                  std::span<const std::string> extra_comments) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
    out << "# predictor=" << scores.predictor_name << "\n";
    for (const auto& comment : extra_comments) out << "# " << comment << "\n";
    for (const auto& [pair, value] : scores.entries)
        out << pair.u << "\t" << pair.v << "\t" << format_double(value) << "\n";
    if (!out) throw DataError("write failed for '" + path.string() + "'");
}

namespace {

const SyntheticGraph& require_metadata(const PredictorContext& ctx) {
    if (ctx.graph == nullptr)
        throw ConfigError("predictor requires generation metadata (graph spec and roles)");
    return *ctx.graph;
}

const ObservedGraph& require_observed(const PredictorContext& ctx) {
    if (ctx.observed == nullptr) throw ConfigError("predictor requires the observed graph");
    return *ctx.observed;
}

double scored_adamic_adar(const PredictorContext& ctx, const Edge& pair) {
    return adamic_adar(require_observed(ctx), pair);
}
double scored_common_neighbors(const PredictorContext& ctx, const Edge& pair) {
    return common_neighbors(require_observed(ctx), pair);
}
double scored_jaccard(const PredictorContext& ctx, const Edge& pair) {
    return jaccard(require_observed(ctx), pair);
}
double scored_oracle_ideal(const PredictorContext& ctx, const Edge& pair) {
    return oracle_ideal_score(require_metadata(ctx), pair);
}
double scored_planted_sbm(const PredictorContext& ctx, const Edge& pair) {
    return planted_sbm_score(require_metadata(ctx), ctx.probs, pair);
}
double scored_random(const PredictorContext& ctx, const Edge& pair) {
    return random_score(ctx.random_seed, pair);
}

struct PredictorEntry {
    std::string name;
    ScoreFunction fn;
    bool needs_metadata;
};

const std::array<PredictorEntry, 6>& registry() {
    static const std::array<PredictorEntry, 6> entries{{
        {"adamic-adar", scored_adamic_adar, false},
        {"common-neighbors", scored_common_neighbors, false},
        {"jaccard", scored_jaccard, false},
        {"oracle-ideal", scored_oracle_ideal, true},
        {"planted-sbm", scored_planted_sbm, true},
        {"random", scored_random, false},
    }};
    return entries;
}

const std::vector<std::string>& registry_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> list;
        for (const auto& entry : registry()) list.push_back(entry.name);
        return list;
    }();
    return names;
}

} // namespace

std::span<const std::string> predictor_names() { return registry_names(); }

ScoreFunction predictor_by_name(const std::string& name) {
    for (const auto& entry : registry())
        if (entry.name == name) return entry.fn;
    throw ConfigError("unknown predictor '" + name + "'");
}

bool predictor_needs_metadata(const std::string& name) {
    for (const auto& entry : registry())
        if (entry.name == name) return entry.needs_metadata;
    throw ConfigError("unknown predictor '" + name + "'");
}

} // namespace lpbench
