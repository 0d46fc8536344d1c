#include "lpbench/predict.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "lpbench/eval.hpp"
#include "lpbench/split.hpp"
#include "test_support.hpp"

using namespace lpbench;
using lpbench::testing::spec_of;

namespace {

ObservedGraph from_edges(std::uint32_t n, std::vector<Edge> edges) {
    return ObservedGraph(n, edges);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST(AdamicAdar, SingleCommonNeighborPath) {
    const auto observed = from_edges(3, {{0, 1}, {1, 2}});
    EXPECT_NEAR(adamic_adar(observed, {0, 2}), 1.0 / std::log(2.0), 1e-15);
}

TEST(AdamicAdar, DisjointNeighborhoods) {
    const auto observed = from_edges(4, {{0, 1}, {2, 3}});
    EXPECT_DOUBLE_EQ(adamic_adar(observed, {0, 2}), 0.0);
}

TEST(AdamicAdar, CompleteGraphPair) {
    // K4: pair (0,1) shares neighbours {2, 3}, both of degree 3.
    const auto observed = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_NEAR(adamic_adar(observed, {0, 1}), 2.0 / std::log(3.0), 1e-15);
}

TEST(AdamicAdar, LatticeWithoutBridgesHasNoSignal) {
    // Pure 2d lattices are triangle-free: adjacent pairs share no neighbour.
    const auto graph = generate(spec_of(0, 0.0, 1, StructureKind::make_lattice(), 4, 0));
    const ObservedGraph observed(graph.n_nodes(), graph.edges);
    for (const auto& e : graph.edges) EXPECT_DOUBLE_EQ(adamic_adar(observed, e), 0.0);
}

TEST(CommonNeighborsAndJaccard, Examples) {
    const auto disjoint = from_edges(4, {{0, 1}, {2, 3}});
    EXPECT_DOUBLE_EQ(common_neighbors(disjoint, {0, 2}), 0.0);
    EXPECT_DOUBLE_EQ(jaccard(disjoint, {0, 2}), 0.0);

    // Nodes 0 and 1 both see exactly {2, 3, 4}.
    const auto shared =
        from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    EXPECT_DOUBLE_EQ(common_neighbors(shared, {0, 1}), 3.0);
    EXPECT_DOUBLE_EQ(jaccard(shared, {0, 1}), 1.0);

    // K4 pair: two common neighbours over a union of four nodes.
    const auto k4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_DOUBLE_EQ(common_neighbors(k4, {0, 1}), 2.0);
    EXPECT_DOUBLE_EQ(jaccard(k4, {0, 1}), 0.5);
}

TEST(OracleIdeal, ScoresByClass) {
    const auto spec = spec_of(2560, 12.0, 10, StructureKind::make_lattice(), 8, 3);
    const auto graph = generate(spec);
    EXPECT_DOUBLE_EQ(oracle_ideal_score(graph, {0, 1}), 1.0);   // lattice neighbours
    EXPECT_DOUBLE_EQ(oracle_ideal_score(graph, {0, 9}), 0.0);   // same lattice, no link
    EXPECT_DOUBLE_EQ(oracle_ideal_score(graph, {0, 64}), 0.0);  // different structures
    EXPECT_DOUBLE_EQ(oracle_ideal_score(graph, {0, 640}), 0.01875);   // structure-bridge
    EXPECT_DOUBLE_EQ(oracle_ideal_score(graph, {640, 641}), 0.0);     // bridge-bridge
}

TEST(PlantedScore, ScoresByClass) {
    const auto spec = spec_of(100, 3.0, 4, StructureKind::make_lattice(), 4, 3);
    const auto graph = generate(spec);
    const auto probs = planted_probabilities(spec);
    EXPECT_DOUBLE_EQ(planted_sbm_score(graph, probs, {0, 15}), probs.q); // same structure
    EXPECT_DOUBLE_EQ(planted_sbm_score(graph, probs, {0, 16}), 0.0);     // across structures
    EXPECT_DOUBLE_EQ(planted_sbm_score(graph, probs, {0, 64}), probs.p); // structure-bridge
    EXPECT_DOUBLE_EQ(planted_sbm_score(graph, probs, {64, 65}), 0.0);    // bridge-bridge
}

TEST(RandomScore, DeterministicAndNearlyCollisionFree) {
    EXPECT_DOUBLE_EQ(random_score(7, {1, 2}), random_score(7, {1, 2}));
    EXPECT_NE(random_score(7, {1, 2}), random_score(8, {1, 2}));

    std::set<double> seen;
    std::size_t collisions = 0;
    for (std::uint32_t u = 0; u < 1000; ++u)
        for (std::uint32_t v = u + 1; v < u + 1001; ++v)
            if (!seen.insert(random_score(7, {u, v})).second) ++collisions;
    EXPECT_LE(collisions, 3u); // ~1e6 draws of 53-bit values
}

TEST(RandomScore, NullModelAucNearHalf) {
    const auto graph = generate(spec_of(400, 8.0, 8, StructureKind::make_lattice(), 4, 5));
    const auto set = make_eval_set(graph, 0.1, 6);
    std::vector<double> positives, negatives;
    for (const auto& e : set.heldout) positives.push_back(random_score(3, e));
    for (const auto& e : set.negatives) negatives.push_back(random_score(3, e));
    const double n = static_cast<double>(positives.size());
    // Null-model AUC stderr for balanced samples: sqrt((2n + 1) / (12 n^2)).
    const double stderr_auc = std::sqrt((2.0 * n + 1.0) / (12.0 * n * n));
    EXPECT_NEAR(auc(positives, negatives), 0.5, 4.0 * stderr_auc);
}

TEST(ImportScores, ParsesAndNormalizes) {
    const auto path = temp_file("lpbench_scores_ok.tsv");
    {
        std::ofstream out(path);
        out << "# predictor=external\n";
        out << "0\t5\t0.93\n";
        out << "7\t2\t0.25\n"; // normalized to (2, 7)
        out << "1\t3\t-4.5e-2\n";
    }
    const auto scores = import_scores(path);
    EXPECT_EQ(scores.predictor_name, "external");
    ASSERT_EQ(scores.entries.size(), 3u);
    EXPECT_EQ(scores.entries[1].first, (Edge{2, 7}));
    EXPECT_DOUBLE_EQ(scores.entries[1].second, 0.25);
    EXPECT_DOUBLE_EQ(scores.entries[2].second, -0.045);
    std::filesystem::remove(path);
}

TEST(ImportScores, RoundTripsThroughWriter) {
    const auto path = temp_file("lpbench_scores_roundtrip.tsv");
    ScoredPairs scores;
    scores.predictor_name = "roundtrip";
    scores.entries = {{{0, 1}, 0.125}, {{0, 2}, 3.0}, {{5, 9}, 1e-9}};
    write_scores(path, scores);
    const auto back = import_scores(path);
    EXPECT_EQ(back.predictor_name, scores.predictor_name);
    EXPECT_EQ(back.entries, scores.entries);
    std::filesystem::remove(path);
}

TEST(ImportScores, RejectsMalformedInput) {
    const auto path = temp_file("lpbench_scores_bad.tsv");

    const auto write_and_expect_throw = [&](const std::string& body, const char* what) {
        std::ofstream(path) << body;
        EXPECT_THROW(import_scores(path), DataError) << what;
    };
    write_and_expect_throw("0\t1\n", "missing score field");
    write_and_expect_throw("0\t1\tabc\n", "unparsable score");
    write_and_expect_throw("0\t1\tnan\n", "non-finite score");
    write_and_expect_throw("0\t0\t0.5\n", "self-loop");
    write_and_expect_throw("0\t1\t0.5\n1\t0\t0.25\n", "duplicate pair after normalization");
    std::filesystem::remove(path);
}

TEST(ImportScores, ReportsLineNumbers) {
    const auto path = temp_file("lpbench_scores_line.tsv");
    std::ofstream(path) << "0\t1\t0.5\n0\t2\t0.5\nbroken\n";
    try {
        import_scores(path);
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
    }
    std::filesystem::remove(path);
}

TEST(Registry, KnowsAllPredictors) {
    const std::vector<std::string> expected{"adamic-adar", "common-neighbors", "jaccard",
                                            "oracle-ideal", "planted-sbm", "random"};
    const auto names = predictor_names();
    EXPECT_EQ(std::vector<std::string>(names.begin(), names.end()), expected);
    for (const auto& name : expected) EXPECT_NE(predictor_by_name(name), nullptr);
    EXPECT_THROW(predictor_by_name("node2vec"), ConfigError);
    EXPECT_TRUE(predictor_needs_metadata("oracle-ideal"));
    EXPECT_TRUE(predictor_needs_metadata("planted-sbm"));
    EXPECT_FALSE(predictor_needs_metadata("adamic-adar"));
}

TEST(Registry, OraclesRequireMetadata) {
    PredictorContext ctx; // no graph attached
    const auto observed = from_edges(3, {{0, 1}});
    ctx.observed = &observed;
    EXPECT_THROW(predictor_by_name("oracle-ideal")(ctx, {0, 1}), ConfigError);
    EXPECT_THROW(predictor_by_name("planted-sbm")(ctx, {0, 1}), ConfigError);
    EXPECT_NO_THROW(predictor_by_name("adamic-adar")(ctx, {0, 1}));
}
