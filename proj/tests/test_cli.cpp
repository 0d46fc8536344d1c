#include "lpbench/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "lpbench/graph_io.hpp"
#include "lpbench/text.hpp"

using namespace lpbench;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / "lpbench_cli_test";
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, GenerateWritesEdgeAndRoleFiles) {
    const auto edges = (dir_ / "g.edges").string();
    const auto result = cli({"generate", "--m", "4", "--k", "8", "--structure", "lattice-diag",
                             "--diagonals", "1", "--nb", "4", "--db", "5", "--seed", "1",
                             "--out", edges});
    ASSERT_EQ(result.code, 0) << result.err;
    const auto kv = parse_kv(result.out);
    EXPECT_EQ(kv.at("n_nodes"), "260"); // 4 * 64 + 4

    const auto graph = load_graph(edges, fs::path(edges).replace_extension(".roles"));
    EXPECT_EQ(graph.n_nodes(), 260u);
    EXPECT_EQ(graph.spec.kind, StructureKind::make_lattice_diag(1));
    EXPECT_EQ(graph.spec.seed, 1u);
}

TEST_F(CliTest, GenerateRejectsOverfullProbability) {
    const auto result = cli({"generate", "--db", "100", "--m", "1", "--k", "3", "--structure",
                             "clique", "--nb", "5", "--out", (dir_ / "x.edges").string()});
    EXPECT_EQ(result.code, 1);
    EXPECT_NE(result.err.find("D_B/N_S"), std::string::npos) << result.err;
    EXPECT_FALSE(fs::exists(dir_ / "x.edges"));
}

TEST_F(CliTest, GenerateIsByteDeterministic) {
    const auto a = (dir_ / "a.edges").string();
    const auto b = (dir_ / "b.edges").string();
    const std::vector<std::string> flags{"--m",  "3", "--k",    "4", "--structure", "lattice",
                                         "--nb", "9", "--db",   "2", "--seed",      "7"};
    auto args_a = flags;
    args_a.insert(args_a.begin(), "generate");
    args_a.insert(args_a.end(), {"--out", a});
    auto args_b = flags;
    args_b.insert(args_b.begin(), "generate");
    args_b.insert(args_b.end(), {"--out", b});
    ASSERT_EQ(cli(args_a).code, 0);
    ASSERT_EQ(cli(args_b).code, 0);
    // Identical apart from the provenance line naming the output path.
    auto edges_a = read_edge_list(a);
    auto edges_b = read_edge_list(b);
    EXPECT_EQ(edges_a.edges, edges_b.edges);
    EXPECT_EQ(read_file(fs::path(a).replace_extension(".roles")),
              read_file(fs::path(b).replace_extension(".roles")));
}

TEST_F(CliTest, AnalyticPrintsCeilings) {
    const auto result = cli({"analytic", "--m", "10", "--k", "8", "--structure", "lattice",
                             "--nb", "2560", "--db", "12", "--format", "kv"});
    ASSERT_EQ(result.code, 0) << result.err;
    const auto kv = parse_kv(result.out);
    EXPECT_NEAR(parse_double(kv.at("ideal_auc"), "auc"), 0.8475267722968907, 1e-12);
    EXPECT_NEAR(parse_double(kv.at("planted_auc"), "auc"), 0.8438494096730073, 1e-12);
    EXPECT_DOUBLE_EQ(parse_double(kv.at("p"), "p"), 0.01875);
}

TEST_F(CliTest, CensusAnalyticAndEmpiricalAgree) {
    const auto edges = (dir_ / "g.edges").string();
    ASSERT_EQ(cli({"generate", "--m", "5", "--k", "4", "--structure", "clique", "--nb", "20",
                   "--db", "3", "--seed", "2", "--out", edges})
                  .code,
              0);
    const auto analytic = cli({"census", "--m", "5", "--k", "4", "--structure", "clique",
                               "--nb", "20", "--db", "3", "--format", "kv"});
    const auto empirical = cli({"census", "--graph", edges, "--format", "kv"});
    ASSERT_EQ(analytic.code, 0);
    ASSERT_EQ(empirical.code, 0);
    const auto kv_a = parse_kv(analytic.out);
    const auto kv_e = parse_kv(empirical.out);
    EXPECT_EQ(kv_a.at("e_ss_existing"), kv_e.at("e_ss_existing"));
    EXPECT_EQ(kv_a.at("e_bl_missing"), kv_e.at("e_bl_missing"));
    EXPECT_EQ(kv_e.at("e_ss_existing"), "30"); // 5 cliques of 6 edges
}

TEST_F(CliTest, AnalyticAcceptsSpecConfigFile) {
    const auto config = (dir_ / "spec.json").string();
    std::ofstream(config)
        << R"({"structure": "lattice", "k": 8, "m": 10, "nb": 2560, "db": 12})";
    const auto result = cli({"analytic", "--config", config, "--format", "kv"});
    ASSERT_EQ(result.code, 0) << result.err;
    EXPECT_NEAR(parse_double(parse_kv(result.out).at("ideal_auc"), "auc"), 0.8475267722968907,
                1e-12);
    EXPECT_EQ(cli({"analytic", "--config", config, "--m", "10"}).code, 1); // exclusive modes
}

TEST_F(CliTest, CensusRejectsMixedModes) {
    const auto result = cli({"census", "--graph", "whatever.edges", "--m", "5", "--k", "4",
                             "--structure", "clique"});
    EXPECT_EQ(result.code, 1);
}

TEST_F(CliTest, CensusCsvFormat) {
    const auto result = cli({"census", "--m", "80", "--k", "8", "--structure", "clique", "--nb",
                             "2560", "--db", "12", "--format", "csv"});
    ASSERT_EQ(result.code, 0);
    std::istringstream in(result.out);
    std::string header, row;
    ASSERT_TRUE(std::getline(in, header));
    ASSERT_TRUE(std::getline(in, row));
    EXPECT_NE(header.find("e_total_existing"), std::string::npos);
    EXPECT_NE(row.find("32960"), std::string::npos);
}

TEST_F(CliTest, SplitPredictEvalPipeline) {
    const auto edges = (dir_ / "g.edges").string();
    ASSERT_EQ(cli({"generate", "--m", "6", "--k", "4", "--structure", "lattice", "--nb", "100",
                   "--db", "5", "--seed", "3", "--out", edges})
                  .code,
              0);
    const auto split_dir = (dir_ / "split").string();
    const auto split = cli({"split", "--graph", edges, "--fraction", "0.1", "--seed", "4",
                            "--out-dir", split_dir});
    ASSERT_EQ(split.code, 0) << split.err;
    const auto kv = parse_kv(split.out);
    EXPECT_EQ(kv.at("n_heldout"), kv.at("n_negatives"));

    const auto observed = split_dir + "/observed.edges";
    const auto heldout = split_dir + "/heldout.edges";
    const auto negatives = split_dir + "/negatives.edges";

    // Observed, held-out and negatives must not overlap.
    const auto observed_edges = read_edge_list(observed).edges;
    const auto heldout_edges = read_edge_list(heldout).edges;
    const auto negative_edges = read_edge_list(negatives).edges;
    for (const auto& e : heldout_edges)
        EXPECT_FALSE(std::binary_search(observed_edges.begin(), observed_edges.end(), e));
    for (const auto& e : negative_edges) {
        EXPECT_FALSE(std::binary_search(observed_edges.begin(), observed_edges.end(), e));
        EXPECT_FALSE(std::binary_search(heldout_edges.begin(), heldout_edges.end(), e));
    }

    for (const char* predictor : {"adamic-adar", "oracle-ideal", "planted-sbm", "random"}) {
        const auto scores = (dir_ / (std::string(predictor) + ".tsv")).string();
        const auto predict = cli({"predict", "--observed", observed, "--pairs", heldout,
                                  negatives, "--predictor", predictor, "--out", scores});
        ASSERT_EQ(predict.code, 0) << predictor << ": " << predict.err;

        const auto eval = cli({"eval", "--heldout", heldout, "--negatives", negatives,
                               "--scores", scores, "--replicate", "0"});
        ASSERT_EQ(eval.code, 0) << predictor << ": " << eval.err;
        std::istringstream in(eval.out);
        std::string header, row;
        ASSERT_TRUE(std::getline(in, header));
        EXPECT_EQ(header, "replicate,predictor,auc");
        ASSERT_TRUE(std::getline(in, row));
        EXPECT_EQ(row.rfind("0," + std::string(predictor) + ",", 0), 0u) << row;
        const double value = parse_double(row.substr(row.rfind(',') + 1), "auc");
        EXPECT_GE(value, 0.0);
        EXPECT_LE(value, 1.0);
        if (std::string(predictor) == "oracle-ideal") EXPECT_GT(value, 0.8);
    }
}

TEST_F(CliTest, EvalReportsMissingPair) {
    const auto edges = (dir_ / "g.edges").string();
    ASSERT_EQ(cli({"generate", "--m", "2", "--k", "4", "--structure", "clique", "--nb", "10",
                   "--db", "2", "--seed", "5", "--out", edges})
                  .code,
              0);
    const auto split_dir = (dir_ / "split").string();
    ASSERT_EQ(cli({"split", "--graph", edges, "--seed", "1", "--out-dir", split_dir}).code, 0);

    const auto scores = (dir_ / "partial.tsv").string();
    std::ofstream(scores) << "0\t1\t0.5\n";
    const auto result = cli({"eval", "--heldout", split_dir + "/heldout.edges", "--negatives",
                             split_dir + "/negatives.edges", "--scores", scores});
    EXPECT_EQ(result.code, 2);
    EXPECT_NE(result.err.find("missing score"), std::string::npos) << result.err;
}

TEST_F(CliTest, SweepWritesCsv) {
    const auto config = (dir_ / "sweep.json").string();
    std::ofstream(config) << R"({
        "predictors": ["oracle-ideal", "random"],
        "replicates": 2,
        "base_seed": 9,
        "points": [
            {"param": "k", "value": 4, "structure": "lattice", "k": 4, "m": 4, "nb": 40, "db": 4}
        ]
    })";
    const auto csv_path = (dir_ / "out.csv").string();
    const auto result = cli({"sweep", "--config", config, "--out", csv_path});
    ASSERT_EQ(result.code, 0) << result.err;
    const auto csv = read_file(csv_path);
    std::size_t lines = 0;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) ++lines;
    EXPECT_EQ(lines, 3u); // header + 2 predictors x 1 point
    EXPECT_NE(csv.find("oracle-ideal"), std::string::npos);
}

TEST_F(CliTest, SweepPresetAndConfigAreExclusive) {
    EXPECT_EQ(cli({"sweep", "--preset", "fig3", "--config", "x.json", "--out",
                   (dir_ / "o.csv").string()})
                  .code,
              1);
    EXPECT_EQ(cli({"sweep", "--out", (dir_ / "o.csv").string()}).code, 1);
    EXPECT_EQ(cli({"sweep", "--preset", "fig9", "--out", (dir_ / "o.csv").string()}).code, 1);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(cli({}).code, 1);                       // missing subcommand
    EXPECT_EQ(cli({"frobnicate"}).code, 1);           // unknown subcommand
    EXPECT_EQ(cli({"generate", "--nope"}).code, 1);   // unknown flag
    EXPECT_EQ(cli({"analytic", "--m", "2"}).code, 1); // missing required spec flags
}

TEST_F(CliTest, MissingFilesAreDataErrors) {
    EXPECT_EQ(cli({"census", "--graph", (dir_ / "absent.edges").string()}).code, 2);
    EXPECT_EQ(cli({"split", "--graph", (dir_ / "absent.edges").string(), "--out-dir",
                   (dir_ / "s").string()})
                  .code,
              2);
}

TEST_F(CliTest, HelpIsAvailableEverywhere) {
    EXPECT_EQ(cli({"--help"}).code, 0);
    for (const char* sub :
         {"generate", "census", "analytic", "split", "predict", "eval", "sweep"}) {
        const auto result = cli({sub, "--help"});
        EXPECT_EQ(result.code, 0) << sub;
        EXPECT_NE(result.out.find("--"), std::string::npos) << sub;
    }
}
