#include "lpbench/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "lpbench/analytic.hpp"
#include "lpbench/bench.hpp"
#include "lpbench/census.hpp"
#include "lpbench/eval.hpp"
#include "lpbench/graph_io.hpp"
#include "lpbench/predict.hpp"
#include "lpbench/text.hpp"

namespace lpbench {

namespace {

namespace fs = std::filesystem;

std::string join_args(const std::vector<std::string>& args) {
    std::string joined;
    for (const auto& arg : args) {
        if (!joined.empty()) joined += ' ';
        joined += arg;
    }
    return joined;
}

std::vector<std::string> provenance_comments(const std::string& argv_line) {
    return {std::string("tool=lpbench/") + kToolVersion, "argv: " + argv_line};
}

/// The generator flags shared by generate/census/analytic/split.
struct SpecOptions {
    std::string structure;
    int diagonals = 0; // 0 = flag absent
    std::uint64_t k = 0;
    std::uint64_t m = 0;
    std::uint64_t nb = 0;
    double db = 0.0;
    std::uint64_t seed = 0;

    void add_flags(CLI::App* cmd, bool with_seed) {
        cmd->add_option("--structure", structure,
                        "structure kind: clique, lattice or lattice-diag")
            ->check(CLI::IsMember({"clique", "lattice", "lattice-diag"}));
        cmd->add_option("--diagonals", diagonals,
                        "closed diagonal directions per unit cell (lattice-diag only)")
            ->check(CLI::Range(1, 2));
        cmd->add_option("--k", k, "clique size / lattice side (k >= 1)");
        cmd->add_option("--m", m, "number of structures (M >= 1)");
        cmd->add_option("--nb", nb, "number of bridge nodes");
        cmd->add_option("--db", db, "expected bridge degree");
        if (with_seed) cmd->add_option("--seed", seed, "generator seed");
    }

    bool any_given() const { return !structure.empty() || k != 0 || m != 0; }

    GraphSpec to_spec() const {
        if (structure.empty()) throw ConfigError("--structure is required");
        if (k == 0) throw ConfigError("--k is required and must be >= 1");
        if (m == 0) throw ConfigError("--m is required and must be >= 1");
        StructureKind kind;
        if (structure == "lattice-diag") {
            kind = StructureKind::make_lattice_diag(diagonals == 0 ? 1 : diagonals);
        } else {
            if (diagonals != 0)
                throw ConfigError("--diagonals only applies to --structure lattice-diag");
            kind = parse_kind_name(structure);
        }
        GraphSpec spec;
        spec.kind = kind;
        spec.k = k;
        spec.n_structures = m;
        spec.n_bridge = nb;
        spec.bridge_degree = db;
        spec.seed = seed;
        spec.validate();
        return spec;
    }
};

void print_kv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& kv) {
    for (const auto& [key, value] : kv) out << key << '=' << value << '\n';
}

void print_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& kv) {
    for (std::size_t i = 0; i < kv.size(); ++i) out << kv[i].first << (i + 1 < kv.size() ? ',' : '\n');
    for (std::size_t i = 0; i < kv.size(); ++i) out << kv[i].second << (i + 1 < kv.size() ? ',' : '\n');
}

void print_table(std::ostream& out, const std::string& format,
                 const std::vector<std::pair<std::string, std::string>>& kv) {
    if (format == "kv" || format == "both") print_kv(out, kv);
    if (format == "both") out << '\n';
    if (format == "csv" || format == "both") print_csv(out, kv);
}

std::vector<std::pair<std::string, std::string>> census_fields(const EdgeCensus& census) {
    std::vector<std::pair<std::string, std::string>> kv{
        {"n_nodes", std::to_string(census.n_nodes)},
        {"e_ss_possible", format_double(census.e_ss_possible)},
        {"e_ss_existing", format_double(census.e_ss_existing)},
        {"e_ss_missing", format_double(census.e_ss_missing)},
        {"e_sb_possible", format_double(census.e_sb_possible)},
        {"e_sb_existing", format_double(census.e_sb_existing)},
        {"e_sb_missing", format_double(census.e_sb_missing)},
        {"e_bl_missing", format_double(census.e_bl_missing)},
        {"e_bb_missing", format_double(census.e_bb_missing)},
        {"e_impossible", format_double(census.e_impossible)},
        {"e_total_existing", format_double(census.e_total_existing)},
        {"total_pairs", format_double(census.total_pairs())},
    };
    try {
        kv.emplace_back("existing_ss_fraction", format_double(existing_ss_fraction(census)));
        kv.emplace_back("missing_sb_fraction", format_double(missing_sb_fraction(census)));
    } catch (const ConfigError&) {
        // degenerate census: the fractions are undefined and omitted
    }
    return kv;
}

/// Metadata-only graph for oracle predictors: roles from the spec's block
/// allocation, empty edge set.
SyntheticGraph make_metadata_graph(const GraphSpec& spec) {
    spec.validate();
    SyntheticGraph graph;
    graph.spec = spec;
    const std::uint64_t n = spec.n_nodes();
    graph.roles.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) graph.roles.push_back(role_from_spec(spec, i));
    return graph;
}

std::uint32_t max_node(std::span<const Edge> edges) {
    std::uint32_t highest = 0;
    for (const auto& e : edges) highest = std::max(highest, e.v);
    return highest;
}

struct GenerateArgs {
    SpecOptions spec;
    std::string out;
    std::string roles;
};

void cmd_generate(const GenerateArgs& args, const std::string& argv_line, std::ostream& out) {
    const GraphSpec spec = args.spec.to_spec();
    const SyntheticGraph graph = generate(spec);

    const fs::path edges_path(args.out);
    fs::path roles_path(args.roles);
    if (roles_path.empty()) roles_path = fs::path(args.out).replace_extension(".roles");

    write_edge_list(edges_path, graph.edges, &graph.spec, provenance_comments(argv_line));
    write_roles(roles_path, graph.roles);

    print_kv(out, {{"n_nodes", std::to_string(graph.n_nodes())},
                   {"n_edges", std::to_string(graph.edges.size())},
                   {"edges", edges_path.string()},
                   {"roles", roles_path.string()}});
}

struct CensusArgs {
    SpecOptions spec;
    std::string graph_path;
    std::string roles_path;
    std::string format = "both";
};

void cmd_census(const CensusArgs& args, std::ostream& out) {
    EdgeCensus census;
    if (!args.graph_path.empty()) {
        if (args.spec.any_given())
            throw ConfigError("give either --graph or generator flags, not both");
        std::optional<fs::path> roles;
        if (!args.roles_path.empty()) roles = fs::path(args.roles_path);
        census = empirical_census(load_graph(args.graph_path, roles));
    } else {
        census = analytic_census(args.spec.to_spec());
    }
    print_table(out, args.format, census_fields(census));
}

struct AnalyticArgs {
    SpecOptions spec;
    std::string config_path;
    std::string format = "both";
};

void cmd_analytic(const AnalyticArgs& args, std::ostream& out) {
    GraphSpec spec;
    if (!args.config_path.empty()) {
        if (args.spec.any_given())
            throw ConfigError("give either --config or generator flags, not both");
        spec = parse_spec_config(args.config_path);
    } else {
        spec = args.spec.to_spec();
    }
    const EdgeCensus census = analytic_census(spec);
    const double ideal = ideal_auc(census);
    const IdealRocPoints ideal_points = ideal_roc_points(census);

    std::vector<std::pair<std::string, std::string>> kv{
        {"ideal_auc", format_double(ideal)},
    };
    std::optional<PlantedProbabilities> probs;
    try {
        probs = planted_probabilities(spec);
    } catch (const ConfigError&) {
        // single-node structures: q undefined, planted fields omitted
    }
    if (probs) {
        kv.emplace_back("planted_auc", format_double(planted_sbm_auc(census, *probs)));
        kv.emplace_back("p", format_double(probs->p));
        kv.emplace_back("q", format_double(probs->q));
    }
    const auto add_point = [&kv](const std::string& name, const RocPoint& point) {
        kv.emplace_back(name + "_fpr", format_double(point.fpr));
        kv.emplace_back(name + "_tpr", format_double(point.tpr));
    };
    add_point("ideal_a", ideal_points.a);
    add_point("ideal_b", ideal_points.b);
    add_point("ideal_c", ideal_points.c);
    if (probs) {
        const PlantedRocPoints planted_points = planted_roc_points(census, *probs);
        add_point("planted_a", planted_points.a);
        add_point("planted_b", planted_points.b);
        add_point("planted_c", planted_points.c);
        add_point("planted_d", planted_points.d);
    }
    print_table(out, args.format, kv);
}

struct SplitArgs {
    std::string graph_path;
    std::string roles_path;
    double fraction = 0.1;
    std::uint64_t seed = 0;
    std::string out_dir;
};

void cmd_split(const SplitArgs& args, const std::string& argv_line, std::ostream& out) {
    std::optional<fs::path> roles;
    if (!args.roles_path.empty()) roles = fs::path(args.roles_path);
    const SyntheticGraph graph = load_graph(args.graph_path, roles);
    const EvalSet set = make_eval_set(graph, args.fraction, args.seed);

    const fs::path dir(args.out_dir);
    fs::create_directories(dir);
    const auto write = [&](const char* role, const std::vector<Edge>& edges, const fs::path& path) {
        auto comments = provenance_comments(argv_line);
        comments.push_back(std::string("split: role=") + role +
                           " fraction=" + format_double(args.fraction) +
                           " seed=" + std::to_string(args.seed));
        write_edge_list(path, edges, &graph.spec, comments);
    };
    write("observed", set.observed, dir / "observed.edges");
    write("heldout", set.heldout, dir / "heldout.edges");
    write("negatives", set.negatives, dir / "negatives.edges");

    print_kv(out, {{"n_observed", std::to_string(set.observed.size())},
                   {"n_heldout", std::to_string(set.heldout.size())},
                   {"n_negatives", std::to_string(set.negatives.size())},
                   {"out_dir", dir.string()}});
}

struct PredictArgs {
    std::string observed_path;
    std::vector<std::string> pairs_paths;
    std::string predictor;
    std::string meta_path;
    std::uint64_t seed = 0;
    std::string out;
};

void cmd_predict(const PredictArgs& args, const std::string& argv_line, std::ostream& out) {
    const EdgeListData observed_data = read_edge_list(args.observed_path);

    std::vector<Edge> pairs;
    for (const auto& path : args.pairs_paths) {
        const auto data = read_edge_list(path);
        pairs.insert(pairs.end(), data.edges.begin(), data.edges.end());
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (pairs.empty()) throw ConfigError("no candidate pairs given");

    std::optional<GraphSpec> spec = observed_data.spec;
    if (!args.meta_path.empty()) {
        const auto meta = read_edge_list(args.meta_path);
        if (!meta.spec) throw DataError(args.meta_path + ": missing spec header");
        spec = meta.spec;
    }

    std::optional<SyntheticGraph> metadata;
    PredictorContext ctx;
    if (predictor_needs_metadata(args.predictor)) {
        if (!spec)
            throw ConfigError("predictor '" + args.predictor +
                              "' needs generation metadata; give --meta or an observed file "
                              "with a spec header");
        metadata = make_metadata_graph(*spec);
        ctx.graph = &*metadata;
        if (args.predictor == "planted-sbm") ctx.probs = planted_probabilities(*spec);
    }

    const std::uint32_t n_nodes =
        spec ? static_cast<std::uint32_t>(spec->n_nodes())
             : std::max(max_node(observed_data.edges), max_node(pairs)) + 1;
    const ObservedGraph observed(n_nodes, observed_data.edges);
    ctx.observed = &observed;
    ctx.random_seed = args.seed;

    const ScoreFunction fn = predictor_by_name(args.predictor);
    ScoredPairs scores;
    scores.predictor_name = args.predictor;
    scores.entries.reserve(pairs.size());
    for (const auto& pair : pairs) scores.entries.emplace_back(pair, fn(ctx, pair));
    write_scores(args.out, scores, provenance_comments(argv_line));

    print_kv(out, {{"predictor", args.predictor},
                   {"n_pairs", std::to_string(scores.entries.size())},
                   {"scores", args.out}});
}

struct EvalArgs {
    std::string heldout_path;
    std::string negatives_path;
    std::vector<std::string> scores_paths;
    std::uint64_t replicate = 0;
    std::string out;
};

void cmd_eval(const EvalArgs& args, std::ostream& out) {
    const auto heldout = read_edge_list(args.heldout_path).edges;
    const auto negatives = read_edge_list(args.negatives_path).edges;
    if (heldout.empty()) throw DataError(args.heldout_path + ": no held-out pairs");
    if (negatives.empty()) throw DataError(args.negatives_path + ": no negative pairs");

    std::ostringstream csv;
    csv << "replicate,predictor,auc\n";
    for (const auto& path : args.scores_paths) {
        const ScoredPairs scores = import_scores(path);
        std::unordered_map<std::uint64_t, double> by_pair;
        by_pair.reserve(scores.entries.size() * 2);
        for (const auto& [pair, value] : scores.entries)
            by_pair.emplace((static_cast<std::uint64_t>(pair.u) << 32) | pair.v, value);
        const auto lookup = [&](const Edge& pair) {
            const auto it = by_pair.find((static_cast<std::uint64_t>(pair.u) << 32) | pair.v);
            if (it == by_pair.end())
                throw DataError(path + ": missing score for pair (" + std::to_string(pair.u) +
                                ", " + std::to_string(pair.v) + ")");
            return it->second;
        };
        std::vector<double> positives, negative_scores;
        positives.reserve(heldout.size());
        negative_scores.reserve(negatives.size());
        for (const auto& pair : heldout) positives.push_back(lookup(pair));
        for (const auto& pair : negatives) negative_scores.push_back(lookup(pair));
        csv << args.replicate << ',' << scores.predictor_name << ','
            << format_double(auc(positives, negative_scores)) << '\n';
    }

    if (args.out.empty() || args.out == "-") {
        out << csv.str();
    } else {
        std::ofstream file(args.out);
        if (!file) throw DataError("cannot open '" + args.out + "' for writing");
        file << csv.str();
        if (!file) throw DataError("write failed for '" + args.out + "'");
    }
}

struct SweepArgs {
    std::string preset;
    std::string config_path;
    std::string predictors = "adamic-adar,oracle-ideal,planted-sbm,random";
    std::size_t replicates = 10;
    std::uint64_t seed = 0;
    double fraction = 0.1;
    unsigned threads = 0;
    std::string emit_splits;
    std::string out;
};

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

void cmd_sweep(const SweepArgs& args, const CLI::App* cmd) {
    if (args.preset.empty() && args.config_path.empty())
        throw ConfigError("give --preset or --config");
    if (!args.preset.empty() && !args.config_path.empty())
        throw ConfigError("--preset and --config are mutually exclusive");

    SweepConfig config;
    if (!args.config_path.empty()) {
        config = parse_sweep_config(args.config_path);
    } else {
        config.preset = args.preset;
        config.points = preset_specs(args.preset);
    }
    // Explicit flags override config-file values.
    if (config.predictors.empty() || cmd->count("--predictors") > 0)
        config.predictors = split_csv_list(args.predictors);
    if (cmd->count("--replicates") > 0 || config.n_replicates == 0)
        config.n_replicates = args.replicates;
    if (cmd->count("--seed") > 0) config.base_seed = args.seed;
    if (cmd->count("--fraction") > 0) config.holdout_fraction = args.fraction;
    if (cmd->count("--threads") > 0) config.threads = args.threads;
    if (!args.emit_splits.empty()) config.emit_splits_dir = fs::path(args.emit_splits);

    const SweepResult result = run_sweep(config);
    write_csv(result, fs::path(args.out));
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    const std::string argv_line = join_args(args);

    CLI::App app{"Synthetic-graph benchmark harness for link prediction"};
    app.set_version_flag("--version", std::string("lpbench ") + kToolVersion);
    app.require_subcommand(1);
    app.footer("File formats:\n"
               "  edge list   one 'u<TAB>v' pair per line, u < v, 0-indexed; '#' comments;\n"
               "              the first comment line records the graph spec as key=value\n"
               "  roles       one 'node<TAB>role' per line, role = S<index> (1-based) or B\n"
               "  scores      one 'u<TAB>v<TAB>score' per line; '# predictor=NAME' names it\n"
               "  sweep CSV   header + one row per (sweep point, predictor)");

    // generate
    GenerateArgs generate_args;
    auto* generate_cmd = app.add_subcommand(
        "generate", "Generate a synthetic graph and write edge-list and roles files");
    generate_args.spec.add_flags(generate_cmd, /*with_seed=*/true);
    generate_cmd->add_option("--out", generate_args.out, "edge-list output path")->required();
    generate_cmd->add_option("--roles", generate_args.roles,
                             "roles output path (default: --out with .roles extension)");
    generate_cmd->callback([&] { cmd_generate(generate_args, argv_line, out); });

    // census
    CensusArgs census_args;
    auto* census_cmd = app.add_subcommand(
        "census", "Edge-class census, analytic (generator flags) or empirical (--graph)");
    census_args.spec.add_flags(census_cmd, /*with_seed=*/false);
    census_cmd->add_option("--graph", census_args.graph_path,
                           "edge-list file with a spec header (empirical census)");
    census_cmd->add_option("--roles", census_args.roles_path,
                           "roles file cross-checked against the spec header");
    census_cmd->add_option("--format", census_args.format, "output format")
        ->check(CLI::IsMember({"kv", "csv", "both"}));
    census_cmd->callback([&] { cmd_census(census_args, out); });

    // analytic
    AnalyticArgs analytic_args;
    auto* analytic_cmd = app.add_subcommand(
        "analytic", "Closed-form ideal and planted-SBM AUC with ROC breakpoints");
    analytic_args.spec.add_flags(analytic_cmd, /*with_seed=*/false);
    analytic_cmd->add_option("--config", analytic_args.config_path,
                             "JSON spec file instead of generator flags");
    analytic_cmd->add_option("--format", analytic_args.format, "output format")
        ->check(CLI::IsMember({"kv", "csv", "both"}));
    analytic_cmd->callback([&] { cmd_analytic(analytic_args, out); });

    // split
    SplitArgs split_args;
    auto* split_cmd = app.add_subcommand(
        "split", "Hold out a fraction of edges and sample balanced negatives");
    split_cmd->add_option("--graph", split_args.graph_path, "edge-list file with spec header")
        ->required();
    split_cmd->add_option("--roles", split_args.roles_path, "roles file (cross-check)");
    split_cmd->add_option("--fraction", split_args.fraction, "held-out fraction (default 0.1)");
    split_cmd->add_option("--seed", split_args.seed, "split seed");
    split_cmd->add_option("--out-dir", split_args.out_dir,
                          "directory for observed/heldout/negatives edge lists")
        ->required();
    split_cmd->callback([&] { cmd_split(split_args, argv_line, out); });

    // predict
    PredictArgs predict_args;
    auto* predict_cmd = app.add_subcommand(
        "predict", "Score candidate pairs with a named predictor and write a score file");
    predict_cmd->add_option("--observed", predict_args.observed_path,
                            "observed edge-list (the predictor's only graph view)")
        ->required();
    predict_cmd->add_option("--pairs", predict_args.pairs_paths,
                            "candidate pair file(s), e.g. heldout.edges negatives.edges")
        ->required()
        ->expected(-1);
    predict_cmd->add_option("--predictor", predict_args.predictor, "predictor name")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(predictor_names().begin(),
                                                       predictor_names().end())));
    predict_cmd->add_option("--meta", predict_args.meta_path,
                            "edge-list whose spec header supplies oracle metadata");
    predict_cmd->add_option("--seed", predict_args.seed, "seed for the random predictor");
    predict_cmd->add_option("--out", predict_args.out, "score file output path")->required();
    predict_cmd->callback([&] { cmd_predict(predict_args, argv_line, out); });

    // eval
    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand(
        "eval", "Compute AUC of score files over a held-out/negative pair set");
    eval_cmd->add_option("--heldout", eval_args.heldout_path, "held-out pair file")->required();
    eval_cmd->add_option("--negatives", eval_args.negatives_path, "negative pair file")
        ->required();
    eval_cmd->add_option("--scores", eval_args.scores_paths, "score file(s)")
        ->required()
        ->expected(-1);
    eval_cmd->add_option("--replicate", eval_args.replicate, "replicate label for the CSV");
    eval_cmd->add_option("--out", eval_args.out, "CSV output path (default: stdout)");
    eval_cmd->callback([&] { cmd_eval(eval_args, out); });

    // sweep
    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Run a parameter sweep: generate, split, score and aggregate AUC per point");
    sweep_cmd->add_option("--preset", sweep_args.preset,
                          "fig3, fig4-clique, fig4-lattice, fig5-lattice or fig5-diag");
    sweep_cmd->add_option("--config", sweep_args.config_path, "JSON sweep config (see README)");
    sweep_cmd->add_option("--predictors", sweep_args.predictors,
                          "comma-separated predictor names");
    sweep_cmd->add_option("--replicates", sweep_args.replicates, "graphs per sweep point");
    sweep_cmd->add_option("--seed", sweep_args.seed, "base seed");
    sweep_cmd->add_option("--fraction", sweep_args.fraction, "held-out fraction");
    sweep_cmd->add_option("--threads", sweep_args.threads, "worker threads (0 = hardware)");
    sweep_cmd->add_option("--emit-splits", sweep_args.emit_splits,
                          "directory for per-replicate split files");
    sweep_cmd->add_option("--out", sweep_args.out, "result CSV path")->required();
    sweep_cmd->callback([&] { cmd_sweep(sweep_args, sweep_cmd); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace lpbench
