#include "lpbench/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lpbench/analytic.hpp"
#include "lpbench/census.hpp"
#include "lpbench/graph_io.hpp"
#include "lpbench/predict.hpp"
#include "lpbench/rng.hpp"
#include "lpbench/text.hpp"

namespace lpbench {

namespace {

std::string normalize_preset(std::string name) {
    std::replace(name.begin(), name.end(), '_', '-');
    return name;
}

GraphSpec make_spec(std::uint64_t nb, double db, std::uint64_t m, StructureKind kind,
                    std::uint64_t k) {
    GraphSpec spec;
    spec.n_bridge = nb;
    spec.bridge_degree = db;
    spec.n_structures = m;
    spec.kind = kind;
    spec.k = k;
    return spec;
}

// fig4 grids: N = 3200 nodes, D_B = 12, k = 8, C_S from 0.2 to 0.9.
// The structure-node counts 640..2880 force M = N_S/8 (cliques) or
// M = N_S/64 (lattices) and N_B = 3200 - N_S.
constexpr std::uint64_t kFig4TotalNodes = 3200;
constexpr std::uint64_t kFig4StructureNodes[] = {640, 960, 1280, 1600, 1920, 2240, 2560, 2880};
constexpr double kFig4BridgeDegree = 12.0;

// fig3 grid: M = N_B over powers of two; 8x8 diagonal lattices, D_B = 5.
constexpr std::uint64_t kFig3Grid[] = {1, 2, 4, 8, 16, 32, 64};
constexpr double kFig3BridgeDegree = 5.0;

// fig5 grids: M = 4 structures of growing side k, C_S held at 0.75
// (N_B = round(N_S / 3)), D_B = 5.
constexpr std::uint64_t kFig5Sides[] = {3, 4, 5, 6, 8, 10, 12, 16};
constexpr double kFig5BridgeDegree = 5.0;

std::vector<SweepPoint> fig3_points() {
    std::vector<SweepPoint> points;
    for (const auto m : kFig3Grid) {
        SweepPoint point;
        point.param_name = "n_structures";
        point.param_value = static_cast<double>(m);
        point.spec = make_spec(m, kFig3BridgeDegree, m, StructureKind::make_lattice_diag(1), 8);
        points.push_back(std::move(point));
    }
    return points;
}

std::vector<SweepPoint> fig4_points(StructureKind kind) {
    std::vector<SweepPoint> points;
    for (const auto ns : kFig4StructureNodes) {
        SweepPoint point;
        point.param_name = "c_s";
        point.param_value = static_cast<double>(ns) / static_cast<double>(kFig4TotalNodes);
        const std::uint64_t m = ns / structure_node_count(kind, 8);
        point.spec = make_spec(kFig4TotalNodes - ns, kFig4BridgeDegree, m, kind, 8);
        points.push_back(std::move(point));
    }
    return points;
}

std::vector<SweepPoint> fig5_points(StructureKind kind) {
    std::vector<SweepPoint> points;
    for (const auto k : kFig5Sides) {
        SweepPoint point;
        point.param_name = "k";
        point.param_value = static_cast<double>(k);
        const std::uint64_t ns = 4 * k * k;
        const auto nb = static_cast<std::uint64_t>(
            std::floor(static_cast<double>(ns) / 3.0 + 0.5));
        point.spec = make_spec(nb, kFig5BridgeDegree, 4, kind, k);
        points.push_back(std::move(point));
    }
    return points;
}

} // namespace

std::vector<SweepPoint> preset_specs(const std::string& preset) {
    const auto name = normalize_preset(preset);
    if (name == "fig3") return fig3_points();
    if (name == "fig4-clique") return fig4_points(StructureKind::make_clique());
    if (name == "fig4-lattice") return fig4_points(StructureKind::make_lattice());
    if (name == "fig5-lattice") return fig5_points(StructureKind::make_lattice());
    if (name == "fig5-diag") return fig5_points(StructureKind::make_lattice_diag(1));
    throw ConfigError("unknown preset '" + preset + "'");
}

std::uint64_t sweep_seed(std::uint64_t base_seed, std::size_t point_index, std::size_t replicate,
                         std::uint64_t stream) {
    return mix_seed(mix_seed(mix_seed(base_seed, point_index), replicate), stream);
}

namespace {

struct PointAnalytics {
    double ideal = 0.0;
    double planted = std::numeric_limits<double>::quiet_NaN();
    std::optional<PlantedProbabilities> probs;
};

PointAnalytics point_analytics(const GraphSpec& spec) {
    PointAnalytics analytics;
    const EdgeCensus census = analytic_census(spec);
    analytics.ideal = ideal_auc(census);
    try {
        analytics.probs = planted_probabilities(spec);
        analytics.planted = planted_sbm_auc(census, *analytics.probs);
    } catch (const ConfigError&) {
        // q undefined (single-node structures): the planted column stays NaN.
    }
    return analytics;
}

void validate_config(const SweepConfig& config) {
    if (config.points.empty()) throw ConfigError("sweep has no points");
    if (config.predictors.empty()) throw ConfigError("sweep has no predictors");
    if (config.n_replicates < 1) throw ConfigError("sweep needs at least one replicate");
    if (!(config.holdout_fraction > 0.0 && config.holdout_fraction < 1.0))
        throw ConfigError("holdout fraction must lie strictly between 0 and 1");
    for (const auto& name : config.predictors) predictor_by_name(name);
    for (const auto& point : config.points) point.spec.validate();
}

void emit_split_files(const std::filesystem::path& dir, std::size_t point_index,
                      std::size_t replicate, const SyntheticGraph& graph, const EvalSet& set,
                      double fraction) {
    const std::string stem =
        "point" + std::to_string(point_index) + "_rep" + std::to_string(replicate) + "_";
    const auto annotate = [&](const char* role) {
        return std::vector<std::string>{std::string("split: role=") + role +
                                        " fraction=" + format_double(fraction) +
                                        " seed=" + std::to_string(set.seed)};
    };
    write_edge_list(dir / (stem + "observed.edges"), set.observed, &graph.spec,
                    annotate("observed"));
    write_edge_list(dir / (stem + "heldout.edges"), set.heldout, &graph.spec,
                    annotate("heldout"));
    write_edge_list(dir / (stem + "negatives.edges"), set.negatives, &graph.spec,
                    annotate("negatives"));
}

std::vector<double> score_pairs(const PredictorContext& ctx, ScoreFunction fn,
                                std::span<const Edge> pairs) {
    std::vector<double> scores;
    scores.reserve(pairs.size());
    for (const auto& pair : pairs) scores.push_back(fn(ctx, pair));
    return scores;
}

} // namespace

SweepResult run_sweep(const SweepConfig& config) {
    validate_config(config);

    const std::size_t n_points = config.points.size();
    const std::size_t n_reps = config.n_replicates;
    const std::size_t n_predictors = config.predictors.size();

    std::vector<PointAnalytics> analytics;
    analytics.reserve(n_points);
    for (const auto& point : config.points) {
        analytics.push_back(point_analytics(point.spec));
        if (!analytics.back().probs)
            for (const auto& name : config.predictors)
                if (name == "planted-sbm")
                    throw ConfigError("planted-sbm predictor needs a defined q; structures of '" +
                                      kind_name(point.spec.kind) + "' with k=" +
                                      std::to_string(point.spec.k) + " have a single node");
    }

    std::vector<ScoreFunction> predictors;
    predictors.reserve(n_predictors);
    for (const auto& name : config.predictors) predictors.push_back(predictor_by_name(name));

    if (config.emit_splits_dir) std::filesystem::create_directories(*config.emit_splits_dir);

    // One task per (point, replicate); each writes only its own slot, so the
    // result is independent of scheduling.
    const std::size_t n_tasks = n_points * n_reps;
    std::vector<std::vector<double>> task_aucs(n_tasks);
    std::vector<std::exception_ptr> task_errors(n_tasks);

    const auto run_task = [&](std::size_t task) {
        const std::size_t point_index = task / n_reps;
        const std::size_t replicate = task % n_reps;
        const SweepPoint& point = config.points[point_index];

        GraphSpec spec = point.spec;
        spec.seed = sweep_seed(config.base_seed, point_index, replicate, 0);
        const SyntheticGraph graph = generate(spec);
        const EvalSet set = make_eval_set(graph, config.holdout_fraction,
                                          sweep_seed(config.base_seed, point_index, replicate, 1));
        if (config.emit_splits_dir)
            emit_split_files(*config.emit_splits_dir, point_index, replicate, graph, set,
                             config.holdout_fraction);

        const ObservedGraph observed(graph.n_nodes(), set.observed);
        PredictorContext ctx;
        ctx.graph = &graph;
        ctx.observed = &observed;
        if (analytics[point_index].probs) ctx.probs = *analytics[point_index].probs;
        ctx.random_seed = sweep_seed(config.base_seed, point_index, replicate, 2);

        auto& aucs = task_aucs[task];
        aucs.reserve(n_predictors);
        for (const auto fn : predictors) {
            const auto positives = score_pairs(ctx, fn, set.heldout);
            const auto negatives = score_pairs(ctx, fn, set.negatives);
            aucs.push_back(auc(positives, negatives));
        }
    };

    unsigned n_threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    n_threads = std::max<unsigned>(1, std::min<std::size_t>(n_threads, n_tasks));

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= n_tasks) return;
            try {
                run_task(task);
            } catch (...) {
                task_errors[task] = std::current_exception();
            }
        }
    };
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    // Report the first failing task in deterministic (task index) order.
    for (std::size_t task = 0; task < n_tasks; ++task) {
        if (!task_errors[task]) continue;
        const std::string context = "point " + std::to_string(task / n_reps) + ", replicate " +
                                    std::to_string(task % n_reps) + ": ";
        try {
            std::rethrow_exception(task_errors[task]);
        } catch (const ConfigError& e) {
            throw ConfigError(context + e.what());
        } catch (const DataError& e) {
            throw DataError(context + e.what());
        } catch (const std::exception& e) {
            throw DataError(context + e.what());
        }
    }

    SweepResult result;
    result.config = config;
    result.rows.reserve(n_points * n_predictors);
    for (std::size_t point_index = 0; point_index < n_points; ++point_index) {
        for (std::size_t p = 0; p < n_predictors; ++p) {
            std::vector<double> replicate_aucs;
            replicate_aucs.reserve(n_reps);
            for (std::size_t r = 0; r < n_reps; ++r)
                replicate_aucs.push_back(task_aucs[point_index * n_reps + r][p]);
            SweepRow row;
            row.point = config.points[point_index];
            row.predictor = config.predictors[p];
            row.auc = aggregate(replicate_aucs);
            row.ideal_auc = analytics[point_index].ideal;
            row.planted_auc = analytics[point_index].planted;
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

void write_csv(const SweepResult& result, std::ostream& out) {
    out << "sweep_param,sweep_value,nb,db,m,kind,k,predictor,auc_mean,auc_var,"
           "n_replicates,ideal_auc,planted_auc,base_seed\n";
    for (const auto& row : result.rows) {
        const GraphSpec& spec = row.point.spec;
        out << row.point.param_name << ',' << format_double(row.point.param_value) << ','
            << spec.n_bridge << ',' << format_double(spec.bridge_degree) << ','
            << spec.n_structures << ',' << kind_name(spec.kind) << ',' << spec.k << ','
            << row.predictor << ',' << format_double(row.auc.mean) << ','
            << format_double(row.auc.variance) << ',' << row.auc.n_replicates << ','
            << format_double(row.ideal_auc) << ',' << format_double(row.planted_auc) << ','
            << result.config.base_seed << '\n';
    }
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
    write_csv(result, out);
    if (!out) throw DataError("write failed for '" + path.string() + "'");
}

namespace {

using nlohmann::json;

std::uint64_t get_u64(const json& j, const char* key) {
    if (!j.at(key).is_number_unsigned())
        throw ConfigError(std::string("config field '") + key + "' must be a non-negative integer");
    return j.at(key).get<std::uint64_t>();
}

SweepPoint parse_point(const json& j) {
    static const std::vector<std::string> known{"param", "value", "structure", "diagonals",
                                                "k",     "m",     "nb",        "db",
                                                "seed"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("unknown point field '" + key + "'");

    SweepPoint point;
    point.param_name = j.value("param", std::string("custom"));
    point.param_value = j.value("value", 0.0);

    const auto structure = j.at("structure").get<std::string>();
    StructureKind kind;
    if (!j.contains("diagonals")) {
        kind = parse_kind_name(structure == "lattice-diag" ? "lattice-diag1" : structure);
    } else {
        if (structure != "lattice-diag")
            throw ConfigError("'diagonals' only applies to structure \"lattice-diag\"");
        kind = StructureKind::make_lattice_diag(static_cast<int>(get_u64(j, "diagonals")));
    }

    point.spec = make_spec(get_u64(j, "nb"), j.at("db").get<double>(), get_u64(j, "m"), kind,
                           get_u64(j, "k"));
    if (j.contains("seed")) point.spec.seed = get_u64(j, "seed");
    point.spec.validate();
    return point;
}

} // namespace

SweepConfig parse_sweep_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "' for reading");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw DataError(path.string() + ": " + e.what());
    }

    static const std::vector<std::string> known{
        "preset", "points", "predictors", "replicates", "base_seed", "holdout_fraction", "threads"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError(path.string() + ": unknown config field '" + key + "'");

    SweepConfig config;
    config.preset = j.value("preset", std::string("custom"));
    if (normalize_preset(config.preset) != "custom") config.points = preset_specs(config.preset);
    if (j.contains("points")) {
        config.points.clear();
        for (const auto& point : j.at("points")) config.points.push_back(parse_point(point));
    }
    if (j.contains("predictors"))
        config.predictors = j.at("predictors").get<std::vector<std::string>>();
    if (j.contains("replicates")) config.n_replicates = get_u64(j, "replicates");
    if (j.contains("base_seed")) config.base_seed = get_u64(j, "base_seed");
    if (j.contains("holdout_fraction")) config.holdout_fraction = j.at("holdout_fraction").get<double>();
    if (j.contains("threads")) config.threads = static_cast<unsigned>(get_u64(j, "threads"));
    return config;
}

GraphSpec parse_spec_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "' for reading");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    return parse_point(j).spec;
}

} // namespace lpbench
