#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpbench/eval.hpp"
#include "lpbench/graph.hpp"
#include "lpbench/split.hpp"

namespace lpbench {

/// One sweep point: the varied parameter (for reporting) plus the full spec.
struct SweepPoint {
    std::string param_name;
    double param_value = 0.0;
    GraphSpec spec;
};

/// A full experiment: points x replicates x predictors.
struct SweepConfig {
    std::string preset = "custom";
    std::vector<SweepPoint> points;
    std::vector<std::string> predictors;
    std::size_t n_replicates = 10;
    std::uint64_t base_seed = 0;
    double holdout_fraction = 0.1;
    unsigned threads = 0; // 0 = hardware concurrency
    std::optional<std::filesystem::path> emit_splits_dir;
};

struct SweepRow {
    SweepPoint point;
    std::string predictor;
    AucSummary auc;
    double ideal_auc = 0.0;
    double planted_auc = 0.0; // NaN when q is undefined (single-node structures)
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
};

/// Bundled parameter grids (see README): "fig3" (diagonal lattices, growing
/// M = N_B), "fig4-clique" / "fig4-lattice" (N = 3200, C_S from 0.2 to 0.9),
/// "fig5-lattice" / "fig5-diag" (M = 4, C_S = 0.75, growing k). Accepts '-'
/// or '_' word separators. Throws ConfigError for unknown presets.
std::vector<SweepPoint> preset_specs(const std::string& preset);

/// Graph seed for (point, replicate): splitmix chain over
/// (base_seed, point_index, replicate, stream). Streams 0..2 cover the
/// graph, the eval set and the random predictor.
std::uint64_t sweep_seed(std::uint64_t base_seed, std::size_t point_index,
                         std::size_t replicate, std::uint64_t stream);

/// Runs every (point, replicate): generate, split, build the shared eval
/// set, score each predictor, aggregate per predictor, and attach the
/// closed-form ideal and planted AUC of the point's spec. Deterministic for
/// a fixed config, independent of thread count. Errors are rethrown with
/// (point, replicate) context.
SweepResult run_sweep(const SweepConfig& config);

/// CSV with one row per (point, predictor). Byte-stable for a fixed result.
void write_csv(const SweepResult& result, std::ostream& out);
void write_csv(const SweepResult& result, const std::filesystem::path& path);

/// Parses the JSON sweep config documented in the README.
SweepConfig parse_sweep_config(const std::filesystem::path& path);

/// Parses a single JSON graph spec (the sweep point schema without
/// param/value): structure, diagonals, k, m, nb, db, seed.
GraphSpec parse_spec_config(const std::filesystem::path& path);

} // namespace lpbench
