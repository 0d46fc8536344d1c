#pragma once

#include "lpbench/census.hpp"
#include "lpbench/roc.hpp"

namespace lpbench {

/// Block-model link probabilities of the generating process: p for
/// structure-bridge pairs, q for within-structure pairs.
struct PlantedProbabilities {
    double p = 0.0;
    double q = 0.0;
};

/// Breakpoints of the ideal predictor's ROC curve.
struct IdealRocPoints {
    RocPoint a, b, c;
};

/// Breakpoints of the planted-SBM predictor's ROC curve. In the all-ties
/// case (p == q) b and c coincide.
struct PlantedRocPoints {
    RocPoint a, b, c, d;
};

/// p and q branches differing by less than this are treated as ties.
inline constexpr double kPlantedTieTolerance = 1e-12;

/// AUC ceiling of the ideal predictor (knows roles and the link function):
/// 1 - 1/2 * missing_sb_fraction * (1 - existing_ss_fraction).
/// Throws ConfigError for censuses without existing or without missing pairs.
double ideal_auc(const EdgeCensus& census);

/// A = (0, existing_ss_fraction), B = (missing_sb_fraction, 1), C = (1, 1);
/// the piecewise-linear curve A->B->C integrates to ideal_auc.
IdealRocPoints ideal_roc_points(const EdgeCensus& census);

/// p = bridge_degree / N_S; q = within-structure edge density
/// 2 * structure_edge_count / (omega * (omega - 1)).
/// Throws ConfigError when a structure has fewer than two nodes.
PlantedProbabilities planted_probabilities(const GraphSpec& spec);

/// AUC of the predictor that scores within-structure pairs q,
/// structure-bridge pairs p and everything else 0. Branches on the order of
/// p and q; equal probabilities take the explicit two-segment tie curve.
double planted_sbm_auc(const EdgeCensus& census, const PlantedProbabilities& probs);

/// Breakpoints of the planted-SBM ROC for the applicable branch;
/// trapezoidal integration reproduces planted_sbm_auc.
PlantedRocPoints planted_roc_points(const EdgeCensus& census, const PlantedProbabilities& probs);

} // namespace lpbench
