#include "lpbench/analytic.hpp"

#include <cmath>

namespace lpbench {

namespace {

void check_nondegenerate(const EdgeCensus& census) {
    if (census.e_ss_existing + census.e_sb_existing <= 0.0)
        throw ConfigError("degenerate census: no existing edges");
    if (census.total_missing() <= 0.0)
        throw ConfigError("degenerate census: no non-existing pairs");
}

} // namespace

double ideal_auc(const EdgeCensus& census) {
    check_nondegenerate(census);
    const double ess = existing_ss_fraction(census);
    const double esb = missing_sb_fraction(census);
    return 1.0 - 0.5 * esb * (1.0 - ess);
}

IdealRocPoints ideal_roc_points(const EdgeCensus& census) {
    check_nondegenerate(census);
    return {{0.0, existing_ss_fraction(census)},
            {missing_sb_fraction(census), 1.0},
            {1.0, 1.0}};
}

PlantedProbabilities planted_probabilities(const GraphSpec& spec) {
    spec.validate();
    const double omega = static_cast<double>(spec.structure_size());
    if (omega <= 1.0)
        throw ConfigError("within-structure density undefined for single-node structures");
    const double existing = static_cast<double>(structure_edge_count(spec.kind, spec.k));
    return {spec.bridge_link_probability(), 2.0 * existing / (omega * (omega - 1.0))};
}

double planted_sbm_auc(const EdgeCensus& census, const PlantedProbabilities& probs) {
    check_nondegenerate(census);
    const double existing = census.e_ss_existing + census.e_sb_existing;
    const double missing = census.total_missing();
    const double s = census.e_ss_missing / missing; // missing-SS fraction
    const double b = census.e_sb_missing / missing; // missing-SB fraction

    if (probs.p > probs.q + kPlantedTieTolerance) {
        const double a = census.e_sb_existing / existing;
        return 1.0 - 0.5 * (1.0 - a) * s - 0.5 * a * b - (1.0 - a) * b;
    }
    if (probs.q > probs.p + kPlantedTieTolerance) {
        const double a = census.e_ss_existing / existing;
        return 1.0 - 0.5 * (1.0 - a) * b - 0.5 * a * s - (1.0 - a) * s;
    }
    // p == q: every candidate pair shares one score, the ROC is the
    // two-segment curve through ((s + b), 1).
    return 1.0 - 0.5 * (s + b);
}

PlantedRocPoints planted_roc_points(const EdgeCensus& census, const PlantedProbabilities& probs) {
    check_nondegenerate(census);
    const double existing = census.e_ss_existing + census.e_sb_existing;
    const double missing = census.total_missing();
    const double s = census.e_ss_missing / missing;
    const double b = census.e_sb_missing / missing;
    const RocPoint origin{0.0, 0.0};
    const RocPoint all_candidates{s + b, 1.0};
    const RocPoint full{1.0, 1.0};

    if (probs.p > probs.q + kPlantedTieTolerance)
        return {origin, {b, census.e_sb_existing / existing}, all_candidates, full};
    if (probs.q > probs.p + kPlantedTieTolerance)
        return {origin, {s, census.e_ss_existing / existing}, all_candidates, full};
    return {origin, all_candidates, all_candidates, full};
}

} // namespace lpbench
