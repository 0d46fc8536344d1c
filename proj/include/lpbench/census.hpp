#pragma once

#include "lpbench/graph.hpp"

namespace lpbench {

/// Counts of node pairs per class: SS (same structure), SB
/// (structure-bridge), BL (across structures), BB (bridge-bridge).
/// All fields are reals; every field is an exact count except
/// e_sb_existing / e_sb_missing in analytic mode, where the existing count
/// is the expectation bridge_degree * n_bridge.
struct EdgeCensus {
    double e_ss_possible = 0;
    double e_ss_existing = 0;
    double e_ss_missing = 0;
    double e_sb_possible = 0;
    double e_sb_existing = 0;
    double e_sb_missing = 0;
    double e_bl_missing = 0; // cross-structure pairs, never edges
    double e_bb_missing = 0; // bridge-bridge pairs, never edges
    double e_impossible = 0; // e_bl_missing + e_bb_missing
    double e_total_existing = 0;
    std::uint64_t n_nodes = 0;

    double total_pairs() const {
        const auto n = static_cast<double>(n_nodes);
        return n * (n - 1.0) / 2.0;
    }
    /// All non-existing pairs, as a field sum so the AUC closed forms scale
    /// with the census; equals total_pairs() - e_total_existing whenever the
    /// partition identity holds.
    double total_missing() const { return e_ss_missing + e_sb_missing + e_impossible; }
};

/// Expected census of a spec. Deterministic fields are exact; the SB
/// existing/missing pair carries the expectation D_B * N_B.
EdgeCensus analytic_census(const GraphSpec& spec);

/// Exact census of a concrete graph, classifying every edge by the roles.
/// Throws DataError if the edge set contains a bridge-bridge or
/// cross-structure pair (impossible by construction).
EdgeCensus empirical_census(const SyntheticGraph& graph);

/// Fraction of existing links that lie within structures:
/// e_ss_existing / (e_ss_existing + e_sb_existing).
double existing_ss_fraction(const EdgeCensus& census);

/// Fraction of all non-existing pairs that are structure-bridge:
/// e_sb_missing / total_missing().
double missing_sb_fraction(const EdgeCensus& census);

} // namespace lpbench
