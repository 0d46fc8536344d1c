#include "lpbench/census.hpp"

namespace lpbench {

EdgeCensus analytic_census(const GraphSpec& spec) {
    spec.validate();
    const double omega = static_cast<double>(spec.structure_size());
    const double m = static_cast<double>(spec.n_structures);
    const double ns = static_cast<double>(spec.n_structure_nodes());
    const double nb = static_cast<double>(spec.n_bridge);

    EdgeCensus c;
    c.n_nodes = spec.n_nodes();
    c.e_ss_possible = m * omega * (omega - 1.0) / 2.0;
    c.e_ss_existing = m * static_cast<double>(structure_edge_count(spec.kind, spec.k));
    c.e_ss_missing = c.e_ss_possible - c.e_ss_existing;
    c.e_sb_possible = ns * nb;
    c.e_sb_existing = spec.bridge_degree * nb; // expectation
    c.e_sb_missing = c.e_sb_possible - c.e_sb_existing;
    c.e_bl_missing = ns * (ns - 1.0) / 2.0 - c.e_ss_possible;
    c.e_bb_missing = nb * (nb - 1.0) / 2.0;
    c.e_impossible = c.e_bl_missing + c.e_bb_missing;
    c.e_total_existing = c.e_ss_existing + c.e_sb_existing;
    return c;
}

EdgeCensus empirical_census(const SyntheticGraph& graph) {
    // Possible counts from the role allocation.
    std::uint64_t n_bridge = 0;
    std::uint64_t ss_pairs = 0; // sum over structures of n_s * (n_s - 1) / 2
    {
        std::vector<std::uint64_t> block_sizes;
        for (const auto role : graph.roles) {
            if (role.is_bridge()) {
                ++n_bridge;
                continue;
            }
            if (role.structure > block_sizes.size()) block_sizes.resize(role.structure, 0);
            ++block_sizes[role.structure - 1];
        }
        for (const auto size : block_sizes) ss_pairs += size * (size - 1) / 2;
    }
    const std::uint64_t n = graph.roles.size();
    const std::uint64_t ns = n - n_bridge;

    std::uint64_t ss_existing = 0, sb_existing = 0;
    for (const auto& e : graph.edges) {
        const NodeRole ru = graph.role_of(e.u), rv = graph.role_of(e.v);
        if (ru.is_bridge() && rv.is_bridge())
            throw DataError("corrupted graph: bridge-bridge edge (" + std::to_string(e.u) +
                            ", " + std::to_string(e.v) + ")");
        if (ru.is_bridge() || rv.is_bridge()) {
            ++sb_existing;
        } else if (ru.structure == rv.structure) {
            ++ss_existing;
        } else {
            throw DataError("corrupted graph: cross-structure edge (" + std::to_string(e.u) +
                            ", " + std::to_string(e.v) + ")");
        }
    }

    EdgeCensus c;
    c.n_nodes = n;
    c.e_ss_possible = static_cast<double>(ss_pairs);
    c.e_ss_existing = static_cast<double>(ss_existing);
    c.e_ss_missing = c.e_ss_possible - c.e_ss_existing;
    c.e_sb_possible = static_cast<double>(ns) * static_cast<double>(n_bridge);
    c.e_sb_existing = static_cast<double>(sb_existing);
    c.e_sb_missing = c.e_sb_possible - c.e_sb_existing;
    c.e_bl_missing = static_cast<double>(ns) * (static_cast<double>(ns) - 1.0) / 2.0 -
                     c.e_ss_possible;
    c.e_bb_missing = static_cast<double>(n_bridge) * (static_cast<double>(n_bridge) - 1.0) / 2.0;
    c.e_impossible = c.e_bl_missing + c.e_bb_missing;
    c.e_total_existing = c.e_ss_existing + c.e_sb_existing;
    return c;
}

double existing_ss_fraction(const EdgeCensus& census) {
    const double existing = census.e_ss_existing + census.e_sb_existing;
    if (existing <= 0.0) throw ConfigError("census has no existing edges");
    return census.e_ss_existing / existing;
}

double missing_sb_fraction(const EdgeCensus& census) {
    const double missing = census.total_missing();
    if (missing <= 0.0) throw ConfigError("census has no non-existing pairs");
    return census.e_sb_missing / missing;
}

} // namespace lpbench
