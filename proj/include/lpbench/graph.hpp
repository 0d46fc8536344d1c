#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpbench/errors.hpp"

namespace lpbench {

/// Connectivity pattern used inside every structure of a graph.
enum class StructureType { clique, lattice, lattice_diag };

/// A structure type plus, for diagonal lattices, the number of closed
/// diagonal directions per unit cell (1 = main diagonal, 2 = both).
struct StructureKind {
    StructureType type = StructureType::clique;
    int diagonals = 0; // 1 or 2, lattice_diag only

    static StructureKind make_clique() { return {StructureType::clique, 0}; }
    static StructureKind make_lattice() { return {StructureType::lattice, 0}; }
    static StructureKind make_lattice_diag(int m) { return {StructureType::lattice_diag, m}; }

    friend bool operator==(const StructureKind&, const StructureKind&) = default;
};

/// Compact single-token name, e.g. "clique", "lattice", "lattice-diag1".
std::string kind_name(const StructureKind& kind);

/// Inverse of kind_name. Throws ConfigError on unknown names.
StructureKind parse_kind_name(const std::string& name);

/// Generator parameter vector.
struct GraphSpec {
    std::uint64_t n_bridge = 0;     // number of bridge nodes
    double bridge_degree = 0.0;     // expected bridge degree
    std::uint64_t n_structures = 1; // number of structures
    StructureKind kind;
    std::uint64_t k = 1; // clique size / lattice side
    std::uint64_t seed = 0;

    std::uint64_t structure_size() const;  // nodes per structure
    std::uint64_t n_structure_nodes() const { return n_structures * structure_size(); }
    std::uint64_t n_nodes() const { return n_structure_nodes() + n_bridge; }
    double bridge_link_probability() const; // bridge_degree / n_structure_nodes

    /// Throws ConfigError if any invariant fails (m >= 1, k >= 1, valid
    /// diagonal count, 0 <= bridge probability <= 1, node count fits 32 bits).
    void validate() const;

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Role of a node: member of one structure (1-based index) or bridge.
struct NodeRole {
    std::uint32_t structure = 0; // 0 marks a bridge node

    static NodeRole bridge() { return {0}; }
    static NodeRole in_structure(std::uint32_t index) { return {index}; }
    bool is_bridge() const { return structure == 0; }

    friend bool operator==(const NodeRole&, const NodeRole&) = default;
};

/// Unordered node pair stored with u < v.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes (a, b) to an Edge. Throws ConfigError on self-loops.
Edge make_edge(std::uint32_t a, std::uint32_t b);

/// Nodes per structure for a kind: k for cliques, k*k for lattices.
std::uint64_t structure_node_count(const StructureKind& kind, std::uint64_t k);

/// Link function over local (row-major) indices inside one structure.
/// Clique: every pair. Lattice: horizontal neighbours within a row and
/// vertical neighbours. Diagonal lattices additionally close, per unit cell,
/// the main diagonal (diagonals = 1) or both diagonals (diagonals = 2).
/// Throws ConfigError for out-of-range or equal local indices.
bool structure_link(const StructureKind& kind, std::uint64_t k, std::uint64_t a, std::uint64_t b);

/// Closed-form number of links inside one structure:
/// clique k(k-1)/2, lattice 2k(k-1), diagonal lattice 2k(k-1) + m(k-1)^2.
std::uint64_t structure_edge_count(const StructureKind& kind, std::uint64_t k);

/// A generated instance: role allocation plus undirected edge set.
/// Structure nodes occupy indices [0, N_S) in contiguous blocks (structure s
/// covers block s-1), bridge nodes occupy [N_S, N). Edges are sorted and
/// hold u < v.
struct SyntheticGraph {
    GraphSpec spec;
    std::vector<NodeRole> roles;
    std::vector<Edge> edges;

    std::uint32_t n_nodes() const { return static_cast<std::uint32_t>(roles.size()); }
    std::uint64_t n_pairs() const {
        const std::uint64_t n = roles.size();
        return n * (n - 1) / 2;
    }

    /// Allocation function tau. Throws ConfigError for out-of-range nodes.
    NodeRole role_of(std::uint32_t node) const;

    /// Membership test by binary search over the sorted edge list.
    bool has_edge(std::uint32_t a, std::uint32_t b) const;
};

/// Role of node `i` under the contiguous-block allocation of `spec`.
NodeRole role_from_spec(const GraphSpec& spec, std::uint64_t node);

/// Builds the graph for `spec`: exact structural edges per structure_link,
/// then one independent Bernoulli(bridge_degree / N_S) trial per
/// (bridge, structure-node) pair. Deterministic given spec.seed.
SyntheticGraph generate(const GraphSpec& spec);

} // namespace lpbench
