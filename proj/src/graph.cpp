#include "lpbench/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpbench/rng.hpp"

namespace lpbench {

std::string kind_name(const StructureKind& kind) {
    switch (kind.type) {
    case StructureType::clique: return "clique";
    case StructureType::lattice: return "lattice";
    case StructureType::lattice_diag: return "lattice-diag" + std::to_string(kind.diagonals);
    }
    throw ConfigError("unknown structure type");
}

StructureKind parse_kind_name(const std::string& name) {
    if (name == "clique") return StructureKind::make_clique();
    if (name == "lattice") return StructureKind::make_lattice();
    if (name == "lattice-diag1") return StructureKind::make_lattice_diag(1);
    if (name == "lattice-diag2") return StructureKind::make_lattice_diag(2);
    throw ConfigError("unknown structure kind '" + name + "'");
}

std::uint64_t GraphSpec::structure_size() const { return structure_node_count(kind, k); }

double GraphSpec::bridge_link_probability() const {
    return bridge_degree / static_cast<double>(n_structure_nodes());
}

void GraphSpec::validate() const {
    if (n_structures < 1) throw ConfigError("number of structures must be >= 1");
    if (k < 1) throw ConfigError("structure size parameter k must be >= 1");
    if (kind.type == StructureType::lattice_diag) {
        if (kind.diagonals != 1 && kind.diagonals != 2)
            throw ConfigError("diagonal count must be 1 or 2");
    } else if (kind.diagonals != 0) {
        throw ConfigError("diagonal count only applies to diagonal lattices");
    }
    if (!(bridge_degree >= 0.0)) throw ConfigError("bridge degree must be >= 0");
    const double p = bridge_link_probability();
    if (p > 1.0)
        throw ConfigError("bridge link probability D_B/N_S = " + std::to_string(p) +
                          " exceeds 1; lower the bridge degree or enlarge the structures");
    if (n_nodes() > std::numeric_limits<std::uint32_t>::max())
        throw ConfigError("graph too large: node count exceeds 32-bit indices");
}

Edge make_edge(std::uint32_t a, std::uint32_t b) {
    if (a == b) throw ConfigError("self-loop (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::uint64_t structure_node_count(const StructureKind& kind, std::uint64_t k) {
    return kind.type == StructureType::clique ? k : k * k;
}

namespace {

// Local lattice coordinates under row-major indexing.
struct Cell {
    std::uint64_t row, col;
};

Cell cell_of(std::uint64_t index, std::uint64_t k) { return {index / k, index % k}; }

bool lattice_link(std::uint64_t k, std::uint64_t a, std::uint64_t b) {
    const Cell ca = cell_of(a, k), cb = cell_of(b, k);
    const std::uint64_t dr = ca.row > cb.row ? ca.row - cb.row : cb.row - ca.row;
    const std::uint64_t dc = ca.col > cb.col ? ca.col - cb.col : cb.col - ca.col;
    return (dr == 0 && dc == 1) || (dr == 1 && dc == 0);
}

// Diagonals of the unit cell with corners (r,c)..(r+1,c+1): the main
// diagonal joins (r,c)-(r+1,c+1), the anti-diagonal (r,c+1)-(r+1,c).
bool diagonal_link(std::uint64_t k, int diagonals, std::uint64_t a, std::uint64_t b) {
    const Cell ca = cell_of(std::min(a, b), k), cb = cell_of(std::max(a, b), k);
    if (cb.row != ca.row + 1) return false;
    if (cb.col == ca.col + 1) return true;                    // main diagonal
    if (diagonals == 2 && ca.col == cb.col + 1) return true;  // anti-diagonal
    return false;
}

} // namespace

bool structure_link(const StructureKind& kind, std::uint64_t k, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t size = structure_node_count(kind, k);
    if (a >= size || b >= size)
        throw ConfigError("local index out of range for structure of " + std::to_string(size) + " nodes");
    if (a == b) throw ConfigError("link function undefined for equal indices");
    switch (kind.type) {
    case StructureType::clique: return true;
    case StructureType::lattice: return lattice_link(k, a, b);
    case StructureType::lattice_diag:
        return lattice_link(k, a, b) || diagonal_link(k, kind.diagonals, a, b);
    }
    throw ConfigError("unknown structure type");
}

std::uint64_t structure_edge_count(const StructureKind& kind, std::uint64_t k) {
    switch (kind.type) {
    case StructureType::clique: return k * (k - 1) / 2;
    case StructureType::lattice: return 2 * k * (k - 1);
    case StructureType::lattice_diag:
        return 2 * k * (k - 1) + static_cast<std::uint64_t>(kind.diagonals) * (k - 1) * (k - 1);
    }
    throw ConfigError("unknown structure type");
}

NodeRole SyntheticGraph::role_of(std::uint32_t node) const {
    if (node >= roles.size())
        throw ConfigError("node " + std::to_string(node) + " out of range (N = " +
                          std::to_string(roles.size()) + ")");
    return roles[node];
}

bool SyntheticGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
    const Edge e = make_edge(a, b);
    return std::binary_search(edges.begin(), edges.end(), e);
}

NodeRole role_from_spec(const GraphSpec& spec, std::uint64_t node) {
    const std::uint64_t ns = spec.n_structure_nodes();
    if (node >= spec.n_nodes())
        throw ConfigError("node " + std::to_string(node) + " out of range");
    if (node >= ns) return NodeRole::bridge();
    return NodeRole::in_structure(static_cast<std::uint32_t>(node / spec.structure_size() + 1));
}

SyntheticGraph generate(const GraphSpec& spec) {
    spec.validate();
    const std::uint64_t omega = spec.structure_size();
    const std::uint64_t ns = spec.n_structure_nodes();
    const std::uint64_t n = spec.n_nodes();

    SyntheticGraph graph;
    graph.spec = spec;
    graph.roles.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) graph.roles.push_back(role_from_spec(spec, i));

    graph.edges.reserve(spec.n_structures * structure_edge_count(spec.kind, spec.k) +
                        static_cast<std::uint64_t>(std::ceil(spec.bridge_degree * spec.n_bridge)));

    for (std::uint64_t s = 0; s < spec.n_structures; ++s) {
        const std::uint64_t base = s * omega;
        for (std::uint64_t a = 0; a < omega; ++a)
            for (std::uint64_t b = a + 1; b < omega; ++b)
                if (structure_link(spec.kind, spec.k, a, b))
                    graph.edges.push_back({static_cast<std::uint32_t>(base + a),
                                           static_cast<std::uint32_t>(base + b)});
    }

    const double p = spec.bridge_link_probability();
    Rng rng(spec.seed);
    for (std::uint64_t j = 0; j < spec.n_bridge; ++j) {
        const auto bridge = static_cast<std::uint32_t>(ns + j);
        for (std::uint64_t i = 0; i < ns; ++i)
            if (rng.bernoulli(p)) graph.edges.push_back({static_cast<std::uint32_t>(i), bridge});
    }

    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

} // namespace lpbench
