#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpbench/graph.hpp"

namespace lpbench {

/// Edge-list file contract: UTF-8 text, one "u<TAB>v" pair per line with
/// u < v (0-indexed), '#' comment lines. The first comment line records the
/// GraphSpec as key=value pairs; later "key=value" comment tokens are kept
/// as annotations (split role, fraction, seed, provenance).
struct EdgeListData {
    std::vector<Edge> edges; // sorted, unique
    std::optional<GraphSpec> spec;
    std::map<std::string, std::string> annotations;
};

/// Key=value rendering of a spec for the header line (no leading '#').
std::string spec_header_line(const GraphSpec& spec);

/// Parses the key=value pairs produced by spec_header_line.
GraphSpec parse_spec_header(std::string_view line);

void write_edge_list(std::ostream& out, std::span<const Edge> edges, const GraphSpec* spec,
                     std::span<const std::string> extra_comments = {});
void write_edge_list(const std::filesystem::path& path, std::span<const Edge> edges,
                     const GraphSpec* spec, std::span<const std::string> extra_comments = {});

EdgeListData read_edge_list(std::istream& in, const std::string& name);
EdgeListData read_edge_list(const std::filesystem::path& path);

/// Roles file: one "node<TAB>role" per line, role = "S<index>" or "B".
void write_roles(std::ostream& out, std::span<const NodeRole> roles);
void write_roles(const std::filesystem::path& path, std::span<const NodeRole> roles);
std::vector<NodeRole> read_roles(std::istream& in, const std::string& name);
std::vector<NodeRole> read_roles(const std::filesystem::path& path);

/// Rebuilds a SyntheticGraph from an edge-list file whose header carries the
/// GraphSpec. A roles file, when given, is cross-checked against the spec's
/// block allocation. Throws DataError on missing spec, out-of-range nodes,
/// duplicate edges, or role mismatches.
SyntheticGraph load_graph(const std::filesystem::path& edges_path,
                          const std::optional<std::filesystem::path>& roles_path = {});

} // namespace lpbench
