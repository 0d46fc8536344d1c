#include "lpbench/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lpbench/text.hpp"

namespace lpbench {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
    return out;
}

} // namespace

std::string spec_header_line(const GraphSpec& spec) {
    std::string line = "structure=" + kind_name(spec.kind);
    line += " k=" + std::to_string(spec.k);
    line += " m=" + std::to_string(spec.n_structures);
    line += " nb=" + std::to_string(spec.n_bridge);
    line += " db=" + format_double(spec.bridge_degree);
    line += " seed=" + std::to_string(spec.seed);
    return line;
}

GraphSpec parse_spec_header(std::string_view line) {
    GraphSpec spec;
    bool saw_structure = false, saw_k = false, saw_m = false;
    for (const auto field : split_fields(line)) {
        const auto eq = field.find('=');
        if (eq == std::string_view::npos)
            throw DataError("malformed spec header token '" + std::string(field) + "'");
        const auto key = field.substr(0, eq);
        const auto value = field.substr(eq + 1);
        if (key == "structure") {
            spec.kind = parse_kind_name(std::string(value));
            saw_structure = true;
        } else if (key == "k") {
            spec.k = parse_u64(value, "k");
            saw_k = true;
        } else if (key == "m") {
            spec.n_structures = parse_u64(value, "m");
            saw_m = true;
        } else if (key == "nb") {
            spec.n_bridge = parse_u64(value, "nb");
        } else if (key == "db") {
            spec.bridge_degree = parse_double(value, "db");
        } else if (key == "seed") {
            spec.seed = parse_u64(value, "seed");
        } else {
            throw DataError("unknown spec header key '" + std::string(key) + "'");
        }
    }
    if (!saw_structure || !saw_k || !saw_m)
        throw DataError("spec header must carry structure, k and m");
    return spec;
}

void write_edge_list(std::ostream& out, std::span<const Edge> edges, const GraphSpec* spec,
                     std::span<const std::string> extra_comments) {
    if (spec != nullptr) out << "# " << spec_header_line(*spec) << "\n";
    for (const auto& comment : extra_comments) out << "# " << comment << "\n";
    for (const auto& e : edges) out << e.u << "\t" << e.v << "\n";
}

void write_edge_list(const std::filesystem::path& path, std::span<const Edge> edges,
                     const GraphSpec* spec, std::span<const std::string> extra_comments) {
    auto out = open_output(path);
    write_edge_list(out, edges, spec, extra_comments);
    if (!out) throw DataError("write failed for '" + path.string() + "'");
}

EdgeListData read_edge_list(std::istream& in, const std::string& name) {
    EdgeListData data;
    std::string line;
    std::size_t line_no = 0;
    bool first_comment = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const auto body = trim(text.substr(1));
            if (first_comment && body.find("structure=") != std::string_view::npos) {
                data.spec = parse_spec_header(body);
            } else {
                for (const auto field : split_fields(body)) {
                    const auto eq = field.find('=');
                    if (eq != std::string_view::npos)
                        data.annotations.emplace(std::string(field.substr(0, eq)),
                                                 std::string(field.substr(eq + 1)));
                }
            }
            first_comment = false;
            continue;
        }
        const auto fields = split_fields(text);
        if (fields.size() != 2)
            throw DataError(name + ":" + std::to_string(line_no) + ": expected 'u<TAB>v'");
        const std::uint64_t u = parse_u64(fields[0], "node index");
        const std::uint64_t v = parse_u64(fields[1], "node index");
        if (u >= v)
            throw DataError(name + ":" + std::to_string(line_no) + ": edges must satisfy u < v");
        data.edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
    }
    std::sort(data.edges.begin(), data.edges.end());
    const auto dup = std::adjacent_find(data.edges.begin(), data.edges.end());
    if (dup != data.edges.end())
        throw DataError(name + ": duplicate edge (" + std::to_string(dup->u) + ", " +
                        std::to_string(dup->v) + ")");
    return data;
}

EdgeListData read_edge_list(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_edge_list(in, path.string());
}

void write_roles(std::ostream& out, std::span<const NodeRole> roles) {
    for (std::size_t i = 0; i < roles.size(); ++i) {
        out << i << "\t";
        if (roles[i].is_bridge())
            out << "B\n";
        else
            out << "S" << roles[i].structure << "\n";
    }
}

void write_roles(const std::filesystem::path& path, std::span<const NodeRole> roles) {
    auto out = open_output(path);
    write_roles(out, roles);
    if (!out) throw DataError("write failed for '" + path.string() + "'");
}

std::vector<NodeRole> read_roles(std::istream& in, const std::string& name) {
    std::vector<NodeRole> roles;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto fields = split_fields(text);
        if (fields.size() != 2)
            throw DataError(name + ":" + std::to_string(line_no) + ": expected 'node<TAB>role'");
        const std::uint64_t node = parse_u64(fields[0], "node index");
        if (node != roles.size())
            throw DataError(name + ":" + std::to_string(line_no) +
                            ": nodes must be listed consecutively from 0");
        const auto role = fields[1];
        if (role == "B") {
            roles.push_back(NodeRole::bridge());
        } else if (role.size() > 1 && role.front() == 'S') {
            const auto index = parse_u64(role.substr(1), "structure index");
            if (index == 0) throw DataError(name + ":" + std::to_string(line_no) +
                                            ": structure indices are 1-based");
            roles.push_back(NodeRole::in_structure(static_cast<std::uint32_t>(index)));
        } else {
            throw DataError(name + ":" + std::to_string(line_no) + ": unknown role '" +
                            std::string(role) + "'");
        }
    }
    return roles;
}

std::vector<NodeRole> read_roles(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_roles(in, path.string());
}

SyntheticGraph load_graph(const std::filesystem::path& edges_path,
                          const std::optional<std::filesystem::path>& roles_path) {
    auto data = read_edge_list(edges_path);
    if (!data.spec)
        throw DataError(edges_path.string() + ": missing spec header (first comment line)");
    const GraphSpec& spec = *data.spec;
    spec.validate();

    SyntheticGraph graph;
    graph.spec = spec;
    const std::uint64_t n = spec.n_nodes();
    graph.roles.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) graph.roles.push_back(role_from_spec(spec, i));

    for (const auto& e : data.edges)
        if (e.v >= n)
            throw DataError(edges_path.string() + ": node " + std::to_string(e.v) +
                            " out of range for N = " + std::to_string(n));
    graph.edges = std::move(data.edges);

    if (roles_path) {
        const auto file_roles = read_roles(*roles_path);
        if (file_roles.size() != graph.roles.size())
            throw DataError(roles_path->string() + ": role count " +
                            std::to_string(file_roles.size()) + " does not match N = " +
                            std::to_string(graph.roles.size()));
        for (std::size_t i = 0; i < file_roles.size(); ++i)
            if (!(file_roles[i] == graph.roles[i]))
                throw DataError(roles_path->string() + ": role of node " + std::to_string(i) +
                                " does not match the spec's block allocation");
    }
    return graph;
}

} // namespace lpbench
