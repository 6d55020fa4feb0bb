#include "hype/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

namespace hype {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_comment(std::string_view line) { return !line.empty() && line.front() == '%'; }

bool is_blank(std::string_view line) {
    for (char c : line) {
        if (!is_space(c)) {
            return false;
        }
    }
    return true;
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && is_space(line[pos])) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && !is_space(line[pos])) {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

std::uint64_t parse_u64(std::string_view token, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " + what + ", got '" +
                         std::string(token) + "'");
    }
    return value;
}

}  // namespace

Hypergraph load_hmetis(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    // Header: first non-comment line.
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) {
            continue;
        }
        const auto tokens = tokenize(line);
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": header must be 'm n' (weighted hMETIS variants are not supported)");
        }
        m = parse_u64(tokens[0], line_no, "hyperedge count");
        n = parse_u64(tokens[1], line_no, "vertex count");
        if (m >= kUnassigned || n >= kUnassigned) {
            throw ParseError("declared sizes exceed the 32-bit id range");
        }
        have_header = true;
        break;
    }
    if (!have_header) {
        throw ParseError("missing hMETIS header line");
    }

    std::vector<std::vector<VertexId>> edges;
    edges.reserve(m);
    while (edges.size() < m && std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) {
            continue;
        }
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty hyperedge line");
        }
        std::vector<VertexId> members;
        members.reserve(tokens.size());
        for (const auto token : tokens) {
            const std::uint64_t id = parse_u64(token, line_no, "vertex id");
            if (id < 1 || id > n) {
                throw ParseError("line " + std::to_string(line_no) + ": vertex id " +
                                 std::to_string(id) + " out of range [1, " + std::to_string(n) + "]");
            }
            members.push_back(static_cast<VertexId>(id - 1));
        }
        edges.push_back(std::move(members));
    }
    if (edges.size() < m) {
        throw ParseError("fewer hyperedge lines than the declared " + std::to_string(m));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line) || is_blank(line)) {
            continue;
        }
        throw ParseError("line " + std::to_string(line_no) + ": more hyperedge lines than the declared " +
                         std::to_string(m));
    }
    return Hypergraph::build(n, std::move(edges));
}

void write_hmetis(const Hypergraph& g, std::ostream& out) {
    out << g.num_edges() << ' ' << g.num_vertices() << '\n';
    for (HyperedgeId e = 0; e < g.num_edges(); ++e) {
        bool first = true;
        for (VertexId v : g.edge_members(e)) {
            if (!first) {
                out << ' ';
            }
            out << v + 1;
            first = false;
        }
        out << '\n';
    }
}

EdgeListResult load_edge_list(std::istream& in) {
    EdgeListResult result;
    std::unordered_map<std::string, HyperedgeId> edge_ids;
    std::unordered_map<std::string, VertexId> vertex_ids;
    std::vector<std::vector<VertexId>> edges;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) {
            continue;
        }
        const auto tokens = tokenize(line);
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'hyperedge_label vertex_label', got " +
                             std::to_string(tokens.size()) + " token(s)");
        }
        const auto [eit, e_new] = edge_ids.try_emplace(std::string(tokens[0]),
                                                       static_cast<HyperedgeId>(edges.size()));
        if (e_new) {
            result.edge_labels.emplace_back(tokens[0]);
            edges.emplace_back();
        }
        const auto [vit, v_new] = vertex_ids.try_emplace(std::string(tokens[1]),
                                                         static_cast<VertexId>(result.vertex_labels.size()));
        if (v_new) {
            result.vertex_labels.emplace_back(tokens[1]);
        }
        edges[eit->second].push_back(vit->second);
    }
    result.graph = Hypergraph::build(result.vertex_labels.size(), std::move(edges));
    return result;
}

void write_label_dictionary(const std::vector<std::string>& labels, std::ostream& out) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << i << ' ' << labels[i] << '\n';
    }
}

void write_partition(const Assignment& a, std::ostream& out) {
    for (PartitionId p : a.parts) {
        out << p << '\n';
    }
}

Assignment read_partition(std::istream& in) {
    Assignment a;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line) || is_blank(line)) {
            continue;
        }
        const auto tokens = tokenize(line);
        if (tokens.size() != 1) {
            throw ParseError("line " + std::to_string(line_no) + ": expected one partition id per line");
        }
        const std::uint64_t id = parse_u64(tokens[0], line_no, "partition id");
        if (id >= kUnassigned) {
            throw ParseError("line " + std::to_string(line_no) + ": partition id too large");
        }
        a.parts.push_back(static_cast<PartitionId>(id));
        if (id + 1 > a.num_partitions) {
            a.num_partitions = static_cast<std::uint32_t>(id + 1);
        }
    }
    return a;
}

}  // namespace hype
