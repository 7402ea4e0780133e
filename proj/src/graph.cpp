#include "hcent/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "hcent/errors.hpp"

namespace hcent {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 1 || n > kMaxVertices) {
        throw SizeError("vertex count " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxVertices) + "]");
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ArgumentError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") out of range");
        }
        if (u == v) {
            throw ArgumentError("self-loop at vertex " + std::to_string(u));
        }
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        degree_sum += row.size();
    }
    return Graph(std::move(adj), degree_sum / 2);
}

bool Graph::adjacent(int u, int v) const {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Matrix Graph::adjacency_matrix() const {
    linalg::require_dense_dim(vertex_count());
    Matrix a = Matrix::Zero(vertex_count(), vertex_count());
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : neighbors(u)) a(u, v) = 1.0;
    }
    return a;
}

Matrix Graph::laplacian() const {
    Matrix l = -adjacency_matrix();
    for (int u = 0; u < vertex_count(); ++u) l(u, u) = degree(u);
    return l;
}

Graph hypercube_graph(int d) {
    if (d < 1 || d > kMaxHypercubeDim) {
        throw SizeError("hypercube dimension " + std::to_string(d) + " outside [1, " +
                        std::to_string(kMaxHypercubeDim) + "]");
    }
    const int n = 1 << d;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(n) / 2);
    for (int u = 0; u < n; ++u) {
        for (int b = 0; b < d; ++b) {
            const int v = u ^ (1 << b);
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

// Strict non-negative integer token; rejects signs other than a leading '-' we report.
int parse_vertex(std::string_view token, std::size_t line) {
    if (!token.empty() && token.front() == '-') {
        throw ParseError(line, "negative vertex index '" + std::string(token) + "'");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line, "vertex index '" + std::string(token) + "' too large");
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "cannot parse vertex index '" + std::string(token) + "'");
    }
    if (value >= kMaxVertices) {
        throw ParseError(line, "vertex index " + std::to_string(value) + " exceeds limit");
    }
    return value;
}

}  // namespace

Graph graph_from_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int max_index = -1;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::string_view> tokens;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
            if (end > pos) tokens.push_back(line.substr(pos, end - pos));
            pos = end;
        }
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two vertex indices, got " +
                                          std::to_string(tokens.size()) + " tokens");
        }
        const int u = parse_vertex(tokens[0], line_no);
        const int v = parse_vertex(tokens[1], line_no);
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    if (edges.empty()) throw ParseError(line_no, "edge list contains no edges");
    return Graph::from_edges(max_index + 1, edges);
}

Graph graph_from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return graph_from_edge_list(in);
}

std::string to_edge_list(const Graph& graph) {
    std::string out;
    for (auto [u, v] : graph.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph graph_from_uri(std::string_view uri) {
    constexpr std::string_view kCube = "hypercube:";
    constexpr std::string_view kFile = "file:";
    if (uri.starts_with(kCube)) {
        auto rest = uri.substr(kCube.size());
        int d = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
        if (ec != std::errc() || ptr != rest.data() + rest.size()) {
            throw ArgumentError("bad hypercube dimension in '" + std::string(uri) + "'");
        }
        return hypercube_graph(d);
    }
    if (uri.starts_with(kFile)) {
        const std::string path(uri.substr(kFile.size()));
        std::ifstream in(path);
        if (!in) throw ArgumentError("cannot open edge list '" + path + "'");
        return graph_from_edge_list(in);
    }
    throw ArgumentError("unknown graph URI '" + std::string(uri) +
                        "' (expected hypercube:<d> or file:<path>)");
}

PotentialMatrix potential_matrix(const Graph& graph, double g) {
    Matrix v = Matrix::Identity(graph.vertex_count(), graph.vertex_count()) + 2.0 * g * graph.laplacian();
    Eigen::LLT<Matrix> llt(v);
    if (llt.info() != Eigen::Success) {
        throw DefinitenessError("I + 2gL is not positive definite for g = " + std::to_string(g));
    }
    return PotentialMatrix(std::move(v), g);
}

Bipartition Bipartition::from_side(int n, std::vector<int> side_a) {
    if (n < 2) throw ArgumentError("a bipartition needs at least two vertices");
    std::sort(side_a.begin(), side_a.end());
    if (std::adjacent_find(side_a.begin(), side_a.end()) != side_a.end()) {
        throw ArgumentError("duplicate vertex in subset");
    }
    if (side_a.empty() || static_cast<int>(side_a.size()) >= n) {
        throw ArgumentError("subset must be non-empty and proper");
    }
    if (side_a.front() < 0 || side_a.back() >= n) {
        throw ArgumentError("subset vertex out of range [0, " + std::to_string(n) + ")");
    }
    std::vector<int> side_b;
    side_b.reserve(static_cast<std::size_t>(n) - side_a.size());
    auto it = side_a.begin();
    for (int v = 0; v < n; ++v) {
        if (it != side_a.end() && *it == v) {
            ++it;
        } else {
            side_b.push_back(v);
        }
    }
    return Bipartition(std::move(side_a), std::move(side_b));
}

int hamming_weight(std::uint32_t x) noexcept { return std::popcount(x); }

std::vector<std::vector<int>> strata_partition(int d) {
    if (d < 1 || d > kMaxHypercubeDim) {
        throw SizeError("hypercube dimension " + std::to_string(d) + " out of range");
    }
    std::vector<std::vector<int>> strata(static_cast<std::size_t>(d) + 1);
    for (std::uint32_t v = 0; v < (1u << d); ++v) {
        strata[static_cast<std::size_t>(hamming_weight(v))].push_back(static_cast<int>(v));
    }
    return strata;
}

Bipartition named_bipartition(int d, NamedCut cut) {
    if (d < 1 || d > kMaxHypercubeDim) {
        throw SizeError("hypercube dimension " + std::to_string(d) + " out of range");
    }
    std::vector<int> side_a;
    const std::uint32_t n = 1u << d;
    switch (cut.scheme) {
        case CutScheme::parity:
            for (std::uint32_t v = 0; v < n; ++v) {
                if (hamming_weight(v) % 2 == 0) side_a.push_back(static_cast<int>(v));
            }
            break;
        case CutScheme::coordinate:
            if (cut.axis < 0 || cut.axis >= d) {
                throw ArgumentError("coordinate axis " + std::to_string(cut.axis) +
                                    " outside [0, " + std::to_string(d) + ")");
            }
            for (std::uint32_t v = 0; v < n; ++v) {
                if (((v >> cut.axis) & 1u) == 0) side_a.push_back(static_cast<int>(v));
            }
            break;
        case CutScheme::half_strata:
            if (d % 2 == 0) {
                throw SchemeError("half-strata cut needs odd d, got d = " + std::to_string(d));
            }
            for (std::uint32_t v = 0; v < n; ++v) {
                if (hamming_weight(v) <= (d - 1) / 2) side_a.push_back(static_cast<int>(v));
            }
            break;
    }
    return Bipartition::from_side(static_cast<int>(n), std::move(side_a));
}

std::size_t cut_edge_count(const Graph& graph, const Bipartition& cut) {
    std::vector<char> in_a(static_cast<std::size_t>(graph.vertex_count()), 0);
    for (int v : cut.side_a()) in_a[static_cast<std::size_t>(v)] = 1;
    std::size_t count = 0;
    for (int u : cut.side_a()) {
        for (int v : graph.neighbors(u)) count += in_a[static_cast<std::size_t>(v)] ? 0 : 1;
    }
    return count;
}

}  // namespace hcent
