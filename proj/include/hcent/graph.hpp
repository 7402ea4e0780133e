#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcent/linalg.hpp"

namespace hcent {

/// Largest hypercube dimension (and log2 of the largest vertex count) accepted.
inline constexpr int kMaxHypercubeDim = 20;
inline constexpr int kMaxVertices = 1 << kMaxHypercubeDim;

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    /// Builds the symmetric closure of `edges`; duplicates collapse.
    /// Throws ArgumentError on self-loops or out-of-range endpoints.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    std::span<const int> neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    Matrix adjacency_matrix() const;
    /// L = diag(degree) - A.
    Matrix laplacian() const;

    bool operator==(const Graph&) const = default;

private:
    explicit Graph(std::vector<std::vector<int>> adj, std::size_t edges)
        : adj_(std::move(adj)), edge_count_(edges) {}

    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

/// H(d,2): vertex i is the d-bit string of i; i ~ j iff i xor j is a power of two.
Graph hypercube_graph(int d);

/// Parses "u v" lines; '#' starts a comment. n = 1 + max index.
Graph graph_from_edge_list(std::istream& in);
Graph graph_from_edge_list(std::string_view text);

/// One "u v" line per edge (u < v), readable by graph_from_edge_list.
std::string to_edge_list(const Graph& graph);

/// Resolves "hypercube:<d>" or "file:<path>".
Graph graph_from_uri(std::string_view uri);

/// V = I + 2gL, certified positive definite.
class PotentialMatrix {
public:
    const Matrix& matrix() const noexcept { return v_; }
    double coupling() const noexcept { return g_; }
    int dim() const noexcept { return static_cast<int>(v_.rows()); }

private:
    friend PotentialMatrix potential_matrix(const Graph& graph, double g);
    PotentialMatrix(Matrix v, double g) : v_(std::move(v)), g_(g) {}

    Matrix v_;
    double g_;
};

/// Negative g is accepted only while I + 2gL stays positive definite.
PotentialMatrix potential_matrix(const Graph& graph, double g);

/// Ordered split of 0..n-1 into two non-empty sorted sides.
class Bipartition {
public:
    /// Side B is the complement of `side_a` in 0..n-1.
    static Bipartition from_side(int n, std::vector<int> side_a);

    int vertex_count() const noexcept {
        return static_cast<int>(side_a_.size() + side_b_.size());
    }
    std::span<const int> side_a() const noexcept { return side_a_; }
    std::span<const int> side_b() const noexcept { return side_b_; }
    /// Same cut with sides swapped.
    Bipartition swapped() const { return Bipartition(side_b_, side_a_); }

    bool operator==(const Bipartition&) const = default;

private:
    Bipartition(std::vector<int> a, std::vector<int> b) : side_a_(std::move(a)), side_b_(std::move(b)) {}

    std::vector<int> side_a_;
    std::vector<int> side_b_;
};

int hamming_weight(std::uint32_t x) noexcept;

/// Stratum i = vertices of Hamming weight i; |stratum i| = C(d, i).
std::vector<std::vector<int>> strata_partition(int d);

enum class CutScheme { parity, coordinate, half_strata };

struct NamedCut {
    CutScheme scheme = CutScheme::parity;
    int axis = 0;  // coordinate only
};

/// Named equal cuts of H(d,2); side A always holds vertex 0.
///   parity      : even Hamming weight
///   coordinate  : bit `axis` clear
///   half_strata : weights 0..(d-1)/2, d odd only
Bipartition named_bipartition(int d, NamedCut cut);

/// Number of edges with one endpoint on each side.
std::size_t cut_edge_count(const Graph& graph, const Bipartition& cut);

}  // namespace hcent
