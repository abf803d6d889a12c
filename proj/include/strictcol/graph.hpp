#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strictcol {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kDefaultMultipartiteBound = 64;
inline constexpr int kDefaultChromaticBound = 16;

/// Sorted part sizes of a complete multipartite graph.
class PartSizes {
public:
    explicit PartSizes(std::vector<int> sizes);
    /// Same syntax as partitions: "2,4,6" or "6*2,2,4".
    static PartSizes parse(std::string_view text);

    std::span<const int> sizes() const { return sizes_; }
    int size(std::size_t i) const { return sizes_[i]; }
    int k() const { return static_cast<int>(sizes_.size()); }
    int total() const;
    std::string to_string() const;

    friend bool operator==(const PartSizes&, const PartSizes&) = default;

private:
    std::vector<int> sizes_;
};

/// Simple undirected graph on vertices 0..n-1, at most 64 vertices.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    VertexMask neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Part index per vertex; present for complete multipartite graphs.
    const std::optional<std::vector<int>>& part_label() const { return part_label_; }
    /// Attaches part labels. Throws PreconditionError unless adjacency is
    /// exactly "different part".
    void set_part_label(std::vector<int> label);
    /// Vertices of each part, in part-index order.
    std::vector<std::vector<int>> parts() const;

    /// Subgraph induced on `vertices` (in the given order).
    Graph induced(std::span<const int> vertices) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_;
    std::vector<VertexMask> adj_;
    std::optional<std::vector<int>> part_label_;
};

/// Parts laid out consecutively in sorted size order; part labels set.
Graph complete_multipartite(const PartSizes& sizes, int bound = kDefaultMultipartiteBound);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);

/// Exact chromatic number. Generic graphs are limited to `bound` vertices;
/// part-labelled graphs return their part count.
int chromatic_number(const Graph& g, int bound = kDefaultChromaticBound);

/// Whether the complete multipartite graph on `pattern` is a subgraph of the
/// one on `host`.
bool contains_parts(const PartSizes& host, const PartSizes& pattern);

/// Brute-force subgraph embedding search between the two complete
/// multipartite graphs. Pattern <= 12 vertices, host <= 16.
bool embedding_oracle(const PartSizes& host, const PartSizes& pattern);

/// True iff `coloring` gives every edge two different colors. The coloring
/// must have one entry per vertex, none negative (negative = uncolored).
bool is_proper(const Graph& g, std::span<const int> coloring);

/// Connected components as vertex lists, each sorted.
std::vector<std::vector<int>> connected_components(const Graph& g);

} // namespace strictcol
