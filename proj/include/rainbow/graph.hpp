#pragma once

#include <compare>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

using Vertex = int;

/// Unordered vertex pair stored with the smaller endpoint first.
struct Edge
{
    Vertex a = 0;
    Vertex b = 0;

    static Edge canonical(Vertex x, Vertex y) { return x < y ? Edge{x, y} : Edge{y, x}; }

    auto operator<=>(const Edge &) const = default;
};

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted by (a, b); an edge's position in that list is its
/// index, which colorings use as their key.
class Graph
{
public:
    Graph() = default;

    /// Throws PreconditionError on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge> & edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    bool adjacent(Vertex x, Vertex y) const { return edge_index_[index(x, y)] >= 0; }

    /// Index into edges(), or -1 when x and y are not adjacent.
    int edge_index(Vertex x, Vertex y) const { return edge_index_[index(x, y)]; }

    bool operator==(const Graph & other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    std::size_t index(Vertex x, Vertex y) const
    {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<int> edge_index_;
};

/// Parses "u v" lines. Text from '#' to end of line is a comment and blank
/// lines are skipped; n is one more than the largest index seen. Throws
/// ParseError carrying the line number.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: one sorted "a b" line per edge.
std::string write_edge_list(const Graph & g);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// BFS distances from `source`; kUnreachable for other components.
std::vector<int> distances_from(const Graph & g, Vertex source);

bool is_connected(const Graph & g);

struct Metrics
{
    std::vector<int> eccentricities;
    int radius = 0;
    int diameter = 0;
    VertexSet center_vertices;
};

/// Throws PreconditionError for disconnected graphs.
Metrics metrics(const Graph & g);

/// Edges whose removal disconnects their component, in sorted order.
std::vector<Edge> bridges(const Graph & g);

struct ShellDecomposition
{
    Vertex center = 0;
    VertexSet shell1;
    VertexSet shell2;
};

ShellDecomposition shells(const Graph & g, Vertex u);

/// Every edge with one end in `x` and the other in `y`, each listed once, sorted.
std::vector<Edge> edges_between(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y);

bool is_independent(const Graph & g, std::span<const Vertex> x);
bool is_clique(const Graph & g, std::span<const Vertex> x);

/// Input condition for five_color: connected, bridgeless, diameter exactly 2.
struct Eligibility
{
    bool connected = false;
    int bridge_count = 0;
    int diameter = 0; ///< 0 when disconnected

    bool eligible() const { return connected && bridge_count == 0 && diameter == 2; }
    std::string reason() const;
};

Eligibility check_eligibility(const Graph & g);

} // namespace rainbow
