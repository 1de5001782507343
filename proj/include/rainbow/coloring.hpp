#pragma once

#include <rainbow/graph.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rainbow {

using Color = int;

/// Total edge coloring c : E(G) -> {1..t}, keyed by Graph::edge_index.
/// Adjacent edges may share a color; not every color in 1..t has to appear.
class EdgeColoring
{
public:
    EdgeColoring() = default;

    /// Throws PreconditionError if num_colors < 1 or any color lies outside 1..num_colors.
    EdgeColoring(int num_colors, std::vector<Color> colors);

    int num_colors() const noexcept { return num_colors_; }
    int edge_count() const noexcept { return static_cast<int>(colors_.size()); }

    Color operator[](int edge) const { return colors_[edge]; }
    Color at(const Graph & g, Vertex x, Vertex y) const { return colors_[g.edge_index(x, y)]; }
    std::span<const Color> colors() const noexcept { return colors_; }

    /// Number of distinct colors that actually appear.
    int colors_used() const;

    bool operator==(const EdgeColoring &) const = default;

private:
    int num_colors_ = 0;
    std::vector<Color> colors_;
};

/// Coloring text format:
///
///     num_colors <t>
///     edges <m>
///     <a> <b> <color>     (m lines, sorted by edge)
///
/// write_coloring(read_coloring(text)) reproduces canonical text byte for byte.
std::string write_coloring(const Graph & g, const EdgeColoring & c);

/// Throws ParseError if the file is malformed or its edge set differs from g's.
EdgeColoring read_coloring(const Graph & g, std::string_view text);

inline constexpr int kDefaultColorCap = 16;

struct RainbowReach
{
    Vertex source = 0;
    std::vector<bool> reachable;
    /// witness[v] is a rainbow source..v path (vertex sequence), empty when unreachable.
    std::vector<std::vector<Vertex>> witness;
};

/// Exact rainbow reachability from `source` by breadth-first search over
/// (vertex, used-color-set) states. Throws PreconditionError when the coloring
/// has more than `color_cap` colors or does not match g.
RainbowReach rainbow_reachable(const Graph & g, const EdgeColoring & c, Vertex source,
                               int color_cap = kDefaultColorCap);

using VertexPair = std::pair<Vertex, Vertex>;

struct RainbowCertificate
{
    bool connected = false;
    /// One rainbow path per pair (x, y), x < y. Partial when not connected.
    std::map<VertexPair, std::vector<Vertex>> witnesses;
    /// Lexicographically first pair without a rainbow path.
    std::optional<VertexPair> violation;
};

/// Throws PreconditionError if g is disconnected.
RainbowCertificate is_rainbow_connected(const Graph & g, const EdgeColoring & c,
                                        int color_cap = kDefaultColorCap);

/// Decision-only variant without witnesses; stops at the first failing
/// source. Colorings with at most 6 colors take a word-parallel path.
bool rainbow_connected_fast(const Graph & g, std::span<const Color> colors, int num_colors);

/// True when `path` is a path in g (distinct vertices, consecutive adjacent)
/// whose edges carry pairwise-distinct colors.
bool is_rainbow_path(const Graph & g, const EdgeColoring & c, std::span<const Vertex> path);

} // namespace rainbow
