#pragma once

// Graph builders and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's algorithms: distances by
// Floyd-Warshall, bridges by deleting edges, rainbow reachability by
// enumerating simple paths.

#include <rainbow/coloring.hpp>
#include <rainbow/generator.hpp>
#include <rainbow/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace rainbow::testing {

inline Graph complete(int n)
{
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            e.push_back({a, b});
    return Graph(n, e);
}

inline Graph path(int n)
{
    std::vector<Edge> e;
    for (int a = 0; a + 1 < n; ++a)
        e.push_back({a, a + 1});
    return Graph(n, e);
}

inline Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        e.push_back(Edge::canonical(a, (a + 1) % n));
    return Graph(n, e);
}

inline Graph star(int leaves)
{
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v)
        e.push_back({0, v});
    return Graph(leaves + 1, e);
}

/// Hub 0 and rim 1..rim.
inline Graph wheel(int rim)
{
    std::vector<Edge> e;
    for (int v = 1; v <= rim; ++v) {
        e.push_back({0, v});
        e.push_back(Edge::canonical(v, v % rim + 1));
    }
    return Graph(rim + 1, e);
}

/// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> e;
    for (int x = 0; x < a; ++x)
        for (int y = a; y < a + b; ++y)
            e.push_back({x, y});
    return Graph(a + b, e);
}

inline Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back(Edge::canonical(i, (i + 1) % 5));
        e.push_back({i, i + 5});
        e.push_back(Edge::canonical(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, e);
}

/// Same graph with vertex v renamed perm[v].
inline Graph relabel(const Graph & g, const std::vector<Vertex> & perm)
{
    std::vector<Edge> e;
    for (auto [a, b] : g.edges())
        e.push_back(Edge::canonical(perm[a], perm[b]));
    return Graph(g.order(), e);
}

inline std::vector<Vertex> random_permutation(int n, SplitMix64 & rng)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return p;
}

/// G(n, p) with no connectivity guarantee.
inline Graph random_graph(int n, double p, SplitMix64 & rng)
{
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.chance(p))
                e.push_back({a, b});
    return Graph(n, e);
}

/// Random spanning tree plus extra random edges, total edge count <= max_edges.
inline Graph random_connected(int n, int max_edges, SplitMix64 & rng)
{
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v)
        e.push_back(Edge::canonical(v, static_cast<int>(rng.below(v))));
    const int target = rng.between(n - 1, std::min(max_edges, n * (n - 1) / 2));
    while (static_cast<int>(e.size()) < target) {
        int a = static_cast<int>(rng.below(n)), b = static_cast<int>(rng.below(n));
        auto edge = Edge::canonical(a, b);
        if (a != b && std::find(e.begin(), e.end(), edge) == e.end())
            e.push_back(edge);
    }
    return Graph(n, e);
}

inline GenModel gen_model(Model model, int n, std::uint64_t seed)
{
    GenModel m;
    m.model = model;
    m.n = n;
    m.seed = seed;
    return m;
}

inline EdgeColoring random_coloring(const Graph & g, int t, SplitMix64 & rng)
{
    std::vector<Color> c(g.size());
    for (auto & x : c)
        x = rng.between(1, t);
    return EdgeColoring(t, c);
}

inline EdgeColoring uniform_coloring(const Graph & g, Color color)
{
    return EdgeColoring(color, std::vector<Color>(g.size(), color));
}

// ---- oracles ---------------------------------------------------------------

inline constexpr int kInf = 1 << 20;

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> apsp_oracle(const Graph & g)
{
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int v = 0; v < n; ++v)
        d[v][v] = 0;
    for (auto [a, b] : g.edges())
        d[a][b] = d[b][a] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline bool connected_oracle(int n, const std::vector<Edge> & edges)
{
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int components = n;
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components <= 1;
}

/// Bridges of a connected graph: edges whose removal disconnects it.
inline std::vector<Edge> bridges_oracle(const Graph & g)
{
    std::vector<Edge> out;
    for (int i = 0; i < g.size(); ++i) {
        auto rest = g.edges();
        rest.erase(rest.begin() + i);
        if (!connected_oracle(g.order(), rest))
            out.push_back(g.edges()[i]);
    }
    return out;
}

/// reach[s][v]: some simple s-v path has pairwise distinct colors.
inline std::vector<std::vector<bool>> rainbow_oracle(const Graph & g, std::span<const Color> colors)
{
    const int n = g.order();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<bool> on_path(n, false);
    std::vector<bool> used(64, false);

    std::function<void(int, int)> dfs = [&](int s, int v) {
        reach[s][v] = true;
        on_path[v] = true;
        for (auto w : g.neighbors(v)) {
            int c = colors[g.edge_index(v, w)];
            if (on_path[w] || used[c])
                continue;
            used[c] = true;
            dfs(s, w);
            used[c] = false;
        }
        on_path[v] = false;
    };
    for (int s = 0; s < n; ++s)
        dfs(s, s);
    return reach;
}

inline bool rainbow_connected_oracle(const Graph & g, std::span<const Color> colors)
{
    auto reach = rainbow_oracle(g, colors);
    for (const auto & row : reach)
        if (std::find(row.begin(), row.end(), false) != row.end())
            return false;
    return true;
}

/// Smallest t such that some coloring in {1..t}^m is rainbow connected,
/// trying every assignment with no symmetry breaking or pruning.
inline int naive_rc(const Graph & g)
{
    const int m = g.size();
    for (int t = 1; t <= m; ++t) {
        std::vector<Color> c(m, 1);
        while (true) {
            if (rainbow_connected_oracle(g, c))
                return t;
            int i = 0;
            while (i < m && c[i] == t)
                c[i++] = 1;
            if (i == m)
                break;
            ++c[i];
        }
    }
    return m;
}

} // namespace rainbow::testing
