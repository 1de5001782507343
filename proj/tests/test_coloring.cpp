#include "support.hpp"

#include <rainbow/error.hpp>
#include <rainbow/extremal.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace rainbow;
using namespace rainbow::testing;

namespace {

/// Checks every witness of a certificate: endpoints, adjacency, distinct colors, length.
void expect_valid_witnesses(const Graph & g, const EdgeColoring & c, const RainbowCertificate & cert)
{
    if (cert.connected) {
        EXPECT_EQ(cert.witnesses.size(), static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2);
    }
    for (const auto & [pair, p] : cert.witnesses) {
        ASSERT_GE(p.size(), 2u);
        EXPECT_EQ(p.front(), pair.first);
        EXPECT_EQ(p.back(), pair.second);
        EXPECT_LE(static_cast<int>(p.size()) - 1, c.num_colors());
        std::set<Color> seen;
        std::set<Vertex> visited(p.begin(), p.end());
        EXPECT_EQ(visited.size(), p.size());
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            ASSERT_TRUE(g.adjacent(p[i], p[i + 1]));
            EXPECT_TRUE(seen.insert(c.at(g, p[i], p[i + 1])).second);
        }
        EXPECT_TRUE(is_rainbow_path(g, c, p));
    }
}

} // namespace

TEST(EdgeColoring, ValidatesRange)
{
    EXPECT_THROW(EdgeColoring(2, {1, 3}), PreconditionError);
    EXPECT_THROW(EdgeColoring(2, {0}), PreconditionError);
    EXPECT_THROW(EdgeColoring(0, {}), PreconditionError);
    EdgeColoring c(5, {1, 1, 2});
    EXPECT_EQ(c.colors_used(), 2);
    EXPECT_EQ(c.num_colors(), 5);
}

TEST(ColoringFile, RoundTrip)
{
    SplitMix64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_connected(rng.between(2, 10), 20, rng);
        auto c = random_coloring(g, rng.between(1, 6), rng);
        EXPECT_EQ(read_coloring(g, write_coloring(g, c)), c);
    }
}

TEST(ColoringFile, IgnoresComments)
{
    Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
    auto c = read_coloring(triangle, "# made by hand\nnum_colors 2\nedges 3\n0 1 1  # first\n\n0 2 2\n1 2 1\n");
    EXPECT_EQ(c, EdgeColoring(2, {1, 2, 1}));
}

TEST(ColoringFile, RejectsMismatches)
{
    auto triangle = complete(3);
    auto square = cycle(4);
    auto text = write_coloring(square, EdgeColoring(2, {1, 2, 1, 2}));
    EXPECT_THROW(read_coloring(triangle, text), ParseError);

    EXPECT_THROW(read_coloring(triangle, "num_colors 2\nedges 3\n0 1 1\n0 2 1\n1 2 3\n"), ParseError);
    EXPECT_THROW(read_coloring(triangle, "num_colors 2\nedges 3\n0 1 1\n0 1 1\n1 2 1\n"), ParseError);
    EXPECT_THROW(read_coloring(triangle, "num_colors 2\nedges 3\n0 1 1\n0 2 1\n"), ParseError);
    EXPECT_THROW(read_coloring(triangle, "num_colors 2\nedges 3\n0 1 1\n0 2 1\n1 2 1\n1 2 1\n"), ParseError);
    EXPECT_THROW(read_coloring(triangle, "colors 2\n"), ParseError);
}

TEST(RainbowReachable, Examples)
{
    auto triangle = complete(3);
    auto all = rainbow_reachable(triangle, uniform_coloring(triangle, 1), 0);
    EXPECT_EQ(all.reachable, (std::vector<bool>{true, true, true}));

    auto p = path(3);
    auto same = rainbow_reachable(p, EdgeColoring(1, {1, 1}), 0);
    EXPECT_TRUE(same.reachable[1]);
    EXPECT_FALSE(same.reachable[2]);

    auto distinct = rainbow_reachable(p, EdgeColoring(2, {1, 2}), 0);
    EXPECT_TRUE(distinct.reachable[2]);
    EXPECT_EQ(distinct.witness[2], (std::vector<Vertex>{0, 1, 2}));
}

TEST(RainbowReachable, RejectsTooManyColors)
{
    auto g = path(20);
    std::vector<Color> c(19);
    std::iota(c.begin(), c.end(), 1);
    EXPECT_THROW(rainbow_reachable(g, EdgeColoring(19, c), 0), PreconditionError);
    EXPECT_NO_THROW(rainbow_reachable(g, EdgeColoring(19, c), 0, 19));
}

TEST(RainbowConnected, DistinctColorsAlwaysWork)
{
    SplitMix64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_connected(rng.between(2, 8), 14, rng);
        std::vector<Color> c(g.size());
        std::iota(c.begin(), c.end(), 1);
        EdgeColoring coloring(g.size(), c);
        auto cert = is_rainbow_connected(g, coloring);
        EXPECT_TRUE(cert.connected);
        EXPECT_FALSE(cert.violation);
        expect_valid_witnesses(g, coloring, cert);
    }
}

TEST(RainbowConnected, ExtremalExamples)
{
    auto [g, spec] = gen_extremal(17);
    auto canonical = canonical_coloring(17);
    auto cert = is_rainbow_connected(g, canonical);
    EXPECT_TRUE(cert.connected);
    expect_valid_witnesses(g, canonical, cert);

    auto ones = is_rainbow_connected(g, uniform_coloring(g, 1));
    EXPECT_FALSE(ones.connected);
    ASSERT_TRUE(ones.violation);
    // Lexicographically first unreachable pair: the hub and w_1 are at
    // distance 2. The middle pair is unreachable too.
    EXPECT_EQ(*ones.violation, (VertexPair{spec.hub(), spec.clique(1)}));
    auto reach = rainbow_oracle(g, uniform_coloring(g, 1).colors());
    EXPECT_FALSE(reach[spec.middle(1)][spec.middle(2)]);
}

TEST(RainbowConnected, RejectsDisconnected)
{
    Graph two(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(is_rainbow_connected(two, uniform_coloring(two, 1)), PreconditionError);
}

TEST(RainbowConnected, ViolationIsLexicographicallyFirstAndUnreachable)
{
    SplitMix64 rng(99);
    int violations = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_connected(rng.between(3, 8), 16, rng);
        auto c = random_coloring(g, rng.between(1, 4), rng);
        auto cert = is_rainbow_connected(g, c);
        auto reach = rainbow_oracle(g, c.colors());
        std::optional<VertexPair> first;
        for (int a = 0; a < g.order() && !first; ++a)
            for (int b = a + 1; b < g.order(); ++b)
                if (!reach[a][b]) {
                    first = VertexPair{a, b};
                    break;
                }
        EXPECT_EQ(cert.violation, first);
        EXPECT_EQ(cert.connected, !first.has_value());
        violations += first.has_value();
        expect_valid_witnesses(g, c, cert);
    }
    EXPECT_GT(violations, 0);
}

TEST(RainbowConnected, SubsetSearchMatchesPathEnumeration)
{
    SplitMix64 rng(1234);
    int discrepancies = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_connected(rng.between(2, 8), 28, rng);
        auto c = random_coloring(g, rng.between(1, 4), rng);
        auto reach = rainbow_oracle(g, c.colors());
        for (Vertex s = 0; s < g.order(); ++s) {
            auto r = rainbow_reachable(g, c, s);
            for (Vertex v = 0; v < g.order(); ++v)
                discrepancies += r.reachable[v] != reach[s][v];
        }
        bool all = rainbow_connected_oracle(g, c.colors());
        EXPECT_EQ(rainbow_connected_fast(g, c.colors(), c.num_colors()), all);
    }
    EXPECT_EQ(discrepancies, 0);
}

TEST(RainbowConnected, FastCheckWideColorCount)
{
    SplitMix64 rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_connected(rng.between(3, 9), 20, rng);
        auto c = random_coloring(g, rng.between(7, 10), rng);
        EXPECT_EQ(rainbow_connected_fast(g, c.colors(), c.num_colors()), rainbow_connected_oracle(g, c.colors()));
    }
}

TEST(RainbowConnected, ColorPermutationInvariant)
{
    SplitMix64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_connected(rng.between(3, 8), 16, rng);
        const int t = rng.between(2, 5);
        auto c = random_coloring(g, t, rng);
        auto pi = random_permutation(t, rng);
        std::vector<Color> permuted(c.colors().begin(), c.colors().end());
        for (auto & x : permuted)
            x = pi[x - 1] + 1;
        EXPECT_EQ(is_rainbow_connected(g, c).connected, is_rainbow_connected(g, EdgeColoring(t, permuted)).connected);
    }
}

TEST(RainbowConnected, VertexRelabelInvariant)
{
    SplitMix64 rng(16);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_connected(rng.between(3, 8), 16, rng);
        auto c = random_coloring(g, rng.between(2, 4), rng);
        auto perm = random_permutation(g.order(), rng);
        auto h = relabel(g, perm);
        std::vector<Color> moved(h.size());
        for (auto [a, b] : g.edges())
            moved[h.edge_index(perm[a], perm[b])] = c.at(g, a, b);
        EXPECT_EQ(is_rainbow_connected(g, c).connected,
                  is_rainbow_connected(h, EdgeColoring(c.num_colors(), moved)).connected);
    }
}

TEST(RainbowConnected, RefinementKeepsConnectivity)
{
    SplitMix64 rng(21);
    int refined = 0;
    for (int trial = 0; trial < 400 && refined < 100; ++trial) {
        auto g = random_connected(rng.between(3, 8), 16, rng);
        const int t = rng.between(2, 4);
        auto c = random_coloring(g, t, rng);
        if (!is_rainbow_connected(g, c).connected)
            continue;
        ++refined;
        const Color split = rng.between(1, t);
        std::vector<Color> finer(c.colors().begin(), c.colors().end());
        for (auto & x : finer)
            if (x == split && rng.chance(0.5))
                x = t + 1;
        auto cert = is_rainbow_connected(g, EdgeColoring(t + 1, finer));
        EXPECT_TRUE(cert.connected);
    }
    EXPECT_GT(refined, 20);
}

TEST(RainbowPath, Checks)
{
    auto g = cycle(4);
    EdgeColoring c(2, {1, 2, 1, 2}); // 01, 03, 12, 23
    EXPECT_TRUE(is_rainbow_path(g, c, std::vector<Vertex>{1, 2, 3}));
    EXPECT_FALSE(is_rainbow_path(g, c, std::vector<Vertex>{0, 1, 2}));
    EXPECT_FALSE(is_rainbow_path(g, c, std::vector<Vertex>{0, 2}));
}
