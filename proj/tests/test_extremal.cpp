#include "support.hpp"

#include <rainbow/error.hpp>
#include <rainbow/extremal.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace rainbow;
using namespace rainbow::testing;

TEST(GenExtremal, Sizes)
{
    auto [g3, s3] = gen_extremal(3);
    EXPECT_EQ(g3.order(), 7);
    EXPECT_EQ(g3.size(), 9);
    auto [g17, s17] = gen_extremal(17);
    EXPECT_EQ(g17.order(), 35);
    EXPECT_EQ(g17.size(), 170);
    EXPECT_THROW(gen_extremal(1), PreconditionError);
}

TEST(GenExtremal, RoleLabels)
{
    auto [g, spec] = gen_extremal(4);
    EXPECT_EQ(spec.hub(), 0);
    EXPECT_EQ(spec.middle_layer(), (VertexSet{1, 2, 3, 4}));
    EXPECT_EQ(spec.clique_layer(), (VertexSet{5, 6, 7, 8}));
    for (int i = 1; i <= 4; ++i) {
        EXPECT_TRUE(g.adjacent(spec.hub(), spec.middle(i)));
        EXPECT_TRUE(g.adjacent(spec.middle(i), spec.clique(i)));
        EXPECT_EQ(g.degree(spec.middle(i)), 2);
    }
}

TEST(GenExtremal, StructureForAllSmallK)
{
    for (int k = 2; k <= 30; ++k) {
        auto [g, spec] = gen_extremal(k);
        EXPECT_EQ(g.order(), 2 * k + 1);
        EXPECT_EQ(g.size(), 2 * k + k * (k - 1) / 2);
        EXPECT_EQ(metrics(g).diameter, 2) << "k=" << k;
        EXPECT_TRUE(bridges(g).empty()) << "k=" << k;
        EXPECT_TRUE(is_independent(g, spec.middle_layer()));
        EXPECT_TRUE(is_clique(g, spec.clique_layer()));
        if (k <= 5) {
            EXPECT_TRUE(bridges_oracle(g).empty());
        }
    }
}

TEST(CanonicalColoring, Colors)
{
    auto [g, spec] = gen_extremal(5);
    auto c = canonical_coloring(5);
    EXPECT_EQ(c.at(g, spec.hub(), spec.middle(1)), 1);
    EXPECT_EQ(c.at(g, spec.middle(1), spec.clique(1)), 2);
    for (int i = 2; i <= 5; ++i) {
        EXPECT_EQ(c.at(g, spec.hub(), spec.middle(i)), 3);
        EXPECT_EQ(c.at(g, spec.middle(i), spec.clique(i)), 4);
    }
    EXPECT_EQ(c.at(g, spec.clique(2), spec.clique(4)), 5);
}

TEST(CanonicalColoring, RainbowConnectedForAllSmallK)
{
    for (int k = 2; k <= 30; ++k) {
        auto [g, spec] = gen_extremal(k);
        auto c = canonical_coloring(k);
        EXPECT_TRUE(is_rainbow_connected(g, c).connected) << "k=" << k;
        EXPECT_EQ(c.colors_used(), 5);
    }
}

TEST(CanonicalColoring, WitnessBetweenMiddleVertices)
{
    auto [g, spec] = gen_extremal(3);
    auto cert = is_rainbow_connected(g, canonical_coloring(3));
    auto it = cert.witnesses.find({spec.middle(2), spec.middle(3)});
    ASSERT_NE(it, cert.witnesses.end());
    EXPECT_LE(it->second.size() - 1, 5u);
}

TEST(Pigeonhole, HubAndSpokeColoring)
{
    auto [g, spec] = gen_extremal(17);
    std::vector<Color> colors(g.size(), 3);
    for (int i = 1; i <= 17; ++i) {
        colors[g.edge_index(spec.hub(), spec.middle(i))] = 1;
        colors[g.edge_index(spec.middle(i), spec.clique(i))] = 2;
    }
    EdgeColoring c(4, colors);
    EXPECT_EQ(pigeonhole_pair(g, spec, c), (std::pair<int, int>{1, 2}));
}

TEST(Pigeonhole, TruncatedCanonical)
{
    auto [g, spec] = gen_extremal(17);
    auto canonical = canonical_coloring(17);
    std::vector<Color> colors(canonical.colors().begin(), canonical.colors().end());
    for (auto & x : colors)
        x = std::min(x, 4);
    auto [i, j] = pigeonhole_pair(g, spec, EdgeColoring(4, colors));
    EXPECT_GE(i, 2);
    EXPECT_GT(j, i);
}

TEST(Pigeonhole, Preconditions)
{
    auto [g5, s5] = gen_extremal(5);
    EXPECT_THROW(pigeonhole_pair(g5, s5, uniform_coloring(g5, 1)), PreconditionError);
    auto [g, spec] = gen_extremal(17);
    EXPECT_THROW(pigeonhole_pair(g, spec, canonical_coloring(17)), PreconditionError);
    EXPECT_THROW(refute_four_coloring(g, spec, canonical_coloring(17)), PreconditionError);
}

TEST(Pigeonhole, RandomFourColoringsFail)
{
    auto [g, spec] = gen_extremal(17);
    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto c = random_coloring(g, 4, rng);
        EXPECT_FALSE(is_rainbow_connected(g, c).connected);
        auto [i, j] = pigeonhole_pair(g, spec, c);
        ASSERT_LT(i, j);
        // Both 2-paths carry the same ordered color pair.
        EXPECT_EQ(c.at(g, spec.hub(), spec.middle(i)), c.at(g, spec.hub(), spec.middle(j)));
        EXPECT_EQ(c.at(g, spec.middle(i), spec.clique(i)), c.at(g, spec.middle(j), spec.clique(j)));
        auto reach = rainbow_oracle(g, c.colors());
        EXPECT_FALSE(reach[spec.middle(i)][spec.middle(j)]);

        auto refutation = refute_four_coloring(g, spec, c);
        EXPECT_EQ(refutation.pair, (std::pair<int, int>{i, j}));
        EXPECT_EQ(refutation.vertices, (VertexPair{spec.middle(i), spec.middle(j)}));
        EXPECT_FALSE(refutation.rainbow_path_exists);
    }
}

TEST(Pigeonhole, AllOnesRefutation)
{
    auto [g, spec] = gen_extremal(17);
    auto ones = uniform_coloring(g, 1);
    EXPECT_FALSE(is_rainbow_connected(g, ones).connected);
    auto r = refute_four_coloring(g, spec, ones);
    EXPECT_EQ(r.vertices, (VertexPair{spec.middle(1), spec.middle(2)}));
}
